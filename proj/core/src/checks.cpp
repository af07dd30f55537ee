#include "segre/checks.hpp"

#include <stdexcept>

namespace segre {

std::string CheckWitness::describe() const {
    return context + ": monomial " + monomial.render() + ", coefficient " +
           coefficient.to_string();
}

CheckResult divisibility_check(const Element& e, bool also_by_d,
                               const std::string& context) {
    for (const auto& [mon, coeff] : e.terms()) {
        const auto [quot, rem] = coeff.divmod_d_minus_3();
        if (!rem.is_zero() || (also_by_d && !coeff.divisible_by_d())) {
            return CheckResult::fail({context, mon, coeff});
        }
    }
    return CheckResult::pass();
}

CheckResult check_chain_vanishing(int k, int r, int m, int n, const OpConfig& cfg) {
    if (r <= k) throw std::invalid_argument("check_chain_vanishing: needs r > k");
    const Element out =
        apply_op(sum_over_chains(k, r), Element::s_class(m, n), cfg);
    if (out.empty()) return CheckResult::pass();
    const auto& [mon, coeff] = *out.terms().begin();
    return CheckResult::fail({"chain-vanishing k=" + std::to_string(k) +
                                  " r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                  " n=" + std::to_string(n),
                              mon, coeff});
}

CheckResult check_main_theorem(int k, int m, int n, const OpConfig& cfg) {
    if (k < 1 || m < 1 || n < 1 || n < k) {
        throw std::invalid_argument("check_main_theorem: needs k,m,n >= 1 and n >= k");
    }
    const Element out =
        apply_op(sum_over_chains(k, k), Element::s_class(m, n), cfg);
    return divisibility_check(out, false,
                              "main-theorem k=" + std::to_string(k) +
                                  " m=" + std::to_string(m) + " n=" + std::to_string(n));
}

CheckResult check_wkmain(int k, int m, int n, const OpConfig& cfg) {
    if (k < 0 || m < 1 || n < 1) {
        throw std::invalid_argument("check_wkmain: needs k >= 0 and m,n >= 1");
    }
    std::vector<OpExpr> parts;
    {
        std::vector<OpExpr> chain;
        chain.push_back(OpExpr::base(2));
        for (int i = 0; i < k; ++i) chain.push_back(OpExpr::base(1));
        chain.push_back(OpExpr::base(0));
        parts.push_back(OpExpr::compose(std::move(chain)));
    }
    for (int s = 0; s <= k - 1; ++s) {
        std::vector<OpExpr> chain;
        chain.push_back(OpExpr::base(3));
        for (int i = 0; i < k - 1 - s; ++i) chain.push_back(OpExpr::base(1));
        chain.push_back(OpExpr::base(0));
        for (int i = 0; i < s; ++i) chain.push_back(OpExpr::base(1));
        chain.push_back(OpExpr::base(0));
        parts.push_back(OpExpr::compose(std::move(chain)));
    }
    const Element out =
        apply_op(OpExpr::sum(std::move(parts)), Element::s_class(m, n), cfg);
    return divisibility_check(out, /*also_by_d=*/k >= 1,
                              "wkmain k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                  " n=" + std::to_string(n));
}

CheckResult check_xi(int k, int m, int n, const std::vector<int>& ad_prefix,
                     const OpConfig& cfg) {
    if (k < 0) throw std::invalid_argument("check_xi: negative k");
    const OpExpr expr = ad_wrap(ad_prefix, xi_operator(k));
    const Element out = apply_op(expr, Element::s_class(m, n), cfg);
    std::string ctx = "xi k=" + std::to_string(k) + " m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + " prefix=[";
    for (std::size_t i = 0; i < ad_prefix.size(); ++i) {
        if (i) ctx += ",";
        ctx += std::to_string(ad_prefix[i]);
    }
    ctx += "]";
    return divisibility_check(out, false, ctx);
}

namespace {

OpExpr ii_combination(int k, int r, const std::vector<int>& alphabet) {
    std::vector<OpExpr> parts;
    parts.push_back(
        OpExpr::compose({OpExpr::base(2), sum_over_chains(k, r, alphabet)}));
    parts.push_back(
        OpExpr::compose({OpExpr::base(3), sum_over_chains(k, r - 1, alphabet)}));
    return OpExpr::sum(std::move(parts));
}

}  // namespace

CheckResult check_i_and_ii(int k, int r, int m, int n, const OpConfig& cfg) {
    if (k < 0 || r < 0) throw std::invalid_argument("check_i_and_ii: needs k,r >= 0");
    const Element src = Element::s_class(m, n);
    const std::string suffix = " k=" + std::to_string(k) + " r=" + std::to_string(r) +
                               " m=" + std::to_string(m) + " n=" + std::to_string(n);

    const Element full = apply_op(ii_combination(k, r, {0, 1, 2, 3}), src, cfg);
    if (auto res = divisibility_check(full, false, "II" + suffix); !res.ok()) return res;

    const Element restricted = apply_op(ii_combination(k, r, {0, 1}), src, cfg);
    return divisibility_check(restricted, false, "I" + suffix);
}

bool lemma_combi(int k, int M) {
    if (M < 0 || M > k - 1) throw std::invalid_argument("lemma_combi: needs 0 <= M <= k-1");
    mpz_class sum = 0;
    for (int s = 0; s <= M; ++s) {
        const int i = M - s;
        sum += binomial(static_cast<unsigned long>(k - s - 1), static_cast<unsigned long>(i));
    }
    return sum == binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(M));
}

namespace {

void tuples_summing_to(int len, int total, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (len == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        tuples_summing_to(len - 1, total - v, cur, out);
        cur.pop_back();
    }
}

Rational rising_product(const Rational& start, int count) {
    Rational prod(1);
    for (int j = 0; j < count; ++j) prod *= start + Rational(j);
    return prod;
}

}  // namespace

bool lemma_combi2(int a, const Rational& N, int m, int k,
                  const std::function<Rational(int)>& theta_value) {
    if (a < 0 || m < 0 || k < 0) {
        throw std::invalid_argument("lemma_combi2: needs a,m,k >= 0");
    }
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    tuples_summing_to(k + 1, m, cur, tuples);

    Rational lhs(0);
    Rational rhs(0);
    for (const auto& t : tuples) {
        Rational theta_prod(1);
        for (int ai : t) theta_prod *= theta_value(ai);

        long sum_all = 0;
        for (int ai : t) sum_all += ai + 1;

        // left side: split at M, the tail product carries N+1
        for (int M = 0; M <= k; ++M) {
            long head = 0;
            for (int i = 0; i < M; ++i) head += t[static_cast<std::size_t>(i)] + 1;
            long tail = 0;
            for (int i = M; i < k; ++i) tail += t[static_cast<std::size_t>(i)] + 1;
            const Rational p1 = rising_product(Rational(a + 1 + head), M);
            const Rational p2 =
                rising_product(Rational(t[static_cast<std::size_t>(k)] + 1 + tail) + N +
                                   Rational(1),
                               k - M);
            lhs += N *
                   Rational(mpz_class(binomial(static_cast<unsigned long>(k + 1),
                                               static_cast<unsigned long>(M)))) *
                   theta_prod * p1 * p2;
        }

        const Rational base(a + 1 + sum_all);
        rhs += theta_prod * (rising_product(base + N, k + 1) - rising_product(base, k + 1));
    }
    return lhs == rhs;
}

}  // namespace segre
