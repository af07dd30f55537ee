#include <doctest.h>

#include "segre/opexpr.hpp"
#include "support/generators.hpp"

using namespace segre;

namespace {

const OpConfig kRaw{DPoly::var(), NormalizeOptions::raw(), 1};
const OpConfig kDefault{};
const DPoly kD = DPoly::var();

Element single(const Monomial& m, int level, const DPoly& c = DPoly(1)) {
    Element e(level);
    e.add_term(m, c);
    return e;
}

}  // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("delta0 expands the S-class") {
    const Element out = delta0(Element::s_class(4, 2), kRaw);
    CHECK(out.level() == 1);
    CHECK(out.size() == 4);
    for (int t = 0; t <= 3; ++t) {
        CHECK(out.coefficient(Monomial({theta1(t)}, 3 - t)) == -kD);
    }
    // with pruning, theta^1_0 and the over-range S-index die
    const Element pruned = delta0(Element::s_class(4, 2), kDefault);
    CHECK(pruned.size() == 3);
    CHECK(pruned.coefficient(Monomial({theta1(3)}, 0)) == -kD);
}

TEST_CASE("delta0 on the unit S-class is zero") {
    CHECK(delta0(Element::s_class(0, 3), kRaw).empty());
}

TEST_CASE("delta0 keeps theta factors") {
    const Element out = delta0(single(Monomial({theta1(2)}, 1), 3), kRaw);
    CHECK(out.size() == 1);
    CHECK(out.coefficient(Monomial({theta1(2), theta1(0)}, 0)) == -kD);
    CHECK(delta0(single(Monomial({theta1(2)}, 1), 3), kDefault).empty());
}

TEST_CASE("delta1 kills theta-free words") {
    CHECK(delta1(Element::s_class(5, 3), kRaw).empty());
}

TEST_CASE("delta1 on a theta^1 factor") {
    const Element out = delta1(single(Monomial({theta1(3)}, 0), 4), kRaw);
    CHECK(out.size() == 2);
    CHECK(out.coefficient(Monomial({theta0(1), theta1(0)}, 0)) == DPoly(-3));
    CHECK(out.coefficient(Monomial({theta0(0), theta1(1)}, 0)) == DPoly(-3));

    const Element pruned = delta1(single(Monomial({theta1(3)}, 0), 4), kDefault);
    CHECK(pruned.size() == 1);
    CHECK(pruned.coefficient(Monomial({theta1(1)}, 0)) == DPoly(-3));
}

TEST_CASE("delta1 on a theta^0 factor") {
    const Element out = delta1(single(Monomial({theta0(2)}, 0), 3), kRaw);
    CHECK(out.size() == 1);
    CHECK(out.coefficient(Monomial({theta0(0), theta0(0)}, 0)) == DPoly(-1));
    const Element pruned = delta1(single(Monomial({theta0(2)}, 0), 3), kDefault);
    CHECK(pruned.coefficient(Monomial::s_class(0)) == DPoly(-1));
}

TEST_CASE("delta2 consuming the S-class") {
    const Element out = delta2(single(Monomial({theta1(2)}, 1), 2), kDefault);
    CHECK(out.size() == 1);
    CHECK(out.coefficient(Monomial::s_class(0)) == kD);
}

TEST_CASE("delta2 preserving the S-class") {
    const Element out = delta2(single(Monomial({theta1(3)}, 0), 2), kDefault);
    CHECK(out.size() == 1);
    CHECK(out.coefficient(Monomial::s_class(0)) == DPoly(-3));
}

TEST_CASE("delta2 needs a theta^1 factor") {
    CHECK(delta2(Element::s_class(6, 3), kRaw).empty());
    CHECK(delta2(single(Monomial({theta0(4)}, 2), 3), kRaw).empty());
}

TEST_CASE("delta3 pairs theta^1 factors") {
    const Element sq = delta3(single(Monomial({theta1(2), theta1(2)}, 0), 3), kDefault);
    CHECK(sq.size() == 1);
    CHECK(sq.coefficient(Monomial::s_class(0)) == DPoly(1));

    CHECK(delta3(single(Monomial({theta1(2)}, 4), 3), kRaw).empty());

    const Element mixed = delta3(single(Monomial({theta1(2), theta1(3)}, 0), 3), kDefault);
    CHECK(mixed.size() == 1);
    CHECK(mixed.coefficient(Monomial({theta0(1)}, 0)) == DPoly(3));
}

TEST_CASE("level-0 inputs map to zero") {
    const Element e = single(Monomial({theta1(2)}, 1), 0);
    CHECK(delta0(e, kRaw).empty());
    CHECK(delta1(e, kRaw).empty());
    CHECK(delta2(e, kRaw).empty());
    CHECK(delta3(e, kRaw).empty());
    CHECK(pushf(e, kRaw).empty());
}

TEST_CASE("pushf is the sum of the four deltas") {
    SUBCASE("theta-free words only feed delta0") {
        const Element out = pushf(Element::s_class(4, 2), kRaw);
        CHECK(out == delta0(Element::s_class(4, 2), kRaw));
    }
    SUBCASE("examples reaching level 0") {
        const Element a = pushf(single(Monomial({theta1(2)}, 1), 1), kDefault);
        CHECK(a.size() == 1);
        CHECK(a.coefficient(Monomial::s_class(0)) == kD);

        const Element b = pushf(single(Monomial({theta1(3)}, 0), 1), kDefault);
        CHECK(b.size() == 1);
        CHECK(b.coefficient(Monomial::s_class(0)) == DPoly(-3));
    }
    SUBCASE("random words") {
        testing::MonomialGen gen;
        for (int trial = 0; trial < 50; ++trial) {
            const Element e = single(gen.random_monomial(3, 5, 5), gen.uniform(1, 4));
            Element sum = delta0(e, kRaw);
            sum.accumulate(delta1(e, kRaw));
            sum.accumulate(delta2(e, kRaw));
            sum.accumulate(delta3(e, kRaw));
            CHECK(pushf(e, kRaw) == sum);
        }
    }
}

TEST_CASE("shift_s lowers the S-index") {
    Element e(3);
    e.add_term(Monomial::s_class(3), DPoly(1));
    e.add_term(Monomial({theta0(2)}, 1), DPoly(2));
    e.add_term(Monomial::s_class(0), DPoly(5));
    const Element out = shift_s(e);
    CHECK(out.size() == 2);
    CHECK(out.coefficient(Monomial::s_class(2)) == DPoly(1));
    CHECK(out.coefficient(Monomial({theta0(2)}, 0)) == DPoly(2));
}

TEST_CASE("degree drops by exactly two") {
    testing::MonomialGen gen;
    for (int j = 0; j <= 3; ++j) {
        int nontrivial = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const Monomial m = gen.random_monomial(4, 6, 6, j >= 2 ? 2 : 0);
            const Element out = apply_delta(j, single(m, gen.uniform(1, 5)), kRaw);
            if (out.empty()) continue;
            ++nontrivial;
            CHECK(out.is_homogeneous(m.degree() - 2));
        }
        CHECK(nontrivial > 100);
    }
}

TEST_CASE("signature shifts by (1, j)") {
    testing::MonomialGen gen;
    for (int j = 0; j <= 3; ++j) {
        int nontrivial = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const Monomial m = gen.random_monomial(4, 6, 6, j >= 2 ? 2 : 0);
            const auto sig = m.signature();
            const int level = gen.uniform(1, 5);
            const Element out = apply_delta(j, single(m, level), kRaw);
            if (out.empty()) continue;
            ++nontrivial;
            CHECK(out.level() == level - 1);
            for (const auto& [mon, coeff] : out.terms()) {
                CHECK(mon.signature().width == sig.width + 1);
                CHECK(mon.signature().theta0_count == sig.theta0_count + j);
            }
        }
        CHECK(nontrivial > 100);
    }
}

TEST_CASE("delta0 factors through the S-part") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 100; ++trial) {
        const Monomial prefix = gen.random_monomial(3, 5, 0).with_s_index(0);
        const int m = gen.uniform(0, 6);
        const int level = gen.uniform(1, 5);
        const Element lhs = delta0(single(prefix.with_s_index(m), level), kRaw);
        const Element rhs = mul_elements(single(prefix, level - 1),
                                         delta0(Element::s_class(m, level), kRaw),
                                         NormalizeOptions::raw());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("delta2/delta0 commutator is (d-3)-divisible") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 200; ++trial) {
        const OpConfig& cfg = trial % 2 ? kRaw : kDefault;
        const Element b = single(gen.random_monomial(3, 5, 5), gen.uniform(2, 5));
        Element comm = delta2(delta0(b, cfg), cfg);
        comm.accumulate(-delta0(delta2(b, cfg), cfg));
        for (const auto& [mon, coeff] : comm.terms()) {
            CHECK(coeff.divisible_by_d_minus_3());
        }
    }
}

TEST_CASE("shift_s commutes with the deltas") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 100; ++trial) {
        const int level = gen.uniform(1, 5);
        // delta0: asserted on theta-free words only
        const Element s = Element::s_class(gen.uniform(0, 8), level);
        CHECK(delta0(shift_s(s), kRaw) == shift_s(delta0(s, kRaw)));
        // delta1..3: on all words
        const Element e = single(gen.random_monomial(4, 6, 6, 2), level);
        for (int j = 1; j <= 3; ++j) {
            CHECK(apply_delta(j, shift_s(e), kRaw) == shift_s(apply_delta(j, e, kRaw)));
        }
    }
}

// Position-level ordered pairs, halved; checks the multiset pair counting.
static Element delta3_ordered_oracle(const Element& e, const OpConfig& cfg) {
    if (e.level() == 0) return Element(0);
    Element out(e.level() - 1);
    for (const auto& [mon, coeff] : e.terms()) {
        const auto& ts = mon.thetas();
        for (std::size_t p = 0; p < ts.size(); ++p) {
            for (std::size_t q = 0; q < ts.size(); ++q) {
                if (p == q) continue;
                if (ts[p].kind != ThetaKind::T1 || ts[q].kind != ThetaKind::T1) continue;
                const int lj = ts[p].index;
                const int lk = ts[q].index;
                std::vector<ThetaSym> base;
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    if (i != p && i != q) base.push_back(ts[i]);
                }
                for (int t = 0; t <= lk - 2; ++t) {
                    for (int a = 0; a <= lj - 2; ++a) {
                        auto word = base;
                        word.push_back(theta0(lk - t - 2));
                        word.push_back(theta0(lj - a - 2));
                        word.push_back(theta0(a + t));
                        const Rational c(static_cast<long>(t + 1) * (a + 1), 2);
                        if (auto nm = normalize_monomial(Monomial(word, mon.s_index()),
                                                         out.level(), cfg.norm)) {
                            out.add_term(*nm, coeff.scaled(c));
                        }
                    }
                }
            }
        }
    }
    return out;
}

TEST_CASE("delta3 pair multiplicities match the ordered expansion") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 100; ++trial) {
        const Element e = single(gen.random_monomial(5, 5, 3, 2), gen.uniform(1, 4));
        CHECK(delta3(e, kRaw) == delta3_ordered_oracle(e, kRaw));
    }
    // repeated symbols exercise the C(mu,2) path
    const Element rep = single(Monomial({theta1(3), theta1(3), theta1(3)}, 1), 4);
    CHECK(delta3(rep, kRaw) == delta3_ordered_oracle(rep, kRaw));
}

TEST_CASE("operators are linear over coefficients") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 50; ++trial) {
        const Monomial m = gen.random_monomial(3, 5, 5, 1);
        const DPoly c = gen.random_dpoly();
        const int level = gen.uniform(1, 4);
        for (int j = 0; j <= 3; ++j) {
            CHECK(apply_delta(j, single(m, level, c), kRaw) ==
                  apply_delta(j, single(m, level), kRaw).scaled(c));
        }
    }
}

TEST_CASE("thread fan-out is exact") {
    OpConfig par = kDefault;
    par.threads = 4;
    const Element start = Element::s_class(10, 5);
    Element seq = start;
    Element conc = start;
    for (int k = 0; k < 5; ++k) {
        seq = pushf(seq, kDefault);
        conc = pushf(conc, par);
        CHECK(seq == conc);
    }
}

TEST_SUITE_END();
