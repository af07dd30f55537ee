#include "segre/opexpr.hpp"

#include <sstream>
#include <stdexcept>

namespace segre {

OpExpr OpExpr::base(int j) {
    if (j < 0 || j > 3) throw std::invalid_argument("OpExpr: delta index out of 0..3");
    return OpExpr(Kind::Base, j, {});
}

OpExpr OpExpr::sum(std::vector<OpExpr> parts) {
    return OpExpr(Kind::Sum, -1, std::move(parts));
}

OpExpr OpExpr::compose(std::vector<OpExpr> parts) {
    return OpExpr(Kind::Compose, -1, std::move(parts));
}

OpExpr OpExpr::ad(int j, OpExpr inner) {
    if (j < 0 || j > 3) throw std::invalid_argument("OpExpr: delta index out of 0..3");
    std::vector<OpExpr> p;
    p.push_back(std::move(inner));
    return OpExpr(Kind::Ad, j, std::move(p));
}

std::string OpExpr::render() const {
    switch (kind_) {
        case Kind::Base:
            return "d" + std::to_string(j_);
        case Kind::Sum: {
            if (parts_.empty()) return "0";
            std::ostringstream os;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) os << " + ";
                os << parts_[i].render();
            }
            return os.str();
        }
        case Kind::Compose: {
            if (parts_.empty()) return "id";
            std::ostringstream os;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) os << "∘";
                const bool wrap = parts_[i].kind_ == Kind::Sum;
                if (wrap) os << "(";
                os << parts_[i].render();
                if (wrap) os << ")";
            }
            return os.str();
        }
        case Kind::Ad:
            return "Ad(d" + std::to_string(j_) + ", " + parts_.front().render() + ")";
    }
    return {};
}

Element apply_op(const OpExpr& op, const Element& e, const OpConfig& cfg) {
    switch (op.kind()) {
        case OpExpr::Kind::Base:
            return apply_delta(op.delta_index(), e, cfg);
        case OpExpr::Kind::Sum: {
            Element acc(e.level());
            for (const auto& p : op.parts()) acc.accumulate(apply_op(p, e, cfg));
            return acc;
        }
        case OpExpr::Kind::Compose: {
            Element cur = e;
            for (auto it = op.parts().rbegin(); it != op.parts().rend(); ++it) {
                cur = apply_op(*it, cur, cfg);
                if (cur.empty()) break;
            }
            return cur;
        }
        case OpExpr::Kind::Ad: {
            const int j = op.delta_index();
            Element lhs = apply_delta(j, apply_op(op.inner(), e, cfg), cfg);
            Element rhs = apply_op(op.inner(), apply_delta(j, e, cfg), cfg);
            return lhs.accumulate(-rhs);
        }
    }
    return Element(e.level());
}

namespace {

void enumerate_tuples(int k, int r, const std::vector<int>& alphabet,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (r == 0) out.push_back(cur);
        return;
    }
    for (int a : alphabet) {
        if (a > r) continue;
        cur.push_back(a);
        enumerate_tuples(k - 1, r - a, alphabet, cur, out);
        cur.pop_back();
    }
}

}  // namespace

OpExpr sum_over_chains(int k, int r, const std::vector<int>& alphabet) {
    if (k < 0 || r < 0) return OpExpr::sum({});
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    enumerate_tuples(k, r, alphabet, cur, tuples);
    std::vector<OpExpr> parts;
    parts.reserve(tuples.size());
    for (const auto& tup : tuples) {
        std::vector<OpExpr> chain;
        chain.reserve(tup.size());
        for (int j : tup) chain.push_back(OpExpr::base(j));
        parts.push_back(OpExpr::compose(std::move(chain)));
    }
    return OpExpr::sum(std::move(parts));
}

OpExpr ad_wrap(const std::vector<int>& prefix, OpExpr inner) {
    OpExpr out = std::move(inner);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        out = OpExpr::ad(*it, std::move(out));
    }
    return out;
}

OpExpr ad_power(int j, int k, OpExpr inner) {
    OpExpr out = std::move(inner);
    for (int i = 0; i < k; ++i) out = OpExpr::ad(j, std::move(out));
    return out;
}

OpExpr xi_operator(int k) {
    if (k < 0) throw std::invalid_argument("xi_operator: negative degree");
    std::vector<OpExpr> parts;
    parts.push_back(OpExpr::ad(0, ad_power(1, k, OpExpr::base(2))));
    for (int s = 0; s <= k - 1; ++s) {
        parts.push_back(OpExpr::ad(
            0, ad_power(1, k - 1 - s, OpExpr::ad(0, ad_power(1, s, OpExpr::base(3))))));
    }
    return OpExpr::sum(std::move(parts));
}

}  // namespace segre
