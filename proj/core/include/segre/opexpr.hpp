#pragma once

#include <string>
#include <vector>

#include "segre/operators.hpp"

namespace segre {

// A composable operator value. Compose applies right-to-left; Ad(j, x) is the
// commutator delta_j∘x - x∘delta_j. A value tree (not a closure) so chains
// can be enumerated, rendered and used as cache keys.
class OpExpr {
  public:
    enum class Kind { Base, Sum, Compose, Ad };

    static OpExpr base(int j);
    static OpExpr sum(std::vector<OpExpr> parts);
    static OpExpr compose(std::vector<OpExpr> parts);
    static OpExpr ad(int j, OpExpr inner);

    Kind kind() const { return kind_; }
    int delta_index() const { return j_; }
    const std::vector<OpExpr>& parts() const { return parts_; }
    const OpExpr& inner() const { return parts_.front(); }

    // Canonical text, e.g. "Ad(d0, Ad(d1, d2)) + d3∘d1"; the empty sum is
    // "0", the empty composition "id".
    std::string render() const;

  private:
    OpExpr(Kind k, int j, std::vector<OpExpr> parts)
        : kind_(k), j_(j), parts_(std::move(parts)) {}

    Kind kind_;
    int j_;
    std::vector<OpExpr> parts_;
};

Element apply_op(const OpExpr& op, const Element& e, const OpConfig& cfg);

// Sum over all delta chains of length k with indices from `alphabet` summing
// to r. k = 0 yields the identity when r = 0 and the empty sum otherwise.
OpExpr sum_over_chains(int k, int r, const std::vector<int>& alphabet = {0, 1, 2, 3});

// Iterated commutator wrapper: Ad_{d_{prefix[0]}} ... Ad_{d_{prefix.back()}}(inner).
OpExpr ad_wrap(const std::vector<int>& prefix, OpExpr inner);

// (Ad_{delta_j})^k applied to inner.
OpExpr ad_power(int j, int k, OpExpr inner);

// The degree-(k+2) combination
//   Ad_{d0}(Ad_{d1})^k(d2) + sum_{s=0}^{k-1} Ad_{d0}(Ad_{d1})^{k-1-s} Ad_{d0}(Ad_{d1})^s(d3)
// that factors through the S-part of any word.
OpExpr xi_operator(int k);

}  // namespace segre
