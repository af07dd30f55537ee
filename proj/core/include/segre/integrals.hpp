#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>

#include "segre/operators.hpp"

namespace segre {

// One computed integral: the degree-2n tautological Segre number of the
// rank-zero class of a degree-d plane curve, as a polynomial in d.
// chain_count reports the widest intermediate expansion.
struct IntegralRecord {
    int n = 0;
    DPoly value;
    std::size_t chain_count = 0;
};

// Runs the pushforward recursion: start from S_{2n} at level n, apply the
// full pushforward n times down to level 0, read off the unit-monomial
// coefficient and divide by n!.
//
// Internal-consistency gates (violations throw std::runtime_error):
//   - after k steps the element is homogeneous of degree 2(n-k);
//   - the level-0 element carries no symbols besides the unit monomial;
//   - the pre-division value has integer coefficients, so the n! division is
//     exact in the integral sense.
class IntegralEngine {
  public:
    explicit IntegralEngine(OpConfig cfg = {});

    const OpConfig& config() const { return cfg_; }

    IntegralRecord integral(int n);
    DPoly integral_poly(int n) { return integral(n).value; }

  private:
    OpConfig cfg_;
    // (n, k) -> k-fold pushforward of S_{2n} from level n; safe for
    // concurrent integral() calls.
    std::map<std::pair<int, int>, Element> memo_;
    std::map<std::pair<int, int>, std::size_t> widest_;
    std::mutex mu_;
};

}  // namespace segre
