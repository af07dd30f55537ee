#pragma once

#include <functional>
#include <vector>

#include "segre/series.hpp"

namespace segre {

// Log-space combinations extracted from per-degree generating series: with
// S_d(z) the integral series of the degree-d curve class,
//   log S_d(z) = d^2 * Q(z) + d * L(z) + C(z).
// One surface cannot separate the five universal factors further; Q, L, C
// are what the plane determines.
struct UniversalFit {
    PowerSeries q;
    PowerSeries l;
    PowerSeries c;
};

// Solves the coefficient-wise exact linear system from >= 3 distinct integer
// degrees (3 itself is excluded: its series is identically 1 and carries no
// information). Extra degrees must be exactly consistent; inconsistency or a
// singular system throws.
UniversalFit fit_universal_exponents(
    const std::vector<int>& degrees, int order,
    const std::function<Rational(int n, int d)>& integral_value);

}  // namespace segre
