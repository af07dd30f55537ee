#pragma once

#include "segre/element.hpp"

namespace segre {

// Shared knobs for every operator application.
//   d:       the curve-degree coefficient injected by the S-consuming terms;
//            DPoly::var() keeps it symbolic, a constant runs the fixed-degree
//            fast path.
//   norm:    rewrite rules applied to each output monomial.
//   threads: monomial-level fan-out; results are identical for any count.
struct OpConfig {
    DPoly d = DPoly::var();
    NormalizeOptions norm{};
    int threads = 1;
};

// The four graded pieces of the pushforward, each lowering the level by one
// and the degree by two. Inputs at level 0 map to zero.
//
// On a word b = theta^0_{l_1}..theta^0_{l_i} * theta^1_{l_{i+1}}..theta^1_{l_w} * S_m:
//
//   delta0: S_m -> -d * sum_{t=0}^{m-1} theta^1_t S_{m-t-1}, thetas kept.
//
//   delta1: each theta^1_l occurrence -> -l * sum_{t=0}^{l-2} theta^0_{l-t-2} theta^1_t;
//           each theta^0_l occurrence -> -sum_{t=0}^{l-2} (t+1) theta^0_{l-t-2} theta^0_t;
//           S_m kept.
//
//   delta2: each theta^1_l occurrence ->
//             d * sum_{t=0}^{l-2} sum_{a=0}^{m-1} (t+1) theta^0_{l-t-2} theta^0_{a+t} S_{m-a-1}
//           - 3 * sum_{t=0}^{l-3} (t+1)(t+2)/2 * theta^0_{l-t-3} theta^0_t S_m.
//
//   delta3: each unordered pair of theta^1 occurrences (l_j, l_k) ->
//             sum_{t=0}^{l_k-2} sum_{a=0}^{l_j-2} (t+1)(a+1)
//               theta^0_{l_k-t-2} theta^0_{l_j-a-2} theta^0_{a+t}, S_m kept.
Element delta0(const Element& e, const OpConfig& cfg);
Element delta1(const Element& e, const OpConfig& cfg);
Element delta2(const Element& e, const OpConfig& cfg);
Element delta3(const Element& e, const OpConfig& cfg);
Element apply_delta(int j, const Element& e, const OpConfig& cfg);

// The full pushforward delta0 + delta1 + delta2 + delta3, in one expansion
// pass.
Element pushf(const Element& e, const OpConfig& cfg);

// S-index lowering map: S_m -> S_{m-1}, words with S_0 die. Level unchanged.
Element shift_s(const Element& e);

}  // namespace segre
