#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "segre/opexpr.hpp"

namespace segre {

// Failure evidence for a divisibility or vanishing check.
struct CheckWitness {
    std::string context;
    Monomial monomial;
    DPoly coefficient;

    std::string describe() const;
};

struct CheckResult {
    std::optional<CheckWitness> failure;

    bool ok() const { return !failure.has_value(); }
    explicit operator bool() const { return ok(); }

    static CheckResult pass() { return {}; }
    static CheckResult fail(CheckWitness w) { return {std::move(w)}; }
};

// Every coefficient of e divisible by (d-3); with `also_by_d`, by d(d-3).
CheckResult divisibility_check(const Element& e, bool also_by_d,
                               const std::string& context);

// Chains of length k with index sum r > k annihilate S_m(n) as formal words.
CheckResult check_chain_vanishing(int k, int r, int m, int n, const OpConfig& cfg = {});

// The full weight-k chain sum applied to S_m(n) is (d-3)-divisible
// coefficient-wise.
CheckResult check_main_theorem(int k, int m, int n, const OpConfig& cfg = {});

// d2*(d1)^k*d0 + sum_s d3*(d1)^{k-1-s}*d0*(d1)^s*d0 on S_m(n) is
// (d-3)-divisible; for k >= 1 the combination is divisible by d(d-3).
CheckResult check_wkmain(int k, int m, int n, const OpConfig& cfg = {});

// Ad-prefixed Xi(k) on S_m(n) is (d-3)-divisible.
CheckResult check_xi(int k, int m, int n, const std::vector<int>& ad_prefix = {},
                     const OpConfig& cfg = {});

// Both the unrestricted combination II(k,r) and its {0,1}-alphabet
// restriction I(k,r) on S_m(n) are (d-3)-divisible.
CheckResult check_i_and_ii(int k, int r, int m, int n, const OpConfig& cfg = {});

// sum_{s+i=M} C(k-s-1, i) == C(k, M), brute force.
bool lemma_combi(int k, int M);

// Two-sided evaluation of the product-rearrangement identity that collapses
// the special chain combination, with theta^0_a replaced by an arbitrary
// scalar function and N an arbitrary rational.
bool lemma_combi2(int a, const Rational& N, int m, int k,
                  const std::function<Rational(int)>& theta_value);

}  // namespace segre
