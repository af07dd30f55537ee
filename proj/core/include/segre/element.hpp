#pragma once

#include <map>
#include <optional>
#include <string>

#include "segre/dpoly.hpp"
#include "segre/symbols.hpp"

namespace segre {

// Rewrite rules applied to monomials. Every rule is a vanishing or unit
// identity of the underlying classes:
//   drop_unit_theta:   theta^0_0 = 1, remove the factor
//   dimension_pruning: classes outside degrees 0..2n vanish (incl. theta^1_0)
//   kill_theta1:       s_1 of the universal ideal sheaf is zero, so any
//                      index-1 theta kills the monomial (optional rule)
//   level0_rules:      on the point Hilbert scheme every theta^1 vanishes and
//                      only the unit S-class survives
struct NormalizeOptions {
    bool drop_unit_theta = true;
    bool dimension_pruning = true;
    bool kill_theta1 = false;
    bool level0_rules = true;

    // No rewriting at all; raw operator output for grading checks.
    static NormalizeOptions raw() { return {false, false, false, false}; }

    friend bool operator==(const NormalizeOptions&, const NormalizeOptions&) = default;
};

// Applies the rules to one monomial at the given level. Empty result means
// the monomial vanishes.
std::optional<Monomial> normalize_monomial(const Monomial& m, int level,
                                           const NormalizeOptions& opts);

// A formal class at a fixed level n: a finite map from monomials to DPoly
// coefficients. Zero coefficients are never stored.
class Element {
  public:
    using TermMap = std::map<Monomial, DPoly>;

    explicit Element(int level = 0);

    // The single class S_m at the given level, coefficient 1.
    static Element s_class(int m, int level);

    int level() const { return level_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Zero if absent.
    DPoly coefficient(const Monomial& m) const;

    // Merges, dropping a term whose coefficient cancels to zero.
    void add_term(const Monomial& m, const DPoly& c);

    // Adds `other` into this element. Empty elements are level-agnostic
    // zeros; otherwise the levels must agree.
    Element& accumulate(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a.accumulate(b); }

    Element& scale(const DPoly& s);
    Element scaled(const DPoly& s) const { Element r(*this); r.scale(s); return r; }
    Element operator-() const { return scaled(DPoly(Rational(-1))); }
    friend Element operator-(Element a, const Element& b) { return a.accumulate(-b); }

    Element normalized(const NormalizeOptions& opts) const;

    bool is_homogeneous(int degree) const;

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::string render() const;

  private:
    int level_ = 0;
    TermMap terms_;
};

// Product of two classes at the same level: theta multisets merge, S-indices
// add. At most one operand may carry non-unit S-classes; the basis has only
// one S-factor per word.
Element mul_elements(const Element& a, const Element& b,
                     const NormalizeOptions& opts = {});

}  // namespace segre
