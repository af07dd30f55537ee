#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "segre/rational.hpp"

namespace segre {

// Univariate polynomial in the formal curve degree d, dense rational
// coefficients in ascending order, no trailing zeros. The zero polynomial is
// the empty coefficient sequence.
class DPoly {
  public:
    DPoly() = default;
    DPoly(const Rational& c);  // NOLINT: implicit constant embedding
    DPoly(long c) : DPoly(Rational(c)) {}
    explicit DPoly(std::vector<Rational> ascending);
    DPoly(std::initializer_list<Rational> ascending)
        : DPoly(std::vector<Rational>(ascending)) {}

    // The indeterminate d.
    static DPoly var();

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_integral() const;  // all coefficients integers

    DPoly& operator+=(const DPoly& o);
    DPoly& operator-=(const DPoly& o);
    friend DPoly operator+(DPoly a, const DPoly& b) { return a += b; }
    friend DPoly operator-(DPoly a, const DPoly& b) { return a -= b; }
    friend DPoly operator*(const DPoly& a, const DPoly& b);
    DPoly& operator*=(const DPoly& o) { return *this = *this * o; }
    DPoly operator-() const;

    DPoly& scale(const Rational& s);
    DPoly scaled(const Rational& s) const { DPoly r(*this); r.scale(s); return r; }

    friend bool operator==(const DPoly& a, const DPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DPoly& a, const DPoly& b) { return !(a == b); }

    Rational eval_at(const Rational& d0) const;

    // p = quotient*(d-3) + remainder with the remainder constant.
    std::pair<DPoly, Rational> divmod_d_minus_3() const;
    bool divisible_by_d_minus_3() const { return divmod_d_minus_3().second.is_zero(); }
    // Constant term zero, i.e. d | p.
    bool divisible_by_d() const { return c_.empty() || c_[0].is_zero(); }

    std::string to_string(const std::string& sym = "d") const;

  private:
    void trim();

    std::vector<Rational> c_;
};

}  // namespace segre
