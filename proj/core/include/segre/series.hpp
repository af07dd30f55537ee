#pragma once

#include <string>
#include <vector>

#include "segre/rational.hpp"

namespace segre {

// Which formal variable a truncated series lives in. z = t(1+t) is the
// change of variable under which the closed forms are elementary; arithmetic
// never mixes tags silently.
enum class SeriesVar { t, z };

// Truncated power series with exact rational coefficients, indices 0..order.
// Operands must agree in both variable tag and truncation order.
class PowerSeries {
  public:
    PowerSeries(SeriesVar var, int order);
    static PowerSeries from_coeffs(SeriesVar var, std::vector<Rational> coeffs);
    static PowerSeries one(SeriesVar var, int order);
    // The monomial x (zero if order is 0).
    static PowerSeries identity(SeriesVar var, int order);

    SeriesVar var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    void set_coeff(int i, const Rational& v);
    const std::vector<Rational>& coeffs() const { return c_; }

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries scaled(const Rational& s) const;

    // Requires a unit constant term.
    PowerSeries inverse() const;
    // Requires constant term exactly 1.
    PowerSeries log() const;
    // Requires constant term 0.
    PowerSeries exp() const;
    // (1 + u)^alpha via exp(alpha*log); requires constant term exactly 1.
    PowerSeries pow_rational(const Rational& alpha) const;

    // Substitutes `inner` (constant term 0) for this series' variable; the
    // result carries inner's tag.
    PowerSeries compose(const PowerSeries& inner) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

    std::string to_string() const;

  private:
    SeriesVar var_;
    std::vector<Rational> c_;
};

// The branch of t with t + t^2 = z and t(0) = 0, to the given order.
PowerSeries t_of_z(int order);

// Closed form of the rank-zero Segre generating series for Chern data
// (c2, c1^2, c1.K):  (1+t)^{-c2-c1K} (1+2t)^{(c1sq+c1K)/2} pushed through
// t = t(z). Returned as a z-series.
PowerSeries rank_zero_closed_form(const Rational& c2, const Rational& c1sq,
                                  const Rational& c1k, int order);

}  // namespace segre
