#include "segre/series.hpp"

#include <sstream>
#include <stdexcept>

namespace segre {

namespace {

void require_same(const PowerSeries& a, const PowerSeries& b) {
    if (a.var() != b.var()) {
        throw std::invalid_argument("PowerSeries: mixing variable tags");
    }
    if (a.order() != b.order()) {
        throw std::invalid_argument("PowerSeries: mismatched truncation orders");
    }
}

}  // namespace

PowerSeries::PowerSeries(SeriesVar var, int order) : var_(var) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries PowerSeries::from_coeffs(SeriesVar var, std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("PowerSeries: empty coefficients");
    PowerSeries s(var, static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
}

PowerSeries PowerSeries::one(SeriesVar var, int order) {
    PowerSeries s(var, order);
    s.c_[0] = Rational(1);
    return s;
}

PowerSeries PowerSeries::identity(SeriesVar var, int order) {
    PowerSeries s(var, order);
    if (order >= 1) s.c_[1] = Rational(1);
    return s;
}

const Rational& PowerSeries::coeff(int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("PowerSeries: coefficient index");
    return c_[static_cast<std::size_t>(i)];
}

void PowerSeries::set_coeff(int i, const Rational& v) {
    if (i < 0 || i > order()) throw std::out_of_range("PowerSeries: coefficient index");
    c_[static_cast<std::size_t>(i)] = v;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same(a, b);
    PowerSeries out(a.var(), a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            out.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

PowerSeries PowerSeries::scaled(const Rational& s) const {
    PowerSeries out(*this);
    for (auto& c : out.c_) c *= s;
    return out;
}

PowerSeries PowerSeries::inverse() const {
    if (c_[0].is_zero()) {
        throw std::domain_error("PowerSeries::inverse: zero constant term");
    }
    PowerSeries out(var_, order());
    out.c_[0] = Rational(1) / c_[0];
    for (int k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) {
            acc += c_[static_cast<std::size_t>(j)] * out.c_[static_cast<std::size_t>(k - j)];
        }
        out.c_[static_cast<std::size_t>(k)] = -acc / c_[0];
    }
    return out;
}

PowerSeries PowerSeries::log() const {
    if (c_[0] != Rational(1)) {
        throw std::domain_error("PowerSeries::log: constant term must be 1");
    }
    // k*l_k = k*a_k - sum_{j=1}^{k-1} j*l_j*a_{k-j}
    PowerSeries out(var_, order());
    for (int k = 1; k <= order(); ++k) {
        Rational acc = c_[static_cast<std::size_t>(k)] * Rational(k);
        for (int j = 1; j < k; ++j) {
            acc -= out.c_[static_cast<std::size_t>(j)] * Rational(j) *
                   c_[static_cast<std::size_t>(k - j)];
        }
        out.c_[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return out;
}

PowerSeries PowerSeries::exp() const {
    if (!c_[0].is_zero()) {
        throw std::domain_error("PowerSeries::exp: constant term must be 0");
    }
    // k*e_k = sum_{j=1}^{k} j*a_j*e_{k-j}
    PowerSeries out = one(var_, order());
    for (int k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) {
            acc += c_[static_cast<std::size_t>(j)] * Rational(j) *
                   out.c_[static_cast<std::size_t>(k - j)];
        }
        out.c_[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return out;
}

PowerSeries PowerSeries::pow_rational(const Rational& alpha) const {
    if (c_[0] != Rational(1)) {
        throw std::domain_error("PowerSeries::pow_rational: constant term must be 1");
    }
    return log().scaled(alpha).exp();
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (inner.order() != order()) {
        throw std::invalid_argument("PowerSeries::compose: mismatched truncation orders");
    }
    if (!inner.c_[0].is_zero()) {
        throw std::domain_error("PowerSeries::compose: inner constant term must be 0");
    }
    // Horner from the top coefficient down.
    PowerSeries out(inner.var(), order());
    for (int i = order(); i >= 0; --i) {
        out = out * inner;
        out.c_[0] += c_[static_cast<std::size_t>(i)];
    }
    return out;
}

std::string PowerSeries::to_string() const {
    const char* sym = var_ == SeriesVar::t ? "t" : "z";
    std::ostringstream os;
    os << "[" << sym << "]";
    for (int i = 0; i <= order(); ++i) {
        os << (i ? ", " : " ") << c_[static_cast<std::size_t>(i)].to_string();
    }
    return os.str();
}

PowerSeries t_of_z(int order) {
    if (order < 1) throw std::invalid_argument("t_of_z: needs order >= 1");
    // t = (-1 + sqrt(1+4z))/2
    PowerSeries one_plus_4z(SeriesVar::z, order);
    one_plus_4z.set_coeff(0, Rational(1));
    one_plus_4z.set_coeff(1, Rational(4));
    PowerSeries root = one_plus_4z.pow_rational(Rational(1, 2));
    root.set_coeff(0, root.coeff(0) - Rational(1));
    return root.scaled(Rational(1, 2));
}

PowerSeries rank_zero_closed_form(const Rational& c2, const Rational& c1sq,
                                  const Rational& c1k, int order) {
    if (order == 0) return PowerSeries::one(SeriesVar::z, 0);
    PowerSeries one_plus_t(SeriesVar::t, order);
    one_plus_t.set_coeff(0, Rational(1));
    one_plus_t.set_coeff(1, Rational(1));
    PowerSeries one_plus_2t(SeriesVar::t, order);
    one_plus_2t.set_coeff(0, Rational(1));
    one_plus_2t.set_coeff(1, Rational(2));

    const PowerSeries in_t = one_plus_t.pow_rational(-c2 - c1k) *
                             one_plus_2t.pow_rational((c1sq + c1k) / Rational(2));
    return in_t.compose(t_of_z(order));
}

}  // namespace segre
