#include "segre/dpoly.hpp"

#include <algorithm>
#include <sstream>

namespace segre {

DPoly::DPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

DPoly::DPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

DPoly DPoly::var() { return DPoly({Rational(0), Rational(1)}); }

Rational DPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

bool DPoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
}

void DPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DPoly& DPoly::operator+=(const DPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

DPoly operator*(const DPoly& a, const DPoly& b) {
    if (a.is_zero() || b.is_zero()) return DPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return DPoly(std::move(out));
}

DPoly DPoly::operator-() const {
    DPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

DPoly& DPoly::scale(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Rational DPoly::eval_at(const Rational& d0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * d0 + *it;
    }
    return acc;
}

std::pair<DPoly, Rational> DPoly::divmod_d_minus_3() const {
    // Synthetic division at the root d = 3.
    if (c_.empty()) return {DPoly(), Rational(0)};
    std::vector<Rational> q(c_.size() - 1);
    Rational carry(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        Rational cur = c_[i] + carry * Rational(3);
        if (i == 0) return {DPoly(std::move(q)), cur};
        q[i - 1] = cur;
        carry = cur;
    }
    return {DPoly(std::move(q)), Rational(0)};  // unreachable
}

std::string DPoly::to_string(const std::string& sym) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (i == 0) {
            os << a.to_string();
        } else {
            if (a != Rational(1)) os << a.to_string() << "*";
            os << sym;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace segre
