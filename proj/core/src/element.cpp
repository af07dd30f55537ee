#include "segre/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace segre {

std::optional<Monomial> normalize_monomial(const Monomial& m, int level,
                                           const NormalizeOptions& opts) {
    const int dim = 2 * level;
    std::vector<ThetaSym> kept;
    kept.reserve(m.thetas().size());
    for (const auto& t : m.thetas()) {
        if (opts.drop_unit_theta && t.kind == ThetaKind::T0 && t.index == 0) continue;
        if (opts.kill_theta1 && t.index == 1) return std::nullopt;
        if (opts.dimension_pruning) {
            if (t.degree() < 0 || t.degree() > dim) return std::nullopt;
        }
        if (opts.level0_rules && level == 0 && t.kind == ThetaKind::T1) return std::nullopt;
        kept.push_back(t);
    }
    if (opts.dimension_pruning && m.s_index() > dim) return std::nullopt;
    if (opts.level0_rules && level == 0 && (m.s_index() > 0 || !kept.empty())) {
        return std::nullopt;
    }
    Monomial out(std::move(kept), m.s_index());
    if (opts.dimension_pruning && out.degree() > dim) return std::nullopt;
    return out;
}

Element::Element(int level) : level_(level) {
    if (level < 0) throw std::invalid_argument("Element: negative level");
}

Element Element::s_class(int m, int level) {
    Element e(level);
    e.add_term(Monomial::s_class(m), DPoly(Rational(1)));
    return e;
}

DPoly Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? DPoly() : it->second;
}

void Element::add_term(const Monomial& m, const DPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::accumulate(const Element& other) {
    if (other.empty()) return *this;
    if (empty()) {
        level_ = other.level_;
        terms_ = other.terms_;
        return *this;
    }
    if (level_ != other.level_) {
        throw std::logic_error("Element: adding classes at different levels");
    }
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Element& Element::scale(const DPoly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Element Element::normalized(const NormalizeOptions& opts) const {
    Element out(level_);
    for (const auto& [m, c] : terms_) {
        if (auto nm = normalize_monomial(m, level_, opts)) {
            out.add_term(*nm, c);
        }
    }
    return out;
}

bool Element::is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const auto& t) { return t.first.degree() == degree; });
}

bool operator==(const Element& a, const Element& b) {
    if (a.empty() && b.empty()) return true;
    return a.level_ == b.level_ && a.terms_ == b.terms_;
}

std::string Element::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")*" << m.render();
        first = false;
    }
    return os.str();
}

Element mul_elements(const Element& a, const Element& b, const NormalizeOptions& opts) {
    if (a.empty() || b.empty()) return Element(a.empty() ? b.level() : a.level());
    if (a.level() != b.level()) {
        throw std::invalid_argument("mul_elements: operands at different levels");
    }
    auto has_s = [](const Element& e) {
        return std::any_of(e.terms().begin(), e.terms().end(),
                           [](const auto& t) { return t.first.s_index() > 0; });
    };
    if (has_s(a) && has_s(b)) {
        throw std::invalid_argument(
            "mul_elements: both operands carry non-unit S-classes");
    }
    Element out(a.level());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<ThetaSym> ts = ma.thetas();
            ts.insert(ts.end(), mb.thetas().begin(), mb.thetas().end());
            Monomial prod(std::move(ts), ma.s_index() + mb.s_index());
            if (auto nm = normalize_monomial(prod, out.level(), opts)) {
                out.add_term(*nm, ca * cb);
            }
        }
    }
    return out;
}

}  // namespace segre
