#include "segre/symbols.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace segre {

Monomial::Monomial(std::vector<ThetaSym> thetas, int s_index)
    : thetas_(std::move(thetas)), s_index_(s_index) {
    if (s_index_ < 0) throw std::invalid_argument("Monomial: negative S-index");
    for (const auto& t : thetas_) {
        if (t.index < 0) throw std::invalid_argument("Monomial: negative theta index");
    }
    std::sort(thetas_.begin(), thetas_.end());
}

int Monomial::degree() const {
    int deg = s_index_;
    for (const auto& t : thetas_) deg += t.degree();
    return deg;
}

Monomial::Signature Monomial::signature() const {
    Signature s;
    s.width = static_cast<int>(thetas_.size());
    for (const auto& t : thetas_) {
        if (t.kind == ThetaKind::T0) ++s.theta0_count;
    }
    return s;
}

std::string Monomial::render() const {
    std::ostringstream os;
    for (const auto& t : thetas_) {
        os << (t.kind == ThetaKind::T0 ? "t0_" : "t1_") << t.index << "*";
    }
    os << "S_" << s_index_;
    return os.str();
}

std::vector<SymbolRun> symbol_runs(const Monomial& m) {
    std::vector<SymbolRun> runs;
    const auto& ts = m.thetas();
    std::size_t i = 0;
    while (i < ts.size()) {
        std::size_t j = i;
        while (j < ts.size() && ts[j] == ts[i]) ++j;
        runs.push_back({ts[i], static_cast<int>(j - i), i});
        i = j;
    }
    return runs;
}

}  // namespace segre
