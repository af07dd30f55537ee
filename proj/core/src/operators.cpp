#include "segre/operators.hpp"

#include <algorithm>
#include <thread>
#include <utility>
#include <vector>

namespace segre {

namespace {

using RawTerm = std::pair<Monomial, DPoly>;

// Copy of the theta word with the run's symbol removed once.
std::vector<ThetaSym> erase_one(const std::vector<ThetaSym>& ts, std::size_t pos) {
    std::vector<ThetaSym> out;
    out.reserve(ts.size() - 1);
    out.insert(out.end(), ts.begin(), ts.begin() + pos);
    out.insert(out.end(), ts.begin() + pos + 1, ts.end());
    return out;
}

std::vector<ThetaSym> erase_two(const std::vector<ThetaSym>& ts, std::size_t p1,
                                std::size_t p2) {
    std::vector<ThetaSym> out;
    out.reserve(ts.size() - 2);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i != p1 && i != p2) out.push_back(ts[i]);
    }
    return out;
}

std::vector<ThetaSym> with(std::vector<ThetaSym> ts, ThetaSym a) {
    ts.push_back(a);
    return ts;
}
std::vector<ThetaSym> with(std::vector<ThetaSym> ts, ThetaSym a, ThetaSym b) {
    ts.push_back(a);
    ts.push_back(b);
    return ts;
}
std::vector<ThetaSym> with(std::vector<ThetaSym> ts, ThetaSym a, ThetaSym b, ThetaSym c) {
    ts.push_back(a);
    ts.push_back(b);
    ts.push_back(c);
    return ts;
}

void expand_delta0(const Monomial& mon, const DPoly& coeff, const OpConfig& cfg,
                   std::vector<RawTerm>& out) {
    const int m = mon.s_index();
    const DPoly scaled = coeff * (-cfg.d);
    for (int t = 0; t < m; ++t) {
        out.emplace_back(Monomial(with(mon.thetas(), theta1(t)), m - t - 1), scaled);
    }
}

void expand_delta1(const Monomial& mon, const DPoly& coeff, const OpConfig&,
                   std::vector<RawTerm>& out) {
    const int m = mon.s_index();
    for (const auto& run : symbol_runs(mon)) {
        const int l = run.sym.index;
        if (l < 2) continue;  // empty shift range either way
        auto base = erase_one(mon.thetas(), run.first);
        if (run.sym.kind == ThetaKind::T1) {
            const DPoly c = coeff.scaled(Rational(-static_cast<long>(l) * run.count));
            for (int t = 0; t <= l - 2; ++t) {
                out.emplace_back(Monomial(with(base, theta0(l - t - 2), theta1(t)), m), c);
            }
        } else {
            for (int t = 0; t <= l - 2; ++t) {
                const DPoly c =
                    coeff.scaled(Rational(-static_cast<long>(t + 1) * run.count));
                out.emplace_back(Monomial(with(base, theta0(l - t - 2), theta0(t)), m), c);
            }
        }
    }
}

void expand_delta2(const Monomial& mon, const DPoly& coeff, const OpConfig& cfg,
                   std::vector<RawTerm>& out) {
    const int m = mon.s_index();
    for (const auto& run : symbol_runs(mon)) {
        if (run.sym.kind != ThetaKind::T1) continue;
        const int l = run.sym.index;
        auto base = erase_one(mon.thetas(), run.first);
        // S-consuming part
        for (int t = 0; t <= l - 2; ++t) {
            const DPoly c =
                coeff * cfg.d.scaled(Rational(static_cast<long>(t + 1) * run.count));
            for (int a = 0; a < m; ++a) {
                out.emplace_back(
                    Monomial(with(base, theta0(l - t - 2), theta0(a + t)), m - a - 1), c);
            }
        }
        // S-preserving part
        for (int t = 0; t <= l - 3; ++t) {
            const long tri = static_cast<long>(t + 1) * (t + 2) / 2;
            const DPoly c = coeff.scaled(Rational(-3L * tri * run.count));
            out.emplace_back(Monomial(with(base, theta0(l - t - 3), theta0(t)), m), c);
        }
    }
}

void expand_delta3(const Monomial& mon, const DPoly& coeff, const OpConfig&,
                   std::vector<RawTerm>& out) {
    const int m = mon.s_index();
    const auto runs = symbol_runs(mon);
    for (std::size_t p = 0; p < runs.size(); ++p) {
        if (runs[p].sym.kind != ThetaKind::T1) continue;
        for (std::size_t q = p; q < runs.size(); ++q) {
            if (runs[q].sym.kind != ThetaKind::T1) continue;
            long pairs;
            std::size_t pos1 = runs[p].first;
            std::size_t pos2;
            if (p == q) {
                if (runs[p].count < 2) continue;
                pairs = static_cast<long>(runs[p].count) * (runs[p].count - 1) / 2;
                pos2 = runs[p].first + 1;
            } else {
                pairs = static_cast<long>(runs[p].count) * runs[q].count;
                pos2 = runs[q].first;
            }
            const int lj = runs[p].sym.index;
            const int lk = runs[q].sym.index;
            if (lj < 2 || lk < 2) continue;
            auto base = erase_two(mon.thetas(), pos1, pos2);
            for (int t = 0; t <= lk - 2; ++t) {
                for (int a = 0; a <= lj - 2; ++a) {
                    const DPoly c = coeff.scaled(
                        Rational(static_cast<long>(t + 1) * (a + 1) * pairs));
                    out.emplace_back(
                        Monomial(
                            with(base, theta0(lk - t - 2), theta0(lj - a - 2), theta0(a + t)),
                            m),
                        c);
                }
            }
        }
    }
}

using Expander = void (*)(const Monomial&, const DPoly&, const OpConfig&,
                          std::vector<RawTerm>&);

// Applies per-monomial expanders, normalizes each produced term at the target
// level and merges. Exact commutative addition makes the merge order
// irrelevant, so any thread count yields the identical element.
Element apply_expanders(const Element& e, const OpConfig& cfg,
                        const std::vector<Expander>& fns) {
    if (e.level() == 0) return Element(0);
    const int out_level = e.level() - 1;

    std::vector<const Element::TermMap::value_type*> items;
    items.reserve(e.terms().size());
    for (const auto& t : e.terms()) items.push_back(&t);

    auto expand_items = [&](std::size_t lo, std::size_t hi, Element& sink) {
        std::vector<RawTerm> raw;
        for (std::size_t i = lo; i < hi; ++i) {
            raw.clear();
            for (auto fn : fns) fn(items[i]->first, items[i]->second, cfg, raw);
            for (auto& [mon, c] : raw) {
                if (auto nm = normalize_monomial(mon, out_level, cfg.norm)) {
                    sink.add_term(*nm, c);
                }
            }
        }
    };

    const std::size_t nterms = items.size();
    const int threads = std::max(1, cfg.threads);
    Element result(out_level);
    if (threads == 1 || nterms < 2 * static_cast<std::size_t>(threads)) {
        expand_items(0, nterms, result);
        return result;
    }

    const std::size_t chunk = (nterms + threads - 1) / threads;
    std::vector<Element> partial(static_cast<std::size_t>(threads), Element(out_level));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        const std::size_t lo = std::min(nterms, static_cast<std::size_t>(w) * chunk);
        const std::size_t hi = std::min(nterms, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(
            [&, lo, hi, w] { expand_items(lo, hi, partial[static_cast<std::size_t>(w)]); });
    }
    for (auto& th : pool) th.join();
    for (auto& part : partial) result.accumulate(part);
    return result;
}

}  // namespace

Element delta0(const Element& e, const OpConfig& cfg) {
    return apply_expanders(e, cfg, {expand_delta0});
}
Element delta1(const Element& e, const OpConfig& cfg) {
    return apply_expanders(e, cfg, {expand_delta1});
}
Element delta2(const Element& e, const OpConfig& cfg) {
    return apply_expanders(e, cfg, {expand_delta2});
}
Element delta3(const Element& e, const OpConfig& cfg) {
    return apply_expanders(e, cfg, {expand_delta3});
}

Element apply_delta(int j, const Element& e, const OpConfig& cfg) {
    switch (j) {
        case 0: return delta0(e, cfg);
        case 1: return delta1(e, cfg);
        case 2: return delta2(e, cfg);
        case 3: return delta3(e, cfg);
        default: throw std::invalid_argument("apply_delta: index out of 0..3");
    }
}

Element pushf(const Element& e, const OpConfig& cfg) {
    return apply_expanders(
        e, cfg, {expand_delta0, expand_delta1, expand_delta2, expand_delta3});
}

Element shift_s(const Element& e) {
    Element out(e.level());
    for (const auto& [m, c] : e.terms()) {
        if (m.s_index() == 0) continue;
        out.add_term(m.with_s_index(m.s_index() - 1), c);
    }
    return out;
}

}  // namespace segre
