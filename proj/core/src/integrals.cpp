#include "segre/integrals.hpp"

#include <stdexcept>
#include <string>

namespace segre {

IntegralEngine::IntegralEngine(OpConfig cfg) : cfg_(std::move(cfg)) {}

IntegralRecord IntegralEngine::integral(int n) {
    if (n < 0) throw std::invalid_argument("integral: negative n");

    Element cur = Element::s_class(2 * n, n).normalized(cfg_.norm);
    std::size_t widest = cur.size();
    int start = 0;
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (int k = n; k >= 1; --k) {
            auto it = memo_.find({n, k});
            if (it != memo_.end()) {
                cur = it->second;
                widest = widest_[{n, k}];
                start = k;
                break;
            }
        }
    }

    for (int k = start + 1; k <= n; ++k) {
        cur = pushf(cur, cfg_);
        if (!cur.is_homogeneous(2 * (n - k))) {
            throw std::runtime_error("integral: pushforward lost homogeneity at step " +
                                     std::to_string(k));
        }
        widest = std::max(widest, cur.size());
        std::lock_guard<std::mutex> lock(mu_);
        memo_.insert({{n, k}, cur});
        widest_.insert({{n, k}, widest});
    }

    DPoly total = cur.coefficient(Monomial::s_class(0));
    if (cfg_.norm.level0_rules) {
        const std::size_t expected = total.is_zero() ? 0u : 1u;
        if (cur.size() > expected) {
            throw std::runtime_error("integral: symbols survive at level 0");
        }
    }
    if (!total.is_integral()) {
        throw std::runtime_error("integral: level-0 value is not integer-coefficient; "
                                 "division by n! would be inexact");
    }
    IntegralRecord rec;
    rec.n = n;
    rec.value = total.scaled(Rational(mpz_class(1), factorial(static_cast<unsigned long>(n))));
    rec.chain_count = widest;
    return rec;
}

}  // namespace segre
