#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "segre/element.hpp"

namespace segre::testing {

// Reproducible seed: SEGRE_TEST_SEED overrides the default.
inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("SEGRE_TEST_SEED")) {
        return std::stoull(env);
    }
    return 0xC0FFEE;
}

class MonomialGen {
  public:
    explicit MonomialGen(std::uint64_t seed = test_seed()) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    ThetaSym random_theta(int max_index = 6) {
        if (uniform(0, 1) == 0) return theta0(uniform(0, max_index));
        return theta1(uniform(1, max_index));
    }

    // min_t1 forces enough theta^1 slots for the higher deltas to act on.
    Monomial random_monomial(int max_thetas = 4, int max_index = 6, int max_s = 6,
                             int min_t1 = 0) {
        std::vector<ThetaSym> ts;
        const int w = uniform(min_t1, max_thetas);
        for (int i = 0; i < min_t1; ++i) ts.push_back(theta1(uniform(2, max_index)));
        for (int i = min_t1; i < w; ++i) ts.push_back(random_theta(max_index));
        return Monomial(std::move(ts), uniform(0, max_s));
    }

    Rational random_rational(int bound = 20) {
        long num = uniform(-bound, bound);
        long den = uniform(1, bound);
        return Rational(num, den);
    }

    DPoly random_dpoly(int max_degree = 4, int bound = 20) {
        std::vector<Rational> c;
        const int deg = uniform(0, max_degree);
        for (int i = 0; i <= deg; ++i) c.push_back(random_rational(bound));
        return DPoly(std::move(c));
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace segre::testing
