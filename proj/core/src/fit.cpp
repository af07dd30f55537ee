#include "segre/fit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace segre {

UniversalFit fit_universal_exponents(
    const std::vector<int>& degrees, int order,
    const std::function<Rational(int n, int d)>& integral_value) {
    std::vector<int> ds = degrees;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.size() < 3) {
        throw std::invalid_argument("fit: needs at least 3 distinct degrees");
    }
    if (std::find(ds.begin(), ds.end(), 3) != ds.end()) {
        throw std::invalid_argument("fit: degree 3 carries no information, exclude it");
    }
    if (order < 1) throw std::invalid_argument("fit: needs order >= 1");

    std::vector<PowerSeries> logs;
    logs.reserve(ds.size());
    for (int d : ds) {
        PowerSeries s(SeriesVar::z, order);
        for (int n = 0; n <= order; ++n) s.set_coeff(n, integral_value(n, d));
        if (s.coeff(0) != Rational(1)) {
            throw std::invalid_argument("fit: integral series must start at 1");
        }
        logs.push_back(s.log());
    }

    UniversalFit fit{PowerSeries(SeriesVar::z, order), PowerSeries(SeriesVar::z, order),
                     PowerSeries(SeriesVar::z, order)};

    for (int j = 1; j <= order; ++j) {
        // rows: d^2 * q + d * l + c = log-coefficient
        std::array<std::array<Rational, 4>, 3> m;
        for (int r = 0; r < 3; ++r) {
            const long d = ds[static_cast<std::size_t>(r)];
            m[static_cast<std::size_t>(r)] = {Rational(d * d), Rational(d), Rational(1),
                                              logs[static_cast<std::size_t>(r)].coeff(j)};
        }
        for (int col = 0; col < 3; ++col) {
            int pivot = -1;
            for (int r = col; r < 3; ++r) {
                if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]
                         .is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) throw std::runtime_error("fit: singular system");
            std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
            const Rational inv = Rational(1) / m[static_cast<std::size_t>(col)]
                                                 [static_cast<std::size_t>(col)];
            for (auto& v : m[static_cast<std::size_t>(col)]) v *= inv;
            for (int r = 0; r < 3; ++r) {
                if (r == col) continue;
                const Rational f =
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (f.is_zero()) continue;
                for (int c2 = 0; c2 < 4; ++c2) {
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                        f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
                }
            }
        }
        const Rational q = m[0][3];
        const Rational l = m[1][3];
        const Rational c = m[2][3];
        for (std::size_t r = 3; r < ds.size(); ++r) {
            const Rational d(static_cast<long>(ds[r]));
            if (q * d * d + l * d + c != logs[r].coeff(j)) {
                throw std::runtime_error("fit: degree " + std::to_string(ds[r]) +
                                         " inconsistent at z^" + std::to_string(j));
            }
        }
        fit.q.set_coeff(j, q);
        fit.l.set_coeff(j, l);
        fit.c.set_coeff(j, c);
    }
    return fit;
}

}  // namespace segre
