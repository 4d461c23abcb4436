#pragma once

#include <complex>
#include <random>
#include <vector>

#include "univalence/series.hpp"

namespace univalence::test {

inline double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline PowerSeries ps(std::vector<Complex> c, Complex center = 0.0)
{
    return {center, std::move(c)};
}

/// Random series with coefficients uniform in the square [-bound, bound]^2.
inline PowerSeries random_series(std::mt19937 &rng, int order, double bound, Complex c0)
{
    std::uniform_real_distribution<double> u(-bound, bound);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (auto &x : c) {
        x = {u(rng), u(rng)};
    }
    c[0] = c0;
    return {0.0, std::move(c)};
}

} // namespace univalence::test
