#include <doctest.h>

#include <random>

#include "support.hpp"
#include "univalence/error.hpp"
#include "univalence/series.hpp"

using namespace univalence;
using test::max_diff;
using test::ps;

TEST_SUITE("series")
{
    TEST_CASE("generalized binomial")
    {
        CHECK(gen_binomial(0.37, 0) == 1.0);
        CHECK(gen_binomial(-5.0, 0) == 1.0);
        CHECK(gen_binomial(-1.0, 3) == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(gen_binomial(0.5, 2) == doctest::Approx(-0.125).epsilon(1e-15));
        CHECK(gen_binomial(3.0, 4) == 0.0);
        CHECK(gen_binomial(3.0, 2) == 3.0);
        CHECK_THROWS_AS(gen_binomial(1.0, -1), std::invalid_argument);
    }

    TEST_CASE("negated upper index")
    {
        // binom(-a, m) = (-1)^m binom(a + m - 1, m)
        for (double a : {0.5, 1.0, 2.3}) {
            for (int m = 0; m <= 8; ++m) {
                const double sign = m % 2 ? -1.0 : 1.0;
                CHECK(gen_binomial(-a, m) == doctest::Approx(sign * gen_binomial(a + m - 1, m)).epsilon(1e-13));
            }
        }
    }

    TEST_CASE("construction rejects empty and non-finite coefficients")
    {
        CHECK_THROWS_AS(ps({}), std::invalid_argument);
        CHECK_THROWS_AS(ps({1.0, Complex(std::nan(""), 0.0)}), NumericError);
        CHECK_THROWS_AS(PowerSeries::zero(0.0, -1), std::invalid_argument);
        CHECK(PowerSeries::one(0.2, 3).coeffs() == std::vector<Complex>{1.0, 0.0, 0.0, 0.0});
    }

    TEST_CASE("product")
    {
        CHECK(ps_mul(ps({1.0, 1.0}), ps({1.0, -1.0})).coeffs() == std::vector<Complex>{1.0, 0.0});
        CHECK(ps_mul(ps({0.0, 1.0, 0.0}), ps({0.0, 1.0, 0.0})).coeffs() == std::vector<Complex>{0.0, 0.0, 1.0});
        const auto a = ps({1.0, {2.0, 1.0}, -3.0});
        CHECK(ps_mul(a, PowerSeries::one(0.0, 2)).coeffs() == a.coeffs());
        CHECK(ps_mul(ps({1.0, 1.0, 1.0}), ps({1.0, 1.0})).order() == 1);
        CHECK_THROWS_AS(ps_mul(ps({1.0}, 0.1), ps({1.0}, 0.2)), std::invalid_argument);
    }

    TEST_CASE("reciprocal")
    {
        CHECK(ps_recip(ps({1.0, -1.0, 0.0, 0.0})).coeffs() == std::vector<Complex>{1.0, 1.0, 1.0, 1.0});
        CHECK(ps_recip(ps({2.0, 0.0, 0.0})).coeffs() == std::vector<Complex>{0.5, 0.0, 0.0});
        CHECK(ps_recip(ps({1.0, 1.0, 0.0, 0.0})).coeffs() == std::vector<Complex>{1.0, -1.0, 1.0, -1.0});
        CHECK_THROWS_WITH_AS(ps_recip(ps({0.0, 1.0})), doctest::Contains("non-invertible series"), NumericError);
    }

    TEST_CASE("derivative")
    {
        CHECK(ps_derivative(ps({3.0, 0.0, 0.0})).coeffs() == std::vector<Complex>{0.0, 0.0});
        CHECK(ps_derivative(ps({0.0, 1.0, 1.0})).coeffs() == std::vector<Complex>{1.0, 2.0});
        const auto g = ps_recip(ps({1.0, -1.0, 0.0, 0.0, 0.0, 0.0}));
        const auto dg = ps_derivative(g);
        const auto g2 = ps_truncate(ps_mul(g, g), dg.order());
        CHECK(max_diff(dg.coeffs(), g2.coeffs()) == 0.0);
    }

    TEST_CASE("real power")
    {
        CHECK(max_diff(ps_pow_real(ps({1.0, -1.0, 0.0, 0.0}), 2.0).coeffs(), {1.0, -2.0, 1.0, 0.0}) < 1e-15);
        CHECK(ps_pow_real(ps({1.0, 0.3, -2.0}), 0.0).coeffs() == std::vector<Complex>{1.0, 0.0, 0.0});
        CHECK(max_diff(ps_pow_real(ps({1.0, -1.0, 0.0, 0.0}), 0.5).coeffs(), {1.0, -0.5, -0.125, -0.0625}) < 1e-15);
        CHECK_THROWS_WITH_AS(ps_pow_real(ps({2.0, 1.0}), 0.5), doctest::Contains("unnormalized base"),
                             std::invalid_argument);
    }

    TEST_CASE("composition")
    {
        const auto inner = ps({0.0, {0.5, 1.0}, -2.0, 0.25});
        CHECK(max_diff(ps_compose(ps({0.0, 1.0, 0.0, 0.0}), inner).coeffs(), inner.coeffs()) == 0.0);
        CHECK(ps_compose(ps({1.0, 0.0, 1.0}), ps({0.0, 1.0, 1.0})).coeffs() == std::vector<Complex>{1.0, 0.0, 1.0});
        CHECK(ps_compose(ps({0.0, 1.0, 0.0}), ps({0.0, 2.0})).coeffs() == std::vector<Complex>{0.0, 2.0});
        CHECK_THROWS_AS(ps_compose(ps({0.0, 1.0}), ps({0.1, 1.0})), std::invalid_argument);
    }

    TEST_CASE("evaluation")
    {
        CHECK(ps_eval(ps({1.0, 1.0, 1.0}, 0.3), 0.3) == Complex(1.0));
        std::vector<Complex> geo(31, 1.0);
        CHECK(std::abs(ps_eval(ps(geo), 0.5) - 2.0) < 1e-8);
        const Complex w(0.2, -0.1);
        CHECK(std::abs(ps_eval(ps({0.0, 1.0}, 0.3), w) - (w - 0.3)) < 1e-16);
    }

    TEST_CASE("recentering matches re-expansion of a polynomial")
    {
        // (1 + t)^3 about 0, moved to 0.5: (1.5 + s)^3
        const auto moved = ps_recenter(ps({1.0, 3.0, 3.0, 1.0}), 0.5);
        CHECK(moved.center() == Complex(0.5));
        CHECK(max_diff(moved.coeffs(), {3.375, 6.75, 4.5, 1.0}) < 1e-14);
    }

    TEST_CASE("algebraic properties on random series")
    {
        std::mt19937 rng(20240611);
        for (int trial = 0; trial < 20; ++trial) {
            const int order = 8 + trial * 3;
            const auto a = test::random_series(rng, order, 1.0, {0.7, 0.2});
            const auto b = test::random_series(rng, order, 1.0, {-0.3, 1.1});
            const auto c = test::random_series(rng, order, 1.0, 1.0);
            const auto scale = [](const PowerSeries &x, const PowerSeries &y) {
                double m = 1.0;
                for (const auto &v : x.coeffs()) {
                    m = std::max(m, std::abs(v));
                }
                for (const auto &v : y.coeffs()) {
                    m = std::max(m, std::abs(v));
                }
                return m;
            };
            const auto ab = ps_mul(a, b);
            CHECK(max_diff(ab.coeffs(), ps_mul(b, a).coeffs()) <= 1e-13 * scale(ab, ab));
            const auto abc1 = ps_mul(ab, c);
            const auto abc2 = ps_mul(a, ps_mul(b, c));
            CHECK(max_diff(abc1.coeffs(), abc2.coeffs()) <= 1e-13 * scale(abc1, abc2));

            const auto inv = ps_mul(c, ps_recip(c));
            auto unit = PowerSeries::one(0.0, order).coeffs();
            // Random c has growing reciprocal; compare relative to its size.
            CHECK(max_diff(inv.coeffs(), unit) <= 1e-12 * scale(ps_recip(c), c));
        }
    }

    TEST_CASE("power laws")
    {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = test::random_series(rng, 32, 2.0, 1.0);
            for (auto [l1, l2] : {std::pair{0.5, 0.25}, std::pair{1.7, -0.4}, std::pair{0.3, 2.0}}) {
                const auto lhs = ps_pow_real(a, l1 + l2);
                const auto rhs = ps_mul(ps_pow_real(a, l1), ps_pow_real(a, l2));
                double scale = 1.0;
                for (const auto &v : lhs.coeffs()) {
                    scale = std::max(scale, std::abs(v));
                }
                CHECK(max_diff(lhs.coeffs(), rhs.coeffs()) <= 1e-10 * scale);
            }
            auto tame = a.coeffs();
            for (std::size_t k = 1; k < tame.size(); ++k) {
                tame[k] *= std::pow(0.25, static_cast<double>(k));
            }
            const PowerSeries b(0.0, tame);
            CHECK(max_diff(ps_pow_real(b, 1.0).coeffs(), b.coeffs()) <= 1e-14);

            // (a^lam)' a = lam a' a^lam
            const double lam = 0.7;
            const auto p = ps_pow_real(a, lam);
            const auto lhs = ps_mul(ps_derivative(p), ps_truncate(a, 31));
            const auto rhs = ps_scale(ps_mul(ps_derivative(a), ps_truncate(p, 31)), Complex(lam));
            double scale = 1.0;
            for (const auto &v : lhs.coeffs()) {
                scale = std::max(scale, std::abs(v));
            }
            CHECK(max_diff(lhs.coeffs(), rhs.coeffs()) <= 1e-11 * scale);
        }
    }

    TEST_CASE("extended precision tiers agree with double on benign input")
    {
        const auto a = ps({1.0, {0.5, -0.25}, 0.125, -1.0});
        const auto d = ps_pow_real(ps_recip(a), 0.75);
        const auto m = ps_pow_real(ps_recip(ps_convert<Complex50>(a)), 0.75);
        CHECK(max_diff(d.coeffs(), ps_convert<Complex>(m).coeffs()) < 1e-14);
    }
}
