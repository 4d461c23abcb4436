#include <doctest.h>

#include <numbers>

#include "univalence/criteria.hpp"
#include "univalence/error.hpp"
#include "univalence/quadrature.hpp"
#include "univalence/sequences.hpp"

using namespace univalence;

namespace {

const MeshSpec coarse{128, 128, 2.0, {0.0, 0.0}};

} // namespace

TEST_SUITE("quadrature")
{
    TEST_CASE("Gauss-Legendre rule")
    {
        for (int n : {1, 2, 5, 16, 64}) {
            const auto g = gauss_legendre_unit(n);
            REQUIRE(g.nodes.size() == static_cast<std::size_t>(n));
            for (int p = 0; p <= 2 * n - 1; ++p) {
                double sum = 0.0;
                for (int i = 0; i < n; ++i) {
                    sum += g.weights[static_cast<std::size_t>(i)] * std::pow(g.nodes[static_cast<std::size_t>(i)], p);
                }
                CHECK(std::abs(sum - 1.0 / (p + 1)) < 1e-14);
            }
            for (double x : g.nodes) {
                CHECK(x > 0.0);
                CHECK(x < 1.0);
            }
        }
        CHECK_THROWS_AS(gauss_legendre_unit(0), std::invalid_argument);
    }

    TEST_CASE("chord length")
    {
        CHECK(chord_length(0.0, 1.234) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(chord_length(0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(chord_length(0.5, std::numbers::pi) == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(chord_length({0.0, 0.5}, 0.0) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
        for (double theta = 0.0; theta < 6.0; theta += 0.37) {
            const Complex c(-0.3, 0.45);
            CHECK(std::abs(std::abs(c + std::polar(chord_length(c, theta), theta)) - 1.0) < 1e-14);
        }
    }

    TEST_CASE("disk integrals")
    {
        const auto one = integrate_disk([](Complex) { return 1.0; }, MeshSpec{});
        CHECK(std::abs(one.value - 1.0) < 1e-12);
        CHECK(one.error_estimate < 1e-12);
        const auto off = integrate_disk([](Complex) { return 1.0; }, MeshSpec{128, 128, 2.0, {0.5, 0.0}});
        CHECK(std::abs(off.value - 1.0) < 1e-6);
        const auto r2 = integrate_disk([](Complex w) { return std::norm(w); }, MeshSpec{64, 64, 1.0, {0.2, -0.1}});
        CHECK(std::abs(r2.value - 0.5) < 1e-6);
        CHECK(r2.mesh.radial_nodes == 64);
    }

    TEST_CASE("mesh validation and singular samples")
    {
        CHECK_THROWS_AS((MeshSpec{0, 16, 2.0, {}}).validate(), std::invalid_argument);
        CHECK_THROWS_AS((MeshSpec{16, 2, 2.0, {}}).validate(), std::invalid_argument);
        CHECK_THROWS_AS((MeshSpec{16, 16, 0.0, {}}).validate(), std::invalid_argument);
        CHECK_THROWS_AS((MeshSpec{16, 16, 2.0, {1.0, 0.0}}).validate(), std::invalid_argument);
        const auto bad = [](Complex w) { return std::abs(w) < 0.5 ? 1.0 : std::numeric_limits<double>::quiet_NaN(); };
        CHECK_THROWS_WITH_AS(integrate_disk(bad, MeshSpec{16, 16, 2.0, {}}), doctest::Contains("singular sample"),
                             NumericError);
    }

    TEST_CASE("Prawitz integral examples")
    {
        const auto k = CatalogFunction::koebe();
        CHECK(std::abs(prawitz_integral(k, 0.5, 0.0).value - 2.0) < 1e-9);
        CHECK(std::abs(prawitz_integral(k, 1.0, 0.0).value - 1.0) < 1e-9);
        CHECK(std::abs(prawitz_integral(k, 0.5, {0.3, 0.2}).value - 2.0) < 1e-6);
        CHECK(std::abs(prawitz_integral(CatalogFunction::identity(), 0.5, 0.0).value) < 1e-14);
        CHECK(std::abs(prawitz_integral(CatalogFunction::cayley(), 1.0, 0.3).value) < 1e-12);
        CHECK_THROWS_WITH_AS(prawitz_integral(CatalogFunction::exp_scale(4.0), 0.5, 0.0),
                             doctest::Contains("not univalent"), std::invalid_argument);
        CHECK_THROWS_AS(prawitz_integral(k, 0.0, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(prawitz_integral(k, 1.5, 0.0), std::invalid_argument);
    }

    TEST_CASE("Prawitz integral stays below 1/lam")
    {
        for (const auto &fn : list_catalog()) {
            if (!fn.flags().univalent_on_disk) {
                continue;
            }
            for (double lambda : {0.25, 0.5, 1.0}) {
                for (const Complex z : {Complex(0.0), Complex(0.3), Complex(0.3, 0.2)}) {
                    const auto r = prawitz_integral(fn, lambda, z, coarse);
                    CHECK_MESSAGE(r.value <= 1.0 / lambda + 3.0 * r.error_estimate + 1e-9, fn.id(), " lam=", lambda,
                                  " z=", z);
                }
            }
        }
    }

    TEST_CASE("integral matches the limit of the partial sums")
    {
        for (const auto &fn : {CatalogFunction::identity(), CatalogFunction::bounded(0.5), CatalogFunction::koebe()}) {
            for (double lambda : {0.5, 1.0}) {
                const Complex z(0.3, 0.0);
                const double integral = prawitz_integral(fn, lambda, z).value;
                const double t = univalence_criterion(fn, lambda, z, 256).partial_sum;
                CAPTURE(fn.id());
                CHECK(std::abs(lambda * lambda * integral - t) < 1e-6);
            }
        }
        CHECK(std::abs(prawitz_integral(CatalogFunction::identity(), 0.5, 0.3).value - 0.0457893378768301) < 1e-9);
    }

    TEST_CASE("near-diagonal series matches the closed form")
    {
        for (const auto &fn : {CatalogFunction::koebe(), CatalogFunction::bounded({0.3, 0.4}),
                               CatalogFunction::automorphism({0.2, -0.5})}) {
            const Complex z(0.2, 0.3);
            const double delta = default_delta(z);
            const PrawitzIntegrand p(fn, 0.5, z, delta);
            CHECK(p.coefficients().size() >= static_cast<std::size_t>(near_diagonal_order));
            for (double theta : {0.0, 1.0, 2.5, 4.0}) {
                const Complex w = z + std::polar(0.5 * delta, theta);
                const Complex series = p.kernel_over_t_series(w) * (w - z);
                const Complex direct = p.kernel_direct(w);
                CHECK(std::abs(series - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
            }
        }
    }

    TEST_CASE("power branch audit")
    {
        const auto k = CatalogFunction::koebe();
        const MeshSpec m{32, 64, 2.0, {}};
        CHECK(power_branch_crossings(k, 0.0, m, default_delta(0.0)) == 0);
        CHECK(power_branch_crossings(k, {0.3, 0.2}, m, default_delta({0.3, 0.2})) > 0);
        const Complex z(0.3, 0.2);
        const Complex w(-0.9, -0.3);
        const Complex log_q = continued_log_q(k, z, k.value(z), k.derivative(z), w);
        const Complex q = k.derivative(z) * (w - z) / (k.value(w) - k.value(z));
        CHECK(std::abs(std::exp(log_q) - q) < 1e-12 * std::abs(q));
    }

    TEST_CASE("Grunsky kernel")
    {
        CHECK(std::abs(grunsky_kernel_point(CatalogFunction::identity(), 0.2, {-0.1, 0.5})) < 1e-12);
        for (const Complex z : {Complex(0.0), Complex(0.3, -0.2)}) {
            for (const Complex w : {Complex(0.5), Complex(-0.4, 0.4), z + 0.01, z}) {
                const Complex want = -1.0 / ((1.0 - z * w) * (1.0 - z * w));
                CHECK(std::abs(grunsky_kernel_point(CatalogFunction::koebe(), z, w) - want) < 1e-9);
            }
        }
        for (const auto &fn : {CatalogFunction::exp_scale(1.0), CatalogFunction::quad_poly(0.4)}) {
            const Complex z(0.1, 0.2);
            const auto phi = aharonov_phi(series_at(fn, z, 4), 2).values;
            CHECK(std::abs(grunsky_kernel_point(fn, z, z) + phi[1]) < 1e-12);
            const GrunskyKernel u(fn, z, default_delta(z));
            const Complex w = z + std::polar(0.5 * default_delta(z), 0.8);
            CHECK(std::abs(u.series(w) - u.direct(w)) < 1e-9);
        }
    }

    TEST_CASE("Grunsky norm")
    {
        CHECK(std::abs(grunsky_norm(CatalogFunction::identity(), 0.3, coarse).value) < 1e-12);
        CHECK(std::abs(grunsky_norm(CatalogFunction::cayley(), 0.3, coarse).value) < 1e-6);
        CHECK(std::abs(grunsky_norm(CatalogFunction::koebe(), 0.0, coarse).value - 1.0) < 1e-9);
    }

    TEST_CASE("Psi identity")
    {
        const auto k = psi_grunsky_identity_check(CatalogFunction::koebe(), 0.3, 64);
        CHECK(std::abs(k.psi_sum - 1.0) < 1e-10);
        CHECK(k.residual < 1e-6);
        const auto b = psi_grunsky_identity_check(CatalogFunction::bounded({0.3, 0.4}), {0.1, -0.2}, 64);
        CHECK(b.residual < 1e-6);
        CHECK_THROWS_AS(psi_grunsky_identity_check(CatalogFunction::koebe(), 0.3, 16), std::invalid_argument);
    }
}
