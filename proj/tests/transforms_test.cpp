#include <doctest.h>

#include "support.hpp"
#include "univalence/transforms.hpp"

using namespace univalence;
using test::max_diff;

TEST_SUITE("transforms")
{
    TEST_CASE("automorphism")
    {
        const MobiusShift s({0.3, -0.4});
        CHECK(s(0.0) == Complex(0.3, -0.4));
        for (const Complex w : {Complex(0.5, 0.5), Complex(-0.9, 0.0), Complex(0.0, 0.7)}) {
            CHECK(std::abs(s.inverse(s(w)) - w) < 1e-15);
            CHECK(std::abs(s(w)) < 1.0);
        }
        CHECK_THROWS_AS(MobiusShift(1.0), std::invalid_argument);
    }

    TEST_CASE("sigma series")
    {
        CHECK(mobius_sigma_series(0.0, 3).coeffs() == std::vector<Complex>{0.0, 1.0, 0.0, 0.0});
        CHECK(max_diff(mobius_sigma_series(0.5, 2).coeffs(), {0.0, 0.75, -0.375}) < 1e-16);
        const Complex zeta(-0.2, 0.6);
        const auto s = mobius_sigma_series(zeta, 10);
        for (int k = 1; k <= 10; ++k) {
            const Complex want = (1.0 - std::norm(zeta)) * int_pow(-std::conj(zeta), k - 1);
            CHECK(std::abs(s[k] - want) < 1e-16);
        }
        CHECK_THROWS_AS(mobius_sigma_series(1.2, 3), std::invalid_argument);
    }

    TEST_CASE("composition with the automorphism")
    {
        const Complex zeta(0.3, 0.1);
        auto want = mobius_sigma_series(zeta, 8).coeffs();
        want[0] = zeta;
        CHECK(max_diff(compose_with_automorphism(CatalogFunction::identity(), zeta, 8).coeffs(), want) < 1e-15);
        CHECK(max_diff(compose_with_automorphism(CatalogFunction::koebe(), 0.0, 8).coeffs(),
                       series_at(CatalogFunction::koebe(), 0.0, 8).coeffs()) < 1e-14);
        const auto f = compose_with_automorphism(CatalogFunction::cayley(), 0.3, 8);
        CHECK(std::abs(local_invariants(f).schwarzian) < 1e-12);
        // Values agree with the closed form inside the disk.
        for (const auto &fn : list_catalog()) {
            const auto F = compose_with_automorphism(fn, zeta, 60);
            const MobiusShift s(zeta);
            const Complex w(0.1, -0.2);
            CHECK(std::abs(ps_eval(F, w) - fn.value(s(w))) < 1e-10 * std::max(1.0, std::abs(fn.value(s(w)))));
        }
    }

    TEST_CASE("Koebe transform")
    {
        const Complex z(0.4, -0.3);
        const auto id = koebe_transform(CatalogFunction::identity(), z, 8);
        for (int n = 1; n <= 8; ++n) {
            CHECK(std::abs(id[n] - int_pow(-std::conj(z), n - 1)) < 1e-14);
        }
        CHECK(max_diff(koebe_transform(CatalogFunction::koebe(), 0.0, 8).coeffs(),
                       series_at(CatalogFunction::koebe(), 0.0, 8).coeffs()) < 1e-14);
        CHECK(max_diff(koebe_transform(CatalogFunction::bounded(0.5), 0.0, 8).coeffs(),
                       series_at(CatalogFunction::bounded(0.5), 0.0, 8).coeffs()) < 1e-14);
        for (const auto &fn : list_catalog()) {
            if (!fn.flags().locally_univalent_on_disk) {
                continue;
            }
            const auto k = koebe_transform(fn, z, 6);
            CHECK(k[0] == Complex(0.0));
            CHECK(k[1] == Complex(1.0));
        }
        // At real z the Koebe function is its own transform.
        CHECK(max_diff(koebe_transform(CatalogFunction::koebe(), 0.35, 8).coeffs(),
                       series_at(CatalogFunction::koebe(), 0.0, 8).coeffs()) < 1e-12);
        for (const auto &fn : list_catalog()) {
            if (fn.flags().univalent_on_disk) {
                CHECK(std::abs(koebe_transform(fn, z, 3)[2]) <= 2.0 + 1e-12);
            }
        }
    }

    TEST_CASE("shift formula examples")
    {
        const Complex zeta(0.3, 0.4);
        const MobiusShift s(zeta);
        for (double lambda : {0.3, 1.0, 2.5}) {
            const auto phi = phi_capital_direct(series_at(CatalogFunction::identity(), s(0.0), 12), lambda, 10);
            const auto out = lemma2_coefficients(phi, zeta, 0.0, 10);
            for (int n = 0; n <= 10; ++n) {
                const Complex want = gen_binomial(lambda, n) * int_pow(std::conj(zeta), n);
                CHECK(std::abs(out[static_cast<std::size_t>(n)] - want) < 1e-14);
            }
        }
        const Complex w(0.2, -0.1);
        const auto at_w = phi_capital_direct(series_at(CatalogFunction::koebe(), w, 9), 0.5, 8);
        CHECK(max_diff(lemma2_coefficients(at_w, 0.0, w, 8), at_w.values) == 0.0);

        const Complex zeta2 = 0.4;
        const Complex w2 = 0.1;
        const auto composed = ps_truncate(ps_recenter(compose_with_automorphism(CatalogFunction::koebe(), zeta2, 60), w2), 9);
        const auto want = phi_capital_direct(composed, 0.5, 8).values;
        const auto at_z = phi_capital_direct(series_at(CatalogFunction::koebe(), MobiusShift(zeta2)(w2), 9), 0.5, 8);
        CHECK(max_diff(lemma2_coefficients(at_z, zeta2, w2, 8), want) <= 1e-9);
    }

    TEST_CASE("shift formula over a grid")
    {
        double worst = 0.0;
        for (const auto &fn : list_catalog()) {
            for (const Complex zeta : {Complex(0.5), Complex(-0.3, 0.3), Complex(0.0, -0.45)}) {
                const MobiusShift s(zeta);
                const auto composed = compose_with_automorphism(fn, zeta, 60);
                for (const Complex w : {Complex(0.0), Complex(0.0, 0.3), Complex(-0.25, -0.2)}) {
                    const auto at_w = ps_truncate(ps_recenter(composed, w), 9);
                    const auto at_z = series_at(fn, s(w), 9);
                    for (double lambda : {0.5, 1.0, 1.7}) {
                        const auto want = phi_capital_direct(at_w, lambda, 8).values;
                        const auto got = lemma2_coefficients(phi_capital_direct(at_z, lambda, 8), zeta, w, 8);
                        worst = std::max(worst, max_diff(got, want));
                    }
                }
            }
        }
        CHECK(worst <= 1e-8);
    }

    TEST_CASE("shift formula preconditions")
    {
        const auto phi_seq = aharonov_phi(series_at(CatalogFunction::koebe(), 0.2, 8), 6);
        CHECK_THROWS_AS(lemma2_coefficients(phi_seq, 0.2, 0.0, 4), std::invalid_argument);
        const auto big = phi_capital_direct(series_at(CatalogFunction::koebe(), 0.2, 8), 0.5, 6);
        CHECK_THROWS_AS(lemma2_coefficients(big, 0.3, 0.0, 4), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_coefficients(big, 0.2, 0.0, 7), std::invalid_argument);
    }
}
