#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "support.hpp"
#include "univalence/catalog.hpp"

using namespace univalence;
using test::max_diff;

TEST_SUITE("catalog")
{
    TEST_CASE("expansion examples")
    {
        CHECK(max_diff(series_at(CatalogFunction::koebe(), 0.0, 3).coeffs(), {0.0, 1.0, 2.0, 3.0}) < 1e-15);
        CHECK(max_diff(series_at(CatalogFunction::identity(), 0.3, 3).coeffs(), {0.3, 1.0, 0.0, 0.0}) == 0.0);
        CHECK(max_diff(series_at(CatalogFunction::exp_scale(4.0), 0.0, 2).coeffs(), {1.0, 4.0, 8.0}) < 1e-15);
        CHECK_THROWS_AS(series_at(CatalogFunction::koebe(), 1.0, 3), std::invalid_argument);
    }

    TEST_CASE("flags")
    {
        const auto k = CatalogFunction::koebe().flags();
        CHECK(k.locally_univalent_on_disk);
        CHECK(k.univalent_on_disk);
        CHECK(k.full_mapping);
        CHECK_FALSE(CatalogFunction::exp_scale(4.0).flags().univalent_on_disk);
        CHECK(CatalogFunction::exp_scale(4.0).flags().locally_univalent_on_disk);
        CHECK(CatalogFunction::exp_scale(std::numbers::pi).flags().univalent_on_disk);
        CHECK_FALSE(CatalogFunction::quad_poly(0.6).flags().locally_univalent_on_disk);
        CHECK(CatalogFunction::quad_poly(0.5).flags().univalent_on_disk);
        CHECK_FALSE(CatalogFunction::identity().flags().full_mapping);
        CHECK_THROWS_AS(CatalogFunction::bounded(1.5), std::invalid_argument);
        CHECK_THROWS_AS(CatalogFunction::automorphism(1.0), std::invalid_argument);
        for (const auto &fn : list_catalog()) {
            CAPTURE(fn.id());
            const auto f = fn.flags();
            CHECK((!f.univalent_on_disk || f.locally_univalent_on_disk));
            CHECK((!f.full_mapping || f.univalent_on_disk));
            CHECK_FALSE(fn.note().empty());
        }
    }

    TEST_CASE("registry contents")
    {
        std::vector<std::string> ids;
        for (const auto &fn : list_catalog()) {
            ids.push_back(fn.id());
        }
        for (const char *want : {"identity", "koebe", "cayley", "exp_scale:k=4", "quad_poly:a=0.6"}) {
            CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
        }
    }

    TEST_CASE("series at 0 evaluates to the closed form")
    {
        const std::vector<Complex> ws{0.0, 0.5, {0.0, -0.5}, {0.3, 0.35}, {-0.4, 0.1}};
        for (const auto &fn : list_catalog()) {
            CAPTURE(fn.id());
            const auto s = series_at(fn, 0.0, 48);
            for (const Complex w : ws) {
                CHECK(std::abs(ps_eval(s, w) - fn.value(w)) <= 1e-8 * std::max(1.0, std::abs(fn.value(w))));
            }
        }
    }

    TEST_CASE("expansions about different centers agree on overlaps")
    {
        const Complex z(0.2, -0.1);
        const Complex z2(0.25, 0.05);
        for (const auto &fn : list_catalog()) {
            CAPTURE(fn.id());
            const auto moved = ps_recenter(series_at(fn, z, 60), z2);
            const auto direct = series_at(fn, z2, 8);
            double worst = 0.0;
            for (int k = 0; k <= 8; ++k) {
                worst = std::max(worst, std::abs(moved[k] - direct[k]) / std::max(1.0, std::abs(direct[k])));
            }
            CHECK(worst <= 1e-8);
        }
    }

    TEST_CASE("derivative matches first coefficient")
    {
        for (const auto &fn : list_catalog()) {
            const Complex z(-0.3, 0.4);
            CHECK(std::abs(series_at(fn, z, 1)[1] - fn.derivative(z)) < 1e-12 * std::max(1.0, std::abs(fn.derivative(z))));
        }
    }

    TEST_CASE("parsing")
    {
        CHECK(parse_function("koebe").kind() == FunctionKind::koebe);
        CHECK(parse_function("exp_scale:k=4").param() == Complex(4.0));
        CHECK(parse_function("quad_poly:a=0.4+0i").param() == Complex(0.4));
        CHECK(parse_function("automorphism:zeta=0.3+0.2i").param() == Complex(0.3, 0.2));
        for (const auto &fn : list_catalog()) {
            CHECK(parse_function(fn.id()).id() == fn.id());
        }
        CHECK_THROWS_AS(parse_function("nope"), std::invalid_argument);
        CHECK_THROWS_AS(parse_function("exp_scale:q=4"), std::invalid_argument);
        CHECK_THROWS_AS(parse_function("koebe:k=1"), std::invalid_argument);

        CHECK(parse_complex("1.5") == Complex(1.5));
        CHECK(parse_complex("-2i") == Complex(0.0, -2.0));
        CHECK(parse_complex("-i") == Complex(0.0, -1.0));
        CHECK(parse_complex("0.3-0.2i") == Complex(0.3, -0.2));
        CHECK(parse_complex("1e-3+4i") == Complex(1e-3, 4.0));
        CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
        CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
        for (const Complex z : {Complex(0.1, 0.0), Complex(0.3, -0.2), Complex(0.0, 1e-7), Complex(-1.0 / 3.0, 2.0)}) {
            CHECK(parse_complex(format_complex(z)) == z);
        }
    }
}
