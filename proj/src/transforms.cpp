#include "univalence/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace univalence {

MobiusShift::MobiusShift(Complex zeta) : zeta_(zeta)
{
    require_in_disk(zeta, "MobiusShift: zeta");
}

PowerSeries mobius_sigma_series(Complex zeta, int order)
{
    require_in_disk(zeta, "mobius_sigma_series: zeta");
    if (order < 1) {
        throw std::invalid_argument("mobius_sigma_series: order must be at least 1");
    }
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, 0.0);
    const Complex minus_zb = -std::conj(zeta);
    Complex term = 1.0 - std::norm(zeta);
    for (int k = 1; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = term;
        term *= minus_zb;
    }
    return {0.0, std::move(c)};
}

PowerSeries compose_with_automorphism(const CatalogFunction &fn, Complex zeta, int order)
{
    return ps_compose(series_at(fn, zeta, order), mobius_sigma_series(zeta, order));
}

PowerSeries koebe_transform(const CatalogFunction &fn, Complex z, int order)
{
    const auto f_at_z = series_at(fn, z, std::max(order, 3));
    require_locally_univalent(f_at_z);
    const auto composed = compose_with_automorphism(fn, z, order);
    const Complex scale = 1.0 / ((1.0 - std::norm(z)) * f_at_z[1]);
    std::vector<Complex> c(composed.coeffs());
    for (auto &x : c) {
        x *= scale;
    }
    c[0] = 0.0;
    c[1] = 1.0;
    return {0.0, std::move(c)};
}

std::vector<Complex> lemma2_coefficients(const SequenceSet &phi_at_z, Complex zeta, Complex w, int count)
{
    if (phi_at_z.kind != SequenceKind::Phi || !phi_at_z.lambda) {
        throw std::invalid_argument("lemma2_coefficients: input must be a Phi sequence");
    }
    const MobiusShift sigma(zeta);
    require_in_disk(w, "lemma2_coefficients: w");
    const Complex z = sigma(w);
    if (std::abs(z - phi_at_z.center) > 1e-12) {
        throw std::invalid_argument("lemma2_coefficients: Phi must be taken at sigma_zeta(w) = " + format_complex(z));
    }
    return shifted_phi_sum<Complex>(phi_at_z.values, *phi_at_z.lambda, zeta, w, count);
}

} // namespace univalence
