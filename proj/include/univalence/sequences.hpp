#pragma once

// Coefficient sequences attached to a locally univalent f at a point z:
//
//   f'(z) / (f(w) - f(z))            = 1/(w-z) + sum_{n>=0} phi_n (w-z)^n
//   [f'(z)(w-z) / (f(w) - f(z))]^lam = sum_{n>=0} Phi_{lam,n} (w-z)^n
//
// and Psi_n, the exterior coefficients of the reciprocal Koebe transform.

#include <optional>
#include <string>
#include <vector>

#include "univalence/catalog.hpp"
#include "univalence/numeric.hpp"
#include "univalence/series.hpp"

namespace univalence {

struct LocalInvariants {
    Complex center;
    Complex pre_schwarzian; // N_f = f''/f'
    Complex schwarzian;     // S_f = (f''/f')' - (f''/f')^2 / 2
};

enum class SequenceKind { phi, Phi, Psi };

std::string to_string(SequenceKind kind);

struct SequenceSet {
    SequenceKind kind = SequenceKind::phi;
    std::optional<double> lambda; // only for Phi
    Complex center;
    std::vector<Complex> values; // indexed from 0
};

/// Throws NumericError("f'(z)=0: ...") when c_1 is negligible against the
/// neighbouring coefficients.
template <class C>
void require_locally_univalent(const BasicPowerSeries<C> &f)
{
    double scale = 0.0;
    for (int k = 0; k <= std::min(3, f.order()); ++k) {
        scale = std::max(scale, magnitude(f[k]));
    }
    if (!(magnitude(f[1]) > 1e-12 * std::max(scale, 1e-300))) {
        throw NumericError("f'(z)=0: not locally univalent at z = " + format_complex(f.center()));
    }
}

/// (f(z+t) - f(z)) / (c_1 t) = 1 + (c_2/c_1) t + ..., of order f.order() - 1.
template <class C>
BasicPowerSeries<C> normalized_difference_quotient(const BasicPowerSeries<C> &f)
{
    require_locally_univalent(f);
    std::vector<C> g(static_cast<std::size_t>(f.order()));
    const C inv1 = C(1) / f[1];
    for (int k = 1; k <= f.order(); ++k) {
        g[static_cast<std::size_t>(k - 1)] = f[k] * inv1;
    }
    g[0] = C(1);
    return {f.center(), std::move(g)};
}

/// Phi_{lam,0..count} without the consistency assertions; needs f.order() >= count + 1.
template <class C>
std::vector<C> phi_capital_coefficients(const BasicPowerSeries<C> &f, double lambda, int count)
{
    if (f.order() < count + 1) {
        throw std::invalid_argument("Phi sequence: series order must be at least count + 1");
    }
    const auto g = normalized_difference_quotient(ps_truncate(f, count + 1));
    const auto q = ps_pow_real(ps_recip(g), lambda);
    return q.coeffs();
}

/// Majorants of the coefficient recurrences, summed in absolute value: entry n
/// bounds the terms combined when forming coefficient n of 1/g (reciprocal_majorant,
/// n = 0..count) or of (1/g)^lam (phi_capital_majorant), g the normalized
/// difference quotient of f. Their size relative to the result measures the
/// digits lost in double precision.
std::vector<long double> reciprocal_majorant(const PowerSeries &f, int count);
std::vector<long double> phi_capital_majorant(const PowerSeries &f, double lambda, int count);

LocalInvariants local_invariants(const PowerSeries &f_series);

/// phi_0..phi_count from the series reciprocal; needs order >= count + 2.
SequenceSet aharonov_phi(const PowerSeries &f_series, int count);

/// Relative residual of phi_{n+1} = [phi_n' - sum_{k=1}^{n-1} phi_k phi_{n-k}] / (n+3),
/// with phi_n' from central differences of step h along both the real and the
/// imaginary direction (phi_n is holomorphic in z). Returns the larger residual.
double check_phi_recurrence(const CatalogFunction &fn, Complex z, int n, double h = 1e-4);

/// Phi_{lam,0..count} through the lam-th power of the reciprocal series.
SequenceSet phi_capital_direct(const PowerSeries &f_series, double lambda, int count);

/// Phi_{lam,0..count} by summing binom(lam, j) phi_{k_1} ... phi_{k_j} over
/// weak compositions (k_1..k_j) of n - j. Limited to count <= 12.
SequenceSet phi_capital_combinatorial(const SequenceSet &phi, double lambda, int count);

inline constexpr int combinatorial_limit = 12;

/// Psi_0..Psi_count at the center of f; needs f.order() >= count + 2.
template <class C>
std::vector<C> psi_coefficients(const BasicPowerSeries<C> &f, int count)
{
    using R = real_t<C>;
    using std::conj;
    if (count < 0) {
        throw std::invalid_argument("psi_sequence: count must be non-negative");
    }
    if (f.order() < count + 2) {
        throw std::invalid_argument("psi_sequence: series order must be at least count + 2");
    }
    require_locally_univalent(f);
    // phi_k = r_{k+1}
    const auto r = ps_recip(normalized_difference_quotient(ps_truncate(f, count + 2)));
    const auto n_terms = static_cast<std::size_t>(count) + 1;
    const C zb = conj(make_scalar<C>(f.center()));
    const C s = C(1) - zb * conj(zb);
    std::vector<C> pow_mzb(n_terms), pow_s(n_terms + 1);
    pow_mzb[0] = C(1);
    pow_s[0] = C(1);
    for (std::size_t i = 1; i < n_terms; ++i) {
        pow_mzb[i] = pow_mzb[i - 1] * (-zb);
    }
    for (std::size_t i = 1; i <= n_terms; ++i) {
        pow_s[i] = pow_s[i - 1] * s;
    }
    std::vector<C> out(n_terms, C(0));
    out[0] = zb + s * r[1];
    std::vector<R> pascal; // C(n-1, i), i = 0..n-1
    for (std::size_t n = 1; n < n_terms; ++n) {
        pascal.push_back(R(1));
        for (std::size_t i = pascal.size() - 1; i-- > 1;) {
            pascal[i] += pascal[i - 1];
        }
        C acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            acc += C(pascal[k - 1]) * pow_mzb[n - k] * pow_s[k + 1] * r[k + 1];
        }
        out[n] = acc;
    }
    return out;
}

/// Psi_0..Psi_count from a double-precision series. The binomial sum cancels
/// strongly for |z| > 0 and large count; prefer the catalog overload.
SequenceSet psi_sequence(const PowerSeries &f_series, int count);

/// Psi_0..Psi_count at z, in extended precision when the binomial sum cancels.
SequenceSet psi_sequence(const CatalogFunction &fn, Complex z, int count);

} // namespace univalence
