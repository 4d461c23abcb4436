#pragma once

// Disk automorphisms sigma_zeta(w) = (w + zeta) / (1 + conj(zeta) w), the
// composition f o sigma_zeta, the Koebe transform and the coefficient shift
// that expresses Phi_n(f o sigma_zeta; w) through Phi_k(f; sigma_zeta(w)).

#include <span>
#include <vector>

#include "univalence/catalog.hpp"
#include "univalence/numeric.hpp"
#include "univalence/sequences.hpp"
#include "univalence/series.hpp"

namespace univalence {

class MobiusShift
{
public:
    explicit MobiusShift(Complex zeta);

    Complex zeta() const { return zeta_; }
    Complex operator()(Complex w) const { return (w + zeta_) / (1.0 + std::conj(zeta_) * w); }
    Complex inverse(Complex z) const { return (z - zeta_) / (1.0 - std::conj(zeta_) * z); }

private:
    Complex zeta_;
};

/// sigma_zeta(w) - zeta about w = 0; zero constant term so it can feed ps_compose.
PowerSeries mobius_sigma_series(Complex zeta, int order);

/// F(w) = f(sigma_zeta(w)) expanded about w = 0.
PowerSeries compose_with_automorphism(const CatalogFunction &fn, Complex zeta, int order);

/// K_f(z; s) = (f(sigma_z(s)) - f(z)) / ((1 - |z|^2) f'(z)) about s = 0, in class S.
PowerSeries koebe_transform(const CatalogFunction &fn, Complex z, int order);

/// Phi_n(F; w), n = 0..count, for F = f o sigma_zeta, from Phi_k(f; sigma_zeta(w)).
std::vector<Complex> lemma2_coefficients(const SequenceSet &phi_at_z, Complex zeta, Complex w, int count);

/// Literal double sum
///
///   sum_{j=0}^{n} (-1)^{n-j} binom(lam, n-j)
///     sum_{k=0}^{j} binom(j-1, j-k) (-conj zeta)^{n-k} (1-|zeta|^2)^k (1 + conj(zeta) w)^{-(n+k)} Phi_k
///
/// for n = 0..count. The common factor (-conj zeta)^{n-j} (1 + conj(zeta) w)^{-(n-j)}
/// is pulled out of the inner sum, which then depends on j only, so the cost is
/// quadratic in count.
template <class C>
std::vector<C> shifted_phi_sum(std::span<const C> phi, double lambda, Complex zeta, Complex w, int count)
{
    using R = real_t<C>;
    using std::conj;
    if (count < 0 || static_cast<int>(phi.size()) < count + 1) {
        throw std::invalid_argument("shifted_phi_sum: need Phi_0..Phi_count");
    }
    const auto n_terms = static_cast<std::size_t>(count) + 1;
    const C zeta_c = make_scalar<C>(zeta);
    const C minus_zb = -conj(zeta_c);
    const C one(1);
    const C v = one + conj(zeta_c) * make_scalar<C>(w);
    const C inv_v = one / v;
    const C s = one - zeta_c * conj(zeta_c);

    // inner[j] = sum_k binom(j-1, j-k) (-zb)^{j-k} s^k v^{-(j+k)} Phi_k
    // binom(j-1, j-k) is 1 at j = k = 0, 0 for k = 0 < j, and C(j-1, k-1) otherwise.
    std::vector<C> inner(n_terms, C(0));
    std::vector<R> pascal; // C(j-1, i), i = 0..j-1
    std::vector<C> pow_mzb(n_terms), pow_inv_v(2 * n_terms), pow_s(n_terms);
    pow_mzb[0] = one;
    pow_s[0] = one;
    pow_inv_v[0] = one;
    for (std::size_t i = 1; i < n_terms; ++i) {
        pow_mzb[i] = pow_mzb[i - 1] * minus_zb;
        pow_s[i] = pow_s[i - 1] * s;
    }
    for (std::size_t i = 1; i < pow_inv_v.size(); ++i) {
        pow_inv_v[i] = pow_inv_v[i - 1] * inv_v;
    }
    inner[0] = phi[0];
    for (std::size_t j = 1; j < n_terms; ++j) {
        // Advance the row from C(j-2, .) to C(j-1, .).
        if (pascal.empty()) {
            pascal.push_back(R(1));
        } else {
            pascal.push_back(R(1));
            for (std::size_t i = pascal.size() - 2; i > 0; --i) {
                pascal[i] += pascal[i - 1];
            }
        }
        C acc(0);
        for (std::size_t k = 1; k <= j; ++k) {
            acc += C(pascal[k - 1]) * pow_mzb[j - k] * pow_s[k] * pow_inv_v[j + k] * phi[k];
        }
        inner[j] = acc;
    }

    std::vector<R> binom_lambda(n_terms);
    for (std::size_t m = 0; m < n_terms; ++m) {
        binom_lambda[m] = m == 0 ? R(1) : binom_lambda[m - 1] * (R(lambda) - R(m - 1)) / R(m);
    }
    // (-1)^{n-j} (-zb)^{n-j} v^{-(n-j)} = (conj zeta / v)^{n-j}
    const C ratio = conj(zeta_c) * inv_v;
    std::vector<C> pow_ratio(n_terms);
    pow_ratio[0] = one;
    for (std::size_t i = 1; i < n_terms; ++i) {
        pow_ratio[i] = pow_ratio[i - 1] * ratio;
    }
    std::vector<C> out(n_terms, C(0));
    for (std::size_t n = 0; n < n_terms; ++n) {
        C acc(0);
        for (std::size_t j = 0; j <= n; ++j) {
            acc += C(binom_lambda[n - j]) * pow_ratio[n - j] * inner[j];
        }
        out[n] = acc;
    }
    return out;
}

} // namespace univalence
