#pragma once

// Disk integrals: a graded polar Gauss-Legendre x trapezoid rule about an
// arbitrary interior origin, the Prawitz integral with kernel P(f; z, w), the
// Grunsky kernel U(f; z, w) and its L^2 norm U_f(z).

#include <functional>

#include "univalence/catalog.hpp"
#include "univalence/numeric.hpp"

namespace univalence {

struct MeshSpec {
    int radial_nodes = 256;
    int angular_nodes = 256;
    double grading = 2.0; // r = r_max(theta) s^grading, clusters nodes at the origin
    Complex center{0.0, 0.0};

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // |refined - base|
    MeshSpec mesh;               // the base mesh
};

using DiskIntegrand = std::function<double(Complex)>;

/// (1/pi) * integral over the unit disk, evaluated on mesh and on a mesh with
/// twice the radial and angular nodes; value is the refined result. Throws NumericError
/// on a non-finite sample.
QuadratureResult integrate_disk(const DiskIntegrand &integrand, const MeshSpec &mesh);

/// Gauss-Legendre nodes and weights on [0, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre_unit(int n);

/// Length of the ray from c in direction theta to the unit circle.
double chord_length(Complex c, double theta);

inline double default_delta(Complex z)
{
    return 0.15 * (1.0 - std::abs(z));
}

inline constexpr int near_diagonal_order = 32;

/// Integrand (1 - |z|^2)^{2 lam} |P(f; z, w)|^2 / |w - z|^{2 + 2 lam}; inside
/// |w - z| < delta it is summed from the Taylor coefficients of P in w - z.
class PrawitzIntegrand
{
public:
    PrawitzIntegrand(const CatalogFunction &fn, double lambda, Complex z, double delta);

    double operator()(Complex w) const;
    /// P(f; z, w) by direct evaluation of the closed form, the lam-power on the continued branch.
    Complex kernel_direct(Complex w) const;
    /// P(f; z, w) / (w - z) from the truncated series.
    Complex kernel_over_t_series(Complex w) const;
    /// Coefficients p_n of P = sum_{n>=1} p_n (w-z)^n.
    const std::vector<Complex> &coefficients() const { return coeffs_; }

private:
    CatalogFunction fn_;
    double lambda_;
    Complex z_;
    double delta_;
    double weight_; // (1 - |z|^2)^{2 lam}
    Complex fz_, dfz_;
    std::vector<Complex> coeffs_;
};

/// log q(w) for q(w) = f'(z)(w - z)/(f(w) - f(z)), continued from log q(z) = 0
/// along the segment [z, w]. q has no zeros on the disk when f is univalent, and
/// the disk is star-shaped about z, so this is the analytic branch.
Complex continued_log_q(const CatalogFunction &fn, Complex z, Complex fz, Complex dfz, Complex w);

/// Number of rays of mesh (about z) on which the principal argument of q(w)
/// leaves the continued branch at some node with |w - z| >= delta, i.e. where a
/// principal-branch power would be discontinuous.
int power_branch_crossings(const CatalogFunction &fn, Complex z, const MeshSpec &mesh, double delta);

/// (1 - |z|^2)^{2 lam} / pi * integral |P(f; z, w)|^2 / |w - z|^{2(1+lam)} dA for
/// univalent f and lam in (0, 1]. The polar origin of mesh is moved to z.
/// A negative delta selects default_delta(z).
QuadratureResult prawitz_integral(const CatalogFunction &fn, double lambda, Complex z, MeshSpec mesh = {},
                                  double delta = -1.0);

class GrunskyKernel
{
public:
    GrunskyKernel(const CatalogFunction &fn, Complex z, double delta);

    Complex operator()(Complex w) const;
    Complex direct(Complex w) const;
    /// -sum_{n>=1} n phi_n(f; z) (w - z)^{n-1}
    Complex series(Complex w) const;

private:
    CatalogFunction fn_;
    Complex z_;
    double delta_;
    Complex fz_, dfz_;
    std::vector<Complex> phi_;
};

/// U(f; z, w) = f'(z) f'(w) / (f(w) - f(z))^2 - 1/(z - w)^2.
Complex grunsky_kernel_point(const CatalogFunction &fn, Complex z, Complex w, double delta = -1.0);

/// U_f(z) = ((1/pi) integral |U(f; z, w)|^2 dA)^{1/2}; error is |sqrt(refined) - sqrt(base)|.
QuadratureResult grunsky_norm(const CatalogFunction &fn, Complex z, MeshSpec mesh = {}, double delta = -1.0);

struct GrunskyIdentity {
    double psi_sum = 0.0;      // sum_{n=1}^{N} n |Psi_n|^2
    double scaled_norm = 0.0;  // (1 - |z|^2)^2 U_f(z)^2
    double residual = 0.0;     // |difference| / max(1e-12, larger side)
    QuadratureResult norm;
};

GrunskyIdentity psi_grunsky_identity_check(const CatalogFunction &fn, Complex z, int N, MeshSpec mesh = {},
                                           double delta = -1.0);

} // namespace univalence
