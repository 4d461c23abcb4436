#include "univalence/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "univalence/error.hpp"
#include "univalence/sequences.hpp"
#include "univalence/series.hpp"

namespace univalence {

namespace {

constexpr double pi = std::numbers::pi;

double polar_rule(const DiskIntegrand &integrand, const MeshSpec &mesh)
{
    const auto rule = gauss_legendre_unit(mesh.radial_nodes);
    const double g = mesh.grading;
    const double dtheta = 2.0 * pi / mesh.angular_nodes;
    CompensatedSum total;
    for (int a = 0; a < mesh.angular_nodes; ++a) {
        const double theta = dtheta * (a + 0.5);
        const Complex dir = std::polar(1.0, theta);
        const double rmax = chord_length(mesh.center, theta);
        CompensatedSum ray;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double s = rule.nodes[i];
            const double r = rmax * std::pow(s, g);
            // r dr = rmax^2 g s^{2g-1} ds
            const double jac = rmax * rmax * g * std::pow(s, 2.0 * g - 1.0);
            const Complex w = mesh.center + r * dir;
            const double val = integrand(w);
            if (!std::isfinite(val)) {
                throw NumericError("singular sample at w = " + format_complex(w) + " (theta = " +
                                   std::to_string(theta) + ", r = " + std::to_string(r) + ")");
            }
            ray.add(rule.weights[i] * val * jac);
        }
        total.add(ray.value() * dtheta);
    }
    return total.value() / pi;
}

// Both directions are doubled: boundary singularities of the integrand
// (the Koebe cusp at w = 1 for small lam) are mostly an angular error.
MeshSpec refined(MeshSpec mesh)
{
    mesh.radial_nodes *= 2;
    mesh.angular_nodes *= 2;
    return mesh;
}

void require_univalent(const CatalogFunction &fn, const char *what)
{
    if (!fn.flags().univalent_on_disk) {
        throw std::invalid_argument(std::string(what) + ": refused, " + fn.id() +
                                    " is not univalent on the disk (f(w) = f(z) for some w != z)");
    }
}

double resolve_delta(Complex z, double delta)
{
    if (delta < 0.0) {
        return default_delta(z);
    }
    if (!std::isfinite(delta)) {
        throw std::invalid_argument("delta must be finite");
    }
    return delta;
}

Complex q_value(const CatalogFunction &fn, Complex z, Complex fz, Complex dfz, Complex w)
{
    const Complex q = dfz * (w - z) / (fn.value(w) - fz);
    if (!is_finite(q) || q == 0.0) {
        throw NumericError("q(w) = f'(z)(w - z)/(f(w) - f(z)) is singular at w = " + format_complex(w));
    }
    return q;
}

// Argument increment of q between a and b; bisects until every step turns by less than pi/4.
double arg_increment(const CatalogFunction &fn, Complex z, Complex fz, Complex dfz, Complex a, Complex qa, Complex b,
                     Complex qb, int depth)
{
    const double step = std::arg(qb / qa);
    if (std::abs(step) < 0.25 * pi) {
        return step;
    }
    if (depth == 0) {
        throw NumericError("branch continuation of q(w) failed near w = " + format_complex(b));
    }
    const Complex m = 0.5 * (a + b);
    const Complex qm = q_value(fn, z, fz, dfz, m);
    return arg_increment(fn, z, fz, dfz, a, qa, m, qm, depth - 1) +
           arg_increment(fn, z, fz, dfz, m, qm, b, qb, depth - 1);
}

} // namespace

void MeshSpec::validate() const
{
    if (radial_nodes < 8) {
        throw std::invalid_argument("mesh: radial_nodes must be at least 8");
    }
    if (angular_nodes < 8) {
        throw std::invalid_argument("mesh: angular_nodes must be at least 8");
    }
    if (!(grading >= 1.0) || !std::isfinite(grading)) {
        throw std::invalid_argument("mesh: grading must be at least 1");
    }
    require_in_disk(center, "mesh: center");
}

GaussRule gauss_legendre_unit(int n)
{
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre_unit: n must be positive");
    }
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Map [-1, 1] to [0, 1]; nodes ascending.
        const auto idx = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[idx] = 0.5 * (1.0 + x);
        rule.weights[idx] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

double chord_length(Complex c, double theta)
{
    const double b = std::real(std::conj(c) * std::polar(1.0, theta));
    return -b + std::sqrt(1.0 - std::norm(c) + b * b);
}

QuadratureResult integrate_disk(const DiskIntegrand &integrand, const MeshSpec &mesh)
{
    mesh.validate();
    const double base = polar_rule(integrand, mesh);
    const double fine = polar_rule(integrand, refined(mesh));
    return {fine, std::abs(fine - base), mesh};
}

PrawitzIntegrand::PrawitzIntegrand(const CatalogFunction &fn, double lambda, Complex z, double delta)
    : fn_(fn), lambda_(lambda), z_(z), delta_(delta)
{
    require_in_disk(z, "z");
    const double s = 1.0 - std::norm(z);
    weight_ = std::pow(s, 2.0 * lambda);
    const auto f = series_at(fn, z, near_diagonal_order + 1);
    require_locally_univalent(f);
    fz_ = f[0];
    dfz_ = f[1];
    const auto big_phi = phi_capital_coefficients(f, lambda, near_diagonal_order);
    // p_n = (1 - n/lam) Phi_n - binom(lam - 1, n) (-conj(z)/s)^n
    const Complex x = -std::conj(z) / s;
    coeffs_.assign(static_cast<std::size_t>(near_diagonal_order) + 1, 0.0);
    Complex xn = 1.0;
    for (int n = 1; n <= near_diagonal_order; ++n) {
        xn *= x;
        coeffs_[static_cast<std::size_t>(n)] =
            (1.0 - n / lambda) * big_phi[static_cast<std::size_t>(n)] - gen_binomial(lambda - 1.0, n) * xn;
    }
}

Complex PrawitzIntegrand::kernel_direct(Complex w) const
{
    const Complex t = w - z_;
    const Complex diff = fn_.value(w) - fz_;
    const Complex q_pow = std::exp(lambda_ * continued_log_q(fn_, z_, fz_, dfz_, w));
    const Complex first = fn_.derivative(w) * t / diff * q_pow;
    const Complex second = std::pow((1.0 - std::norm(z_)) / (1.0 - std::conj(z_) * w), 1.0 - lambda_);
    return first - second;
}

Complex PrawitzIntegrand::kernel_over_t_series(Complex w) const
{
    const Complex t = w - z_;
    Complex acc = 0.0;
    for (std::size_t n = coeffs_.size() - 1; n >= 1; --n) {
        acc = acc * t + coeffs_[n];
    }
    return acc;
}

double PrawitzIntegrand::operator()(Complex w) const
{
    const double r = std::abs(w - z_);
    if (r < delta_) {
        return weight_ * std::norm(kernel_over_t_series(w)) * std::pow(r, -2.0 * lambda_);
    }
    return weight_ * std::norm(kernel_direct(w)) * std::pow(r, -2.0 - 2.0 * lambda_);
}

Complex continued_log_q(const CatalogFunction &fn, Complex z, Complex fz, Complex dfz, Complex w)
{
    constexpr int steps = 8;
    constexpr int max_depth = 30;
    Complex a = z;
    Complex qa = 1.0;
    double arg = 0.0;
    for (int i = 1; i <= steps; ++i) {
        const Complex b = z + (w - z) * (static_cast<double>(i) / steps);
        const Complex qb = q_value(fn, z, fz, dfz, b);
        arg += arg_increment(fn, z, fz, dfz, a, qa, b, qb, max_depth);
        a = b;
        qa = qb;
    }
    return {std::log(std::abs(qa)), arg};
}

int power_branch_crossings(const CatalogFunction &fn, Complex z, const MeshSpec &mesh, double delta)
{
    mesh.validate();
    require_in_disk(z, "z");
    const auto rule = gauss_legendre_unit(mesh.radial_nodes);
    const Complex fz = fn.value(z);
    const Complex dfz = fn.derivative(z);
    int rays = 0;
    for (int a = 0; a < mesh.angular_nodes; ++a) {
        const double theta = 2.0 * pi * (a + 0.5) / mesh.angular_nodes;
        const Complex dir = std::polar(1.0, theta);
        const double rmax = chord_length(z, theta);
        Complex prev_w = z;
        Complex prev_q = 1.0;
        double arg = 0.0;
        for (double s : rule.nodes) {
            const double r = rmax * std::pow(s, mesh.grading);
            const Complex w = z + r * dir;
            const Complex q = q_value(fn, z, fz, dfz, w);
            arg += arg_increment(fn, z, fz, dfz, prev_w, prev_q, w, q, 30);
            prev_w = w;
            prev_q = q;
            if (r >= delta && std::abs(arg - std::arg(q)) > pi) {
                ++rays;
                break;
            }
        }
    }
    return rays;
}

QuadratureResult prawitz_integral(const CatalogFunction &fn, double lambda, Complex z, MeshSpec mesh, double delta)
{
    require_univalent(fn, "prawitz_integral");
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("prawitz_integral: lambda must lie in (0, 1]");
    }
    require_in_disk(z, "z");
    mesh.center = z;
    mesh.validate();
    const PrawitzIntegrand integrand(fn, lambda, z, resolve_delta(z, delta));
    return integrate_disk(std::cref(integrand), mesh);
}

GrunskyKernel::GrunskyKernel(const CatalogFunction &fn, Complex z, double delta) : fn_(fn), z_(z), delta_(delta)
{
    require_in_disk(z, "z");
    const auto f = series_at(fn, z, near_diagonal_order + 2);
    require_locally_univalent(f);
    fz_ = f[0];
    dfz_ = f[1];
    phi_ = aharonov_phi(f, near_diagonal_order).values;
}

Complex GrunskyKernel::direct(Complex w) const
{
    const Complex t = w - z_;
    const Complex diff = fn_.value(w) - fz_;
    return dfz_ * fn_.derivative(w) / (diff * diff) - 1.0 / (t * t);
}

Complex GrunskyKernel::series(Complex w) const
{
    const Complex t = w - z_;
    Complex acc = 0.0;
    for (std::size_t n = phi_.size() - 1; n >= 1; --n) {
        acc = acc * t + static_cast<double>(n) * phi_[n];
    }
    return -acc;
}

Complex GrunskyKernel::operator()(Complex w) const
{
    return std::abs(w - z_) < delta_ ? series(w) : direct(w);
}

Complex grunsky_kernel_point(const CatalogFunction &fn, Complex z, Complex w, double delta)
{
    require_in_disk(w, "w");
    const GrunskyKernel kernel(fn, z, resolve_delta(z, delta));
    const Complex u = kernel(w);
    if (!is_finite(u)) {
        throw NumericError("Grunsky kernel is not finite at w = " + format_complex(w));
    }
    return u;
}

QuadratureResult grunsky_norm(const CatalogFunction &fn, Complex z, MeshSpec mesh, double delta)
{
    require_univalent(fn, "grunsky_norm");
    require_in_disk(z, "z");
    mesh.center = z;
    mesh.validate();
    const GrunskyKernel kernel(fn, z, resolve_delta(z, delta));
    const DiskIntegrand integrand = [&kernel](Complex w) { return std::norm(kernel(w)); };
    const double base = polar_rule(integrand, mesh);
    const double fine = polar_rule(integrand, refined(mesh));
    const double v = std::sqrt(std::max(fine, 0.0));
    return {v, std::abs(v - std::sqrt(std::max(base, 0.0))), mesh};
}

GrunskyIdentity psi_grunsky_identity_check(const CatalogFunction &fn, Complex z, int N, MeshSpec mesh, double delta)
{
    if (N < 32) {
        throw std::invalid_argument("psi_grunsky_identity_check: N must be at least 32");
    }
    GrunskyIdentity out;
    out.norm = grunsky_norm(fn, z, mesh, delta);
    const auto psi = psi_sequence(fn, z, N).values;
    CompensatedSum sum;
    for (int n = 1; n <= N; ++n) {
        sum.add(n * std::norm(psi[static_cast<std::size_t>(n)]));
    }
    out.psi_sum = sum.value();
    const double s = 1.0 - std::norm(z);
    out.scaled_norm = s * s * out.norm.value * out.norm.value;
    out.residual = std::abs(out.psi_sum - out.scaled_norm) / std::max({1e-12, out.psi_sum, out.scaled_norm});
    return out;
}

} // namespace univalence
