#include "univalence/sequences.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "univalence/error.hpp"

namespace univalence {

namespace {

constexpr double identity_tol = 1e-11;

void check_identity(Complex got, Complex want, const char *what)
{
    const double scale = std::max({1.0, std::abs(got), std::abs(want)});
    if (std::abs(got - want) > identity_tol * scale) {
        throw NumericError(std::string("internal consistency check failed: ") + what);
    }
}

// Sum of phi_{k_1} ... phi_{k_parts} over weak compositions of total into parts.
Complex composition_sum(const std::vector<Complex> &phi, int total, int parts)
{
    if (parts == 0) {
        return total == 0 ? Complex(1.0) : Complex(0.0);
    }
    Complex acc = 0.0;
    for (int k = 0; k <= total; ++k) {
        acc += phi[static_cast<std::size_t>(k)] * composition_sum(phi, total - k, parts - 1);
    }
    return acc;
}

} // namespace

std::string to_string(SequenceKind kind)
{
    switch (kind) {
    case SequenceKind::phi:
        return "phi";
    case SequenceKind::Phi:
        return "Phi";
    case SequenceKind::Psi:
        return "Psi";
    }
    return "?";
}

std::vector<long double> reciprocal_majorant(const PowerSeries &f, int count)
{
    if (f.order() < count + 1) {
        throw std::invalid_argument("reciprocal_majorant: series order must be at least count + 1");
    }
    const auto g = normalized_difference_quotient(ps_truncate(f, count + 1));
    const auto n_terms = static_cast<std::size_t>(count) + 1;
    std::vector<long double> out(n_terms, 0.0L);
    out[0] = 1.0L;
    for (std::size_t n = 1; n < n_terms; ++n) {
        long double acc = 0.0L;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += static_cast<long double>(std::abs(g[k])) * out[n - k];
        }
        out[n] = acc;
    }
    return out;
}

std::vector<long double> phi_capital_majorant(const PowerSeries &f, double lambda, int count)
{
    const auto r = reciprocal_majorant(f, count);
    const auto n_terms = r.size();
    std::vector<long double> out(n_terms, 0.0L);
    out[0] = 1.0L;
    const long double lam = lambda;
    for (std::size_t n = 1; n < n_terms; ++n) {
        long double acc = 0.0L;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += std::fabs((lam + 1.0L) * k - n) * r[k] * out[n - k];
        }
        out[n] = std::max(acc / n, r[n]);
    }
    return out;
}

LocalInvariants local_invariants(const PowerSeries &f)
{
    if (f.order() < 3) {
        throw std::invalid_argument("local_invariants: series order must be at least 3");
    }
    require_locally_univalent(f);
    const Complex r2 = f[2] / f[1];
    return {f.center(), 2.0 * r2, 6.0 * f[3] / f[1] - 6.0 * r2 * r2};
}

SequenceSet aharonov_phi(const PowerSeries &f, int count)
{
    if (count < 0) {
        throw std::invalid_argument("aharonov_phi: count must be non-negative");
    }
    if (f.order() < count + 2) {
        throw std::invalid_argument("aharonov_phi: series order must be at least count + 2");
    }
    const auto g = normalized_difference_quotient(ps_truncate(f, count + 2));
    const auto r = ps_recip(g);
    SequenceSet out{SequenceKind::phi, std::nullopt, f.center(), {}};
    out.values.assign(r.coeffs().begin() + 1, r.coeffs().end());

    if (f.order() >= 3) {
        const auto inv = local_invariants(f);
        check_identity(out.values[0], -inv.pre_schwarzian / 2.0, "phi_0 = -N_f/2");
        if (count >= 1) {
            check_identity(out.values[1], -inv.schwarzian / 6.0, "phi_1 = -S_f/6");
        }
    }
    return out;
}

double check_phi_recurrence(const CatalogFunction &fn, Complex z, int n, double h)
{
    if (n < 1) {
        throw std::invalid_argument("check_phi_recurrence: n must be at least 1");
    }
    if (!(h > 0.0) || std::abs(z) + h >= 1.0) {
        throw std::invalid_argument("check_phi_recurrence: z +- h must stay inside the disk");
    }
    const int order = n + 3;
    auto phi_at = [&](Complex p) { return aharonov_phi(series_at(fn, p, order), n + 1).values; };

    const auto phi = phi_at(z);
    Complex convolution = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        convolution += phi[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(n - k)];
    }
    const Complex lhs = phi[static_cast<std::size_t>(n + 1)];

    double worst = 0.0;
    for (const Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
        const Complex step = h * dir;
        const Complex plus = phi_at(z + step)[static_cast<std::size_t>(n)];
        const Complex minus = phi_at(z - step)[static_cast<std::size_t>(n)];
        const Complex derivative = (plus - minus) / (2.0 * step);
        const Complex rhs = (derivative - convolution) / static_cast<double>(n + 3);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return worst;
}

SequenceSet phi_capital_direct(const PowerSeries &f, double lambda, int count)
{
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("phi_capital_direct: lambda must be positive");
    }
    if (count < 0) {
        throw std::invalid_argument("phi_capital_direct: count must be non-negative");
    }
    SequenceSet out{SequenceKind::Phi, lambda, f.center(), phi_capital_coefficients(f, lambda, count)};
    out.values[0] = 1.0;

    if (f.order() >= 3) {
        const auto inv = local_invariants(f);
        const Complex nf = inv.pre_schwarzian;
        if (count >= 1) {
            check_identity(out.values[1], -lambda * nf / 2.0, "Phi_1 = -lambda N_f/2");
        }
        if (count >= 2) {
            check_identity(out.values[2], -lambda * inv.schwarzian / 6.0 + lambda * (lambda - 1.0) * nf * nf / 8.0,
                           "Phi_2 = -lambda S_f/6 + lambda(lambda-1) N_f^2/8");
        }
    }
    return out;
}

SequenceSet phi_capital_combinatorial(const SequenceSet &phi, double lambda, int count)
{
    if (phi.kind != SequenceKind::phi) {
        throw std::invalid_argument("phi_capital_combinatorial: input must be an Aharonov sequence");
    }
    if (count > combinatorial_limit) {
        throw std::invalid_argument("phi_capital_combinatorial: enumeration limit is n <= " +
                                    std::to_string(combinatorial_limit));
    }
    if (count < 0 || static_cast<int>(phi.values.size()) < count) {
        throw std::invalid_argument("phi_capital_combinatorial: need phi_0..phi_{count-1}");
    }
    SequenceSet out{SequenceKind::Phi, lambda, phi.center, std::vector<Complex>(static_cast<std::size_t>(count) + 1)};
    out.values[0] = 1.0;
    for (int n = 1; n <= count; ++n) {
        Complex acc = 0.0;
        for (int j = 1; j <= n; ++j) {
            acc += gen_binomial(lambda, j) * composition_sum(phi.values, n - j, j);
        }
        out.values[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

SequenceSet psi_sequence(const PowerSeries &f, int count)
{
    require_in_disk(f.center(), "psi_sequence: center");
    return {SequenceKind::Psi, std::nullopt, f.center(), psi_coefficients(f, count)};
}

SequenceSet psi_sequence(const CatalogFunction &fn, Complex z, int count)
{
    require_in_disk(z, "psi_sequence: center");
    const auto f = series_at(fn, z, count + 2);
    // phi_k is coefficient k + 1 of the reciprocal.
    const auto phi = reciprocal_majorant(f, count + 1);

    // Largest absolute summand over n, in long double.
    const auto n_terms = static_cast<std::size_t>(count) + 1;
    const long double r = std::abs(z);
    const long double s = 1.0L - r * r;
    std::vector<long double> pow_r(n_terms), pow_s(n_terms + 1), pascal;
    pow_r[0] = pow_s[0] = 1.0L;
    for (std::size_t i = 1; i < n_terms; ++i) {
        pow_r[i] = pow_r[i - 1] * r;
    }
    for (std::size_t i = 1; i <= n_terms; ++i) {
        pow_s[i] = pow_s[i - 1] * s;
    }
    long double worst = 1.0L;
    for (std::size_t n = 1; n < n_terms; ++n) {
        pascal.push_back(1.0L);
        for (std::size_t i = pascal.size() - 1; i-- > 1;) {
            pascal[i] += pascal[i - 1];
        }
        long double acc = 0.0L;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += pascal[k - 1] * pow_r[n - k] * pow_s[k + 1] * phi[k + 1];
        }
        worst = std::max({worst, acc, phi[n + 1]});
    }
    const int digits = digits_for_loss(static_cast<double>(std::log10(worst)));
    auto values = with_working_digits(digits, [&]<class C>() {
        const auto psi = psi_coefficients(fn.template series<C>(z, count + 2), count);
        std::vector<Complex> out(psi.size());
        for (std::size_t n = 0; n < psi.size(); ++n) {
            out[n] = to_complex(psi[n]);
        }
        return out;
    });
    return {SequenceKind::Psi, std::nullopt, z, std::move(values)};
}

} // namespace univalence
