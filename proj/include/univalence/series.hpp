#pragma once

// Truncated power series sum_{k=0}^{N} c_k (w - z0)^k with complex coefficients.
//
// Every operation is templated on the coefficient type so the same code runs in
// double precision (PowerSeries) and in the Boost.Multiprecision tiers declared
// in numeric.hpp. All operations are pure.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "univalence/error.hpp"
#include "univalence/numeric.hpp"

namespace univalence {

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-m+1) / m!.
///
/// Equals 1 for m = 0 whatever alpha is, and vanishes once the falling
/// factorial passes through zero (integer alpha >= 0, m > alpha).
template <class Real = double>
Real gen_binomial(double alpha, int m)
{
    if (m < 0) {
        throw std::invalid_argument("gen_binomial: m must be non-negative, got " + std::to_string(m));
    }
    Real value(1);
    const Real a(alpha);
    for (int i = 0; i < m; ++i) {
        value *= (a - Real(i));
        value /= Real(i + 1);
    }
    return value;
}

template <class C>
bool is_finite_scalar(const C &z)
{
    using std::imag;
    using std::isfinite;
    using std::real;
    return isfinite(real(z)) && isfinite(imag(z));
}

template <class C>
class BasicPowerSeries
{
public:
    using scalar_type = C;

    BasicPowerSeries(Complex center, std::vector<C> coeffs) : center_(center), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("PowerSeries: needs at least one coefficient");
        }
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!is_finite_scalar(coeffs_[k])) {
                throw NumericError("PowerSeries: coefficient " + std::to_string(k) + " is not finite");
            }
        }
    }

    static BasicPowerSeries zero(Complex center, int order)
    {
        return BasicPowerSeries(center, std::vector<C>(static_cast<std::size_t>(check_order(order)) + 1, C(0)));
    }

    /// 1 + 0 t + ... + 0 t^order.
    static BasicPowerSeries one(Complex center, int order)
    {
        auto s = zero(center, order);
        s.coeffs_[0] = C(1);
        return s;
    }

    Complex center() const { return center_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C> &coeffs() const { return coeffs_; }
    const C &operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("PowerSeries: order must be non-negative");
        }
        return order;
    }

    Complex center_;
    std::vector<C> coeffs_;
};

using PowerSeries = BasicPowerSeries<Complex>;

namespace detail {

inline void require_same_center(Complex a, Complex b, const char *op)
{
    if (std::abs(a - b) > 1e-14 * (1.0 + std::abs(a))) {
        throw std::invalid_argument(std::string(op) + ": series centers differ");
    }
}

} // namespace detail

template <class C>
BasicPowerSeries<C> ps_truncate(const BasicPowerSeries<C> &a, int order)
{
    if (order < 0 || order > a.order()) {
        throw std::invalid_argument("ps_truncate: order out of range");
    }
    return {a.center(), std::vector<C>(a.coeffs().begin(), a.coeffs().begin() + order + 1)};
}

template <class C>
BasicPowerSeries<C> ps_scale(const BasicPowerSeries<C> &a, const C &factor)
{
    std::vector<C> out(a.coeffs());
    for (auto &c : out) {
        c *= factor;
    }
    return {a.center(), std::move(out)};
}

/// Cauchy product truncated at min(a.order, b.order).
template <class C>
BasicPowerSeries<C> ps_mul(const BasicPowerSeries<C> &a, const BasicPowerSeries<C> &b)
{
    detail::require_same_center(a.center(), b.center(), "ps_mul");
    const int n_max = std::min(a.order(), b.order());
    std::vector<C> out(static_cast<std::size_t>(n_max) + 1, C(0));
    for (int n = 0; n <= n_max; ++n) {
        C acc(0);
        for (int k = 0; k <= n; ++k) {
            acc += a[k] * b[n - k];
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return {a.center(), std::move(out)};
}

/// Multiplicative inverse; the constant term must not vanish.
template <class C>
BasicPowerSeries<C> ps_recip(const BasicPowerSeries<C> &a)
{
    using std::abs;
    if (abs(a[0]) == 0) {
        throw NumericError("non-invertible series: constant term vanishes");
    }
    const int n_max = a.order();
    std::vector<C> b(static_cast<std::size_t>(n_max) + 1, C(0));
    const C inv0 = C(1) / a[0];
    b[0] = inv0;
    for (int n = 1; n <= n_max; ++n) {
        C acc(0);
        for (int k = 1; k <= n; ++k) {
            acc += a[k] * b[static_cast<std::size_t>(n - k)];
        }
        b[static_cast<std::size_t>(n)] = -acc * inv0;
    }
    return {a.center(), std::move(b)};
}

template <class C>
BasicPowerSeries<C> ps_derivative(const BasicPowerSeries<C> &a)
{
    if (a.order() < 1) {
        throw std::invalid_argument("ps_derivative: order must be at least 1");
    }
    std::vector<C> out(static_cast<std::size_t>(a.order()));
    for (int k = 0; k < a.order(); ++k) {
        out[static_cast<std::size_t>(k)] = a[k + 1] * C(k + 1);
    }
    return {a.center(), std::move(out)};
}

/// a^lambda for a series with constant term 1, principal branch (value 1 at t = 0).
///
/// Uses n b_n = sum_{k=1}^{n} ((lambda+1) k - n) a_k b_{n-k}, which follows from
/// (a^lambda)' a = lambda a' a^lambda.
template <class C>
BasicPowerSeries<C> ps_pow_real(const BasicPowerSeries<C> &a, double lambda)
{
    if (std::abs(to_complex(a[0]) - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("ps_pow_real: unnormalized base (constant term must be 1)");
    }
    using R = real_t<C>;
    const int n_max = a.order();
    std::vector<C> b(static_cast<std::size_t>(n_max) + 1, C(0));
    b[0] = C(1);
    const R lp1 = R(lambda) + R(1);
    for (int n = 1; n <= n_max; ++n) {
        C acc(0);
        for (int k = 1; k <= n; ++k) {
            acc += a[k] * b[static_cast<std::size_t>(n - k)] * C(lp1 * R(k) - R(n));
        }
        b[static_cast<std::size_t>(n)] = acc / C(R(n));
    }
    return {a.center(), std::move(b)};
}

/// outer(inner(t)) truncated to the common order.
///
/// outer is expanded about the point that inner's values are offsets from, so
/// inner must have a zero constant term. The result lives at inner's center.
template <class C>
BasicPowerSeries<C> ps_compose(const BasicPowerSeries<C> &outer, const BasicPowerSeries<C> &inner)
{
    using std::abs;
    if (abs(inner[0]) != 0) {
        throw std::invalid_argument("ps_compose: inner series must have zero constant term");
    }
    const int n_max = std::min(outer.order(), inner.order());
    const auto inner_t = ps_truncate(inner, n_max);
    auto acc = BasicPowerSeries<C>::zero(inner.center(), n_max);
    std::vector<C> work(acc.coeffs());
    work[0] = outer[n_max];
    for (int k = n_max - 1; k >= 0; --k) {
        auto prod = ps_mul(BasicPowerSeries<C>(inner.center(), work), inner_t);
        work = prod.coeffs();
        work[0] += outer[k];
    }
    return {inner.center(), std::move(work)};
}

/// Horner evaluation at w; the caller keeps |w - center| inside the reliable radius.
template <class C>
C ps_eval(const BasicPowerSeries<C> &a, Complex w)
{
    const C t = make_scalar<C>(w - a.center());
    C acc = a[a.order()];
    for (int k = a.order() - 1; k >= 0; --k) {
        acc = acc * t + a[k];
    }
    return acc;
}

/// Re-expansion about new_center (Taylor shift). Coefficients beyond the
/// input order are unknown, so the shifted series is exact only as a
/// polynomial identity.
template <class C>
BasicPowerSeries<C> ps_recenter(const BasicPowerSeries<C> &a, Complex new_center)
{
    const C d = make_scalar<C>(new_center - a.center());
    std::vector<C> out(a.coeffs());
    // Repeated synthetic division by (t - d).
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        for (int k = n - 1; k >= i; --k) {
            out[static_cast<std::size_t>(k)] += d * out[static_cast<std::size_t>(k + 1)];
        }
    }
    return {new_center, std::move(out)};
}

template <class To, class From>
BasicPowerSeries<To> ps_convert(const BasicPowerSeries<From> &a)
{
    std::vector<To> out;
    out.reserve(a.coeffs().size());
    for (const auto &c : a.coeffs()) {
        if constexpr (std::is_same_v<To, Complex>) {
            out.push_back(to_complex(c));
        } else {
            out.push_back(make_scalar<To>(to_complex(c)));
        }
    }
    return {a.center(), std::move(out)};
}

} // namespace univalence
