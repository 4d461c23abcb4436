#pragma once

// Closed-form analytic test functions on the unit disk with ground-truth
// univalence flags. Expansions come from exact Taylor formulas, never from
// numerical differentiation.

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "univalence/numeric.hpp"
#include "univalence/series.hpp"

namespace univalence {

enum class FunctionKind {
    identity,       // w
    koebe,          // w / (1 - w)^2
    rotated_koebe,  // w / (1 - e^{i theta} w)^2
    bounded,        // w / (1 - b w), |b| <= 1
    automorphism,   // (w + zeta) / (1 + conj(zeta) w), |zeta| < 1
    cayley,         // 1 / (1 - w)
    exp_scale,      // exp(k w)
    quad_poly,      // w + a w^2
};

struct UnivalenceFlags {
    bool locally_univalent_on_disk = false;
    bool univalent_on_disk = false;
    bool full_mapping = false;
};

class CatalogFunction
{
public:
    static CatalogFunction identity();
    static CatalogFunction koebe();
    static CatalogFunction rotated_koebe(double theta);
    static CatalogFunction bounded(Complex b);
    static CatalogFunction automorphism(Complex zeta);
    static CatalogFunction cayley();
    static CatalogFunction exp_scale(Complex k);
    static CatalogFunction quad_poly(Complex a);

    /// Canonical spec string, parseable by parse_function().
    const std::string &id() const { return id_; }
    FunctionKind kind() const { return kind_; }
    Complex param() const { return param_; }
    const UnivalenceFlags &flags() const { return flags_; }
    /// One-line justification of the flags.
    const std::string &note() const { return note_; }

    /// f(0) = 0 and f'(0) = 1.
    bool normalized() const;

    Complex value(Complex w) const;
    Complex derivative(Complex w) const;

    /// Taylor coefficients f^(k)(center)/k!, k = 0..order.
    template <class C>
    BasicPowerSeries<C> series(Complex center, int order) const;

private:
    CatalogFunction(FunctionKind kind, Complex param, std::string id, UnivalenceFlags flags, std::string note);

    FunctionKind kind_;
    Complex param_;
    std::string id_;
    UnivalenceFlags flags_;
    std::string note_;
};

void require_in_disk(Complex z, const char *what);

/// Expansion of fn about center, |center| < 1.
PowerSeries series_at(const CatalogFunction &fn, Complex center, int order);

/// The registry of built-in entries with default parameters.
std::vector<CatalogFunction> list_catalog();

/// Parses "koebe", "exp_scale:k=4", "quad_poly:a=0.4+0i", "rotated_koebe:theta=1",
/// "bounded:b=0.5", "automorphism:zeta=0.3+0.2i". Throws std::invalid_argument.
CatalogFunction parse_function(std::string_view spec);

/// Parses "1.5", "-2i", "0.3-0.2i", "1e-3+4i".
Complex parse_complex(std::string_view text);

/// Shortest round-trippable rendering, "re", "re+imi" or "re-imi".
std::string format_complex(Complex z);

// ---------------------------------------------------------------------------

template <class C>
BasicPowerSeries<C> CatalogFunction::series(Complex center, int order) const
{
    require_in_disk(center, "series_at: center");
    if (order < 1) {
        throw std::invalid_argument("series_at: order must be at least 1");
    }
    using R = real_t<C>;
    const auto n = static_cast<std::size_t>(order) + 1;
    std::vector<C> c(n, C(0));
    const C z = make_scalar<C>(center);
    const C one(1);

    switch (kind_) {
    case FunctionKind::identity:
        c[0] = z;
        c[1] = one;
        break;
    case FunctionKind::koebe:
    case FunctionKind::rotated_koebe: {
        // k(w) = 1/(1-w)^2 - 1/(1-w); for the rotation f(w) = k(e w)/e.
        const C e = kind_ == FunctionKind::koebe ? one : make_scalar<C>(std::polar(1.0, param_.real()));
        const C inv_u = one / (one - e * z);
        C pow_u = inv_u; // u^{-(k+1)}
        C pow_e = one / e; // e^{k-1}
        for (std::size_t k = 0; k < n; ++k) {
            c[k] = (C(R(k + 1)) * pow_u * inv_u - pow_u) * pow_e;
            pow_u *= inv_u;
            pow_e *= e;
        }
        break;
    }
    case FunctionKind::bounded: {
        const C b = make_scalar<C>(param_);
        const C v = one - b * z;
        c[0] = z / v;
        C term = one / (v * v); // b^{k-1} / v^{k+1}
        for (std::size_t k = 1; k < n; ++k) {
            c[k] = term;
            term *= b / v;
        }
        break;
    }
    case FunctionKind::automorphism: {
        using std::conj;
        const C zeta = make_scalar<C>(param_);
        const C zb = conj(zeta);
        const C v = one + zb * z;
        c[0] = (z + zeta) / v;
        C term = (one - zeta * zb) / (v * v);
        for (std::size_t k = 1; k < n; ++k) {
            c[k] = term;
            term *= -zb / v;
        }
        break;
    }
    case FunctionKind::cayley: {
        const C inv_u = one / (one - z);
        C term = inv_u;
        for (std::size_t k = 0; k < n; ++k) {
            c[k] = term;
            term *= inv_u;
        }
        break;
    }
    case FunctionKind::exp_scale: {
        using std::exp;
        const C k = make_scalar<C>(param_);
        C term = exp(k * z);
        for (std::size_t j = 0; j < n; ++j) {
            c[j] = term;
            term *= k / C(R(j + 1));
        }
        break;
    }
    case FunctionKind::quad_poly: {
        const C a = make_scalar<C>(param_);
        c[0] = z + a * z * z;
        c[1] = one + C(R(2)) * a * z;
        if (n > 2) {
            c[2] = a;
        }
        break;
    }
    }
    return {center, std::move(c)};
}

} // namespace univalence
