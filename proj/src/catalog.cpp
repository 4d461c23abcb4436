#include "univalence/catalog.hpp"

#include <charconv>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace univalence {

namespace {

std::string format_double(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) {
        throw std::runtime_error("format_double failed");
    }
    return {buf, ptr};
}

double parse_double(std::string_view text, std::string_view context)
{
    double value = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("cannot parse number '" + std::string(text) + "' in " + std::string(context));
    }
    return value;
}

} // namespace

CatalogFunction::CatalogFunction(FunctionKind kind, Complex param, std::string id, UnivalenceFlags flags,
                                 std::string note)
    : kind_(kind), param_(param), id_(std::move(id)), flags_(flags), note_(std::move(note))
{
    if (flags_.univalent_on_disk && !flags_.locally_univalent_on_disk) {
        throw std::logic_error("catalog: univalent entry must be locally univalent");
    }
    if (flags_.full_mapping && !flags_.univalent_on_disk) {
        throw std::logic_error("catalog: full mapping must be univalent");
    }
}

CatalogFunction CatalogFunction::identity()
{
    return {FunctionKind::identity, {}, "identity", {true, true, false}, "injective; image is the disk itself"};
}

CatalogFunction CatalogFunction::koebe()
{
    return {FunctionKind::koebe,
            {},
            "koebe",
            {true, true, true},
            "maps the disk onto the plane minus the slit (-inf, -1/4], a null set"};
}

CatalogFunction CatalogFunction::rotated_koebe(double theta)
{
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotated_koebe: theta must be finite");
    }
    return {FunctionKind::rotated_koebe,
            {theta, 0.0},
            "rotated_koebe:theta=" + format_double(theta),
            {true, true, true},
            "rotation of the Koebe function; omits a rotated slit"};
}

CatalogFunction CatalogFunction::bounded(Complex b)
{
    if (!is_finite(b) || std::abs(b) > 1.0) {
        throw std::invalid_argument("bounded: parameter b must satisfy |b| <= 1");
    }
    return {FunctionKind::bounded,
            b,
            "bounded:b=" + format_complex(b),
            {true, true, false},
            "Moebius map with pole 1/b outside the open disk; image is a disk or half-plane"};
}

CatalogFunction CatalogFunction::automorphism(Complex zeta)
{
    if (!is_finite(zeta) || std::abs(zeta) >= 1.0) {
        throw std::invalid_argument("automorphism: parameter zeta must satisfy |zeta| < 1");
    }
    return {FunctionKind::automorphism,
            zeta,
            "automorphism:zeta=" + format_complex(zeta),
            {true, true, false},
            "disk automorphism; image is the unit disk"};
}

CatalogFunction CatalogFunction::cayley()
{
    return {FunctionKind::cayley, {}, "cayley", {true, true, false}, "Moebius map onto the half-plane Re w > 1/2"};
}

CatalogFunction CatalogFunction::exp_scale(Complex k)
{
    if (!is_finite(k)) {
        throw std::invalid_argument("exp_scale: parameter k must be finite");
    }
    const bool lu = std::abs(k) > 0.0;
    const bool univalent = lu && std::abs(k) <= std::numbers::pi;
    return {FunctionKind::exp_scale,
            k,
            "exp_scale:k=" + format_complex(k),
            {lu, univalent, false},
            univalent ? "exp is injective on the disk of radius |k| <= pi"
                      : (lu ? "k D contains two points differing by 2 pi i" : "constant function")};
}

CatalogFunction CatalogFunction::quad_poly(Complex a)
{
    if (!is_finite(a)) {
        throw std::invalid_argument("quad_poly: parameter a must be finite");
    }
    const bool ok = std::abs(a) <= 0.5;
    return {FunctionKind::quad_poly,
            a,
            "quad_poly:a=" + format_complex(a),
            {ok, ok, false},
            ok ? "f' = 1 + 2 a w has no zero in the disk; f(w1) = f(w2) forces 1 + a (w1 + w2) = 0"
               : "f' vanishes at -1/(2a) inside the disk"};
}

bool CatalogFunction::normalized() const
{
    return std::abs(value(0.0)) <= 1e-15 && std::abs(derivative(0.0) - 1.0) <= 1e-15;
}

Complex CatalogFunction::value(Complex w) const
{
    switch (kind_) {
    case FunctionKind::identity:
        return w;
    case FunctionKind::koebe:
        return w / ((1.0 - w) * (1.0 - w));
    case FunctionKind::rotated_koebe: {
        const Complex e = std::polar(1.0, param_.real());
        return w / ((1.0 - e * w) * (1.0 - e * w));
    }
    case FunctionKind::bounded:
        return w / (1.0 - param_ * w);
    case FunctionKind::automorphism:
        return (w + param_) / (1.0 + std::conj(param_) * w);
    case FunctionKind::cayley:
        return 1.0 / (1.0 - w);
    case FunctionKind::exp_scale:
        return std::exp(param_ * w);
    case FunctionKind::quad_poly:
        return w + param_ * w * w;
    }
    return {};
}

Complex CatalogFunction::derivative(Complex w) const
{
    switch (kind_) {
    case FunctionKind::identity:
        return 1.0;
    case FunctionKind::koebe:
        return (1.0 + w) / ((1.0 - w) * (1.0 - w) * (1.0 - w));
    case FunctionKind::rotated_koebe: {
        const Complex e = std::polar(1.0, param_.real());
        const Complex u = 1.0 - e * w;
        return (1.0 + e * w) / (u * u * u);
    }
    case FunctionKind::bounded: {
        const Complex v = 1.0 - param_ * w;
        return 1.0 / (v * v);
    }
    case FunctionKind::automorphism: {
        const Complex v = 1.0 + std::conj(param_) * w;
        return (1.0 - std::norm(param_)) / (v * v);
    }
    case FunctionKind::cayley: {
        const Complex u = 1.0 - w;
        return 1.0 / (u * u);
    }
    case FunctionKind::exp_scale:
        return param_ * std::exp(param_ * w);
    case FunctionKind::quad_poly:
        return 1.0 + 2.0 * param_ * w;
    }
    return {};
}

void require_in_disk(Complex z, const char *what)
{
    if (!is_finite(z) || std::abs(z) >= 1.0) {
        throw std::invalid_argument(std::string(what) + " must lie in the open unit disk, got " + format_complex(z));
    }
}

PowerSeries series_at(const CatalogFunction &fn, Complex center, int order)
{
    return fn.series<Complex>(center, order);
}

std::vector<CatalogFunction> list_catalog()
{
    return {
        CatalogFunction::identity(),
        CatalogFunction::koebe(),
        CatalogFunction::rotated_koebe(1.0),
        CatalogFunction::bounded({0.5, 0.0}),
        CatalogFunction::automorphism({0.3, 0.2}),
        CatalogFunction::cayley(),
        CatalogFunction::exp_scale({1.0, 0.0}),
        CatalogFunction::exp_scale({4.0, 0.0}),
        CatalogFunction::quad_poly({0.4, 0.0}),
        CatalogFunction::quad_poly({0.6, 0.0}),
    };
}

CatalogFunction parse_function(std::string_view spec)
{
    const auto colon = spec.find(':');
    const std::string name(spec.substr(0, colon));
    std::string key;
    std::string_view value;
    if (colon != std::string_view::npos) {
        const auto rest = spec.substr(colon + 1);
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos || rest.find(',') != std::string_view::npos) {
            throw std::invalid_argument("function parameter must be a single key=value: '" + std::string(spec) + "'");
        }
        key = std::string(rest.substr(0, eq));
        value = rest.substr(eq + 1);
    }

    auto expect_param = [&](const char *want) {
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("function '" + name + "' needs parameter " + want);
        }
        if (key != want) {
            throw std::invalid_argument("unknown parameter '" + key + "' for function '" + name + "'");
        }
        return parse_complex(value);
    };
    auto expect_none = [&] {
        if (colon != std::string_view::npos) {
            throw std::invalid_argument("function '" + name + "' takes no parameters");
        }
    };

    if (name == "identity") {
        expect_none();
        return CatalogFunction::identity();
    }
    if (name == "koebe") {
        expect_none();
        return CatalogFunction::koebe();
    }
    if (name == "cayley") {
        expect_none();
        return CatalogFunction::cayley();
    }
    if (name == "rotated_koebe") {
        const Complex theta = expect_param("theta");
        if (theta.imag() != 0.0) {
            throw std::invalid_argument("rotated_koebe: theta must be real");
        }
        return CatalogFunction::rotated_koebe(theta.real());
    }
    if (name == "bounded") {
        return CatalogFunction::bounded(expect_param("b"));
    }
    if (name == "automorphism") {
        return CatalogFunction::automorphism(expect_param("zeta"));
    }
    if (name == "exp_scale") {
        return CatalogFunction::exp_scale(expect_param("k"));
    }
    if (name == "quad_poly") {
        return CatalogFunction::quad_poly(expect_param("a"));
    }
    throw std::invalid_argument("unknown function '" + name + "'");
}

Complex parse_complex(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty complex number");
    }
    if (text.back() != 'i') {
        return {parse_double(text, "complex number"), 0.0};
    }
    const auto body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [&](std::string_view part) {
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        return parse_double(part, "imaginary part");
    };
    if (split == std::string_view::npos) {
        return {0.0, imag_of(body)};
    }
    return {parse_double(body.substr(0, split), "real part"), imag_of(body.substr(split))};
}

std::string format_complex(Complex z)
{
    if (z.imag() == 0.0) {
        return format_double(z.real());
    }
    std::string out = format_double(z.real());
    if (!std::signbit(z.imag())) {
        out += '+';
    }
    return out + format_double(z.imag()) + 'i';
}

} // namespace univalence
