#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <type_traits>

#include <boost/multiprecision/cpp_complex.hpp>

#include "univalence/error.hpp"

namespace univalence {

using Complex = std::complex<double>;

namespace mp = boost::multiprecision;

// Extended-precision tiers used where coefficient sums cancel heavily.
using Complex50 = mp::cpp_complex<50>;
using Complex100 = mp::cpp_complex<100>;
using Complex200 = mp::cpp_complex<200>;
using Complex400 = mp::cpp_complex<400>;

template <class C>
struct scalar_traits {
    using real_type = typename mp::component_type<C>::type;
    static constexpr int digits10 = std::numeric_limits<real_type>::digits10;
};

template <>
struct scalar_traits<Complex> {
    using real_type = double;
    static constexpr int digits10 = std::numeric_limits<double>::digits10;
};

template <class C>
using real_t = typename scalar_traits<C>::real_type;

template <class C>
C make_scalar(const Complex &z)
{
    return C(z.real(), z.imag());
}

template <class C>
Complex to_complex(const C &z)
{
    using std::imag;
    using std::real;
    return {static_cast<double>(real(z)), static_cast<double>(imag(z))};
}

template <class C>
double magnitude(const C &z)
{
    using std::abs;
    return static_cast<double>(abs(z));
}

/// z^n for n >= 0 by repeated squaring; 0^0 = 1.
template <class C>
C int_pow(C z, int n)
{
    C result(1);
    while (n > 0) {
        if (n & 1) {
            result *= z;
        }
        z *= z;
        n >>= 1;
    }
    return result;
}

inline bool is_finite(const Complex &z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline constexpr int max_working_digits = 400;

/// Decimal digits needed when summands reach 10^loss times the result scale;
/// 0 means double precision is enough.
inline int digits_for_loss(double loss)
{
    if (!std::isfinite(loss)) {
        throw NumericError("summand magnitudes overflow; reduce the order or move the center inward");
    }
    return loss <= 2.0 ? 0 : static_cast<int>(std::ceil(20.0 + loss));
}

/// Runs body.template operator()<C>() with the narrowest tier holding digits.
template <class Body>
decltype(auto) with_working_digits(int digits, Body &&body)
{
    if (digits == 0) {
        return body.template operator()<Complex>();
    }
    if (digits <= 50) {
        return body.template operator()<Complex50>();
    }
    if (digits <= 100) {
        return body.template operator()<Complex100>();
    }
    if (digits <= 200) {
        return body.template operator()<Complex200>();
    }
    if (digits <= max_working_digits) {
        return body.template operator()<Complex400>();
    }
    throw NumericError("needs " + std::to_string(digits) + " working digits (limit " +
                       std::to_string(max_working_digits) + "); reduce the order or move the center inward");
}

// Neumaier compensated accumulator; the result depends only on the order of add() calls.
class CompensatedSum
{
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace univalence
