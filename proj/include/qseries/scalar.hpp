// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cmath>
#include <cstdio>
#include <string>

#if defined(__SIZEOF_FLOAT128__)
#include <quadmath.h>
#endif

namespace qseries {

#if defined(__SIZEOF_FLOAT128__)
using f128 = __float128;
#endif

/// Traits for the real scalar underlying all complex arithmetic.
/// Two instantiations are supported: double (working precision ~16
/// significant digits) and f128 (~34 digits, the "extended" mode).
template <class R>
struct real_traits;

template <>
struct real_traits<double> {
    static constexpr const char* name = "double";
    static constexpr int max_digits10 = 17;
    static double eps() { return 2.220446049250313e-16; }
    static double sqrt(double x) { return std::sqrt(x); }
    static double pow(double x, double y) { return std::pow(x, y); }
    static double abs(double x) { return std::fabs(x); }
    static bool isfinite(double x) { return std::isfinite(x); }
    static double from_double(double x) { return x; }
    static std::string to_string(double x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

#if defined(__SIZEOF_FLOAT128__)
template <>
struct real_traits<f128> {
    static constexpr const char* name = "extended";
    static constexpr int max_digits10 = 36;
    static f128 eps() { return FLT128_EPSILON; }
    static f128 sqrt(f128 x) { return sqrtq(x); }
    static f128 pow(f128 x, f128 y) { return powq(x, y); }
    static f128 abs(f128 x) { return fabsq(x); }
    static bool isfinite(f128 x) { return !isnanq(x) && !isinfq(x); }
    static f128 from_double(double x) { return static_cast<f128>(x); }
    static std::string to_string(f128 x) {
        char buf[128];
        quadmath_snprintf(buf, sizeof buf, "%.36Qg", x);
        return buf;
    }
};
#endif

template <class R>
using cplx = std::complex<R>;

template <class R>
cplx<R> cplx_from(double re, double im = 0.0) {
    return cplx<R>(real_traits<R>::from_double(re), real_traits<R>::from_double(im));
}

template <class R>
R abs2(const cplx<R>& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

/// |z| with scaling so intermediates of magnitude ~1e200 do not overflow.
template <class R>
R abs_c(const cplx<R>& z) {
    using T = real_traits<R>;
    R x = T::abs(z.real()), y = T::abs(z.imag());
    R m = x > y ? x : y;
    if (m == R(0)) return R(0);
    R u = x / m, v = y / m;
    return m * T::sqrt(u * u + v * v);
}

template <class R>
bool is_finite(const cplx<R>& z) {
    return real_traits<R>::isfinite(z.real()) && real_traits<R>::isfinite(z.imag());
}

/// Principal branch complex square root built on the real sqrt only.
template <class R>
cplx<R> sqrt_c(const cplx<R>& z) {
    using T = real_traits<R>;
    R x = z.real(), y = z.imag();
    R r = abs_c(z);
    if (r == R(0)) return cplx<R>(0, 0);
    if (x >= R(0)) {
        R u = T::sqrt((r + x) / R(2));
        return cplx<R>(u, y / (R(2) * u));
    }
    R v = T::sqrt((r - x) / R(2));
    if (y < R(0)) v = -v;
    return cplx<R>(T::abs(y) / (R(2) * T::sqrt((r - x) / R(2))), v);
}

/// z^m by binary exponentiation; m < 0 goes through the reciprocal.
template <class R>
cplx<R> pow_int(cplx<R> z, long long m) {
    if (m < 0) return cplx<R>(R(1), R(0)) / pow_int(z, -m);
    cplx<R> acc(R(1), R(0));
    while (m > 0) {
        if (m & 1) acc *= z;
        z *= z;
        m >>= 1;
    }
    return acc;
}

template <class R>
R pow_int_r(R x, long long m) {
    if (m < 0) return R(1) / pow_int_r(x, -m);
    R acc(1);
    while (m > 0) {
        if (m & 1) acc *= x;
        x *= x;
        m >>= 1;
    }
    return acc;
}

/// n*(n-1)/2 without overflow for n up to ~3e9.
inline long long binom2(long long n) { return n * (n - 1) / 2; }

/// Wider scalar for internal kernels whose outer sums cancel heavily; the
/// widening conversion is exact. In extended mode the type is unchanged.
template <class R>
struct promote {
    using type = R;
};
#if defined(__SIZEOF_FLOAT128__)
template <>
struct promote<double> {
    using type = f128;
};
#endif
template <class R>
using promoted_t = typename promote<R>::type;

template <class R>
cplx<promoted_t<R>> widen(const cplx<R>& z) {
    return cplx<promoted_t<R>>(static_cast<promoted_t<R>>(z.real()),
                               static_cast<promoted_t<R>>(z.imag()));
}

template <class R>
cplx<R> narrow(const cplx<promoted_t<R>>& z) {
    return cplx<R>(static_cast<R>(z.real()), static_cast<R>(z.imag()));
}

template <class R>
std::string cplx_to_string(const cplx<R>& z) {
    return real_traits<R>::to_string(z.real()) + " " + real_traits<R>::to_string(z.imag());
}

}  // namespace qseries
