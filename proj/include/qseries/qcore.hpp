// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

/// The base q of every series, constrained to 0 < |q| < 1.
template <class R>
struct QBase {
    cplx<R> q;

    explicit QBase(const cplx<R>& base) : q(base) {
        R m = abs_c(base);
        if (!(m > R(0)) || !(m < R(1)))
            throw DomainError("QBase requires 0 < |q| < 1");
    }
};

template <class R>
QBase<R> qbase_from(double re, double im = 0.0) {
    return QBase<R>(cplx_from<R>(re, im));
}

/// A factor (1 - w) is treated as a pole of the enclosing reciprocal when it
/// is this close to zero. Domain semantics, not a precision knob: identical
/// in double and extended mode.
template <class R>
void pole_guard(const cplx<R>& factor, const cplx<R>& w, const char* where) {
    R tol = real_traits<R>::from_double(1e-12) * (R(1) + abs_c(w));
    if (abs_c(factor) < tol) throw PoleError(where);
}

/// A series parameter. The optional tag records that the value is exactly
/// coeff * q^exponent, which drives exact termination (unit coefficient,
/// negative exponent) instead of relying on floating cancellation.
template <class R>
struct Param {
    cplx<R> value{};
    bool tagged = false;
    bool unit_coeff = false;
    cplx<R> tag_coeff{};
    long long tag_exp = 0;

    Param() = default;
    Param(const cplx<R>& v) : value(v) {}

    static Param qpow(const cplx<R>& coeff, long long e, const QBase<R>& base) {
        Param p;
        p.value = coeff * pow_int(base.q, e);
        p.tagged = true;
        p.unit_coeff = (coeff == cplx<R>(R(1), R(0)));
        p.tag_coeff = coeff;
        p.tag_exp = e;
        return p;
    }

    static Param unit_qpow(long long e, const QBase<R>& base) {
        return qpow(cplx<R>(R(1), R(0)), e, base);
    }

    /// True when the Pochhammer factor (1 - value*q^n) vanishes identically.
    bool exact_zero_at(long long n) const {
        return tagged && unit_coeff && tag_exp + n == 0;
    }
};

/// (a;q)_n for any integer n. Negative n uses the reciprocal convention
/// (a;q)_{-m} = 1 / prod_{k=1..m} (1 - a q^{-k}).
template <class R>
cplx<R> qpoch(const cplx<R>& a, const QBase<R>& q, long long n) {
    cplx<R> out(R(1), R(0));
    if (n >= 0) {
        cplx<R> aqk = a;
        for (long long k = 0; k < n; ++k) {
            out *= (cplx<R>(R(1), R(0)) - aqk);
            aqk *= q.q;
        }
        return out;
    }
    cplx<R> qinv = cplx<R>(R(1), R(0)) / q.q;
    cplx<R> aqk = a * qinv;
    for (long long k = 1; k <= -n; ++k) {
        cplx<R> f = cplx<R>(R(1), R(0)) - aqk;
        pole_guard(f, aqk, "qpoch: reciprocal factor vanishes");
        out *= f;
        aqk *= qinv;
    }
    return cplx<R>(R(1), R(0)) / out;
}

/// (a;q)_infty, truncated once |a q^k| < tol for k_stop consecutive k.
/// tol <= 0 selects the precision-appropriate default (a little below the
/// scalar epsilon, so product sides never cap the verification accuracy).
template <class R>
cplx<R> qpoch_inf(const cplx<R>& a, const QBase<R>& q, double tol = 0.0) {
    constexpr int k_stop = 3;
    R cut = tol > 0 ? real_traits<R>::from_double(tol)
                    : real_traits<R>::eps() * real_traits<R>::from_double(0.05);
    cplx<R> out(R(1), R(0));
    cplx<R> aqk = a;
    int quiet = 0;
    for (long long k = 0; k < 100000; ++k) {
        out *= (cplx<R>(R(1), R(0)) - aqk);
        if (abs_c(aqk) < cut) {
            if (++quiet >= k_stop) break;
        } else {
            quiet = 0;
        }
        aqk *= q.q;
    }
    if (!is_finite(out)) throw OverflowError("qpoch_inf overflow");
    return out;
}

/// Product of qpoch over a parameter list; empty list gives 1.
template <class R>
cplx<R> qpoch_multi(std::span<const cplx<R>> as, const QBase<R>& q, long long n) {
    cplx<R> out(R(1), R(0));
    for (const auto& a : as) out *= qpoch(a, q, n);
    return out;
}

template <class R>
cplx<R> qpoch_multi(std::initializer_list<cplx<R>> as, const QBase<R>& q, long long n) {
    return qpoch_multi(std::span<const cplx<R>>(as.begin(), as.size()), q, n);
}

template <class R>
cplx<R> qpoch_inf_multi(std::initializer_list<cplx<R>> as, const QBase<R>& q) {
    cplx<R> out(R(1), R(0));
    for (const auto& a : as) out *= qpoch_inf(a, q);
    return out;
}

/// tau(n) = (-1)^n q^{n(n-1)/2}. The exponent is exact integer arithmetic
/// followed by one binary-exponentiation power, stable for n up to ~4000.
template <class R>
cplx<R> tau(long long n, const QBase<R>& q) {
    if (n < 0) throw DomainError("tau: n must be nonnegative");
    cplx<R> v = pow_int(q.q, binom2(n));
    return (n & 1) ? -v : v;
}

/// q-binomial coefficient [n k]_q = (q;q)_n / ((q;q)_{n-k} (q;q)_k).
template <class R>
cplx<R> qbinom(long long n, long long k, const QBase<R>& q) {
    if (k < 0 || k > n) throw DomainError("qbinom: k outside [0, n]");
    // (q;q)_n / (q;q)_{n-k} = prod_{j=n-k+1..n} (1 - q^j)
    cplx<R> num(R(1), R(0));
    for (long long j = n - k + 1; j <= n; ++j)
        num *= (cplx<R>(R(1), R(0)) - pow_int(q.q, j));
    return num / qpoch(q.q, q, k);
}

/// Pochhammer (p;q)_n of a tagged parameter, with tag-exact zero factors.
template <class R>
cplx<R> qpoch_param(const Param<R>& p, const QBase<R>& q, long long n) {
    if (!p.tagged) return qpoch(p.value, q, n);
    if (n >= 0) {
        cplx<R> out(R(1), R(0));
        for (long long k = 0; k < n; ++k) {
            if (p.exact_zero_at(k)) return cplx<R>(R(0), R(0));
            out *= (cplx<R>(R(1), R(0)) - p.tag_coeff * pow_int(q.q, p.tag_exp + k));
        }
        return out;
    }
    return qpoch(p.value, q, n);
}

}  // namespace qseries
