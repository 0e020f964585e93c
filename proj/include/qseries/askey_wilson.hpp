// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "qseries/series.hpp"

namespace qseries {

/// Evaluation point for the Askey-Wilson polynomials. The (e_plus, e_minus)
/// pair is the source of truth (theta is never stored); e_plus*e_minus = 1
/// is required, but |e_plus| = 1 is not, so off-the-real-segment points are
/// allowed and the generating-function identity still holds.
template <class R>
struct AWPoint {
    cplx<R> e_plus, e_minus;
    cplx<R> a, b, c, d;
    QBase<R> q;

    void validate() const {
        cplx<R> prod = e_plus * e_minus - cplx<R>(R(1), R(0));
        if (abs_c(prod) > real_traits<R>::from_double(1e-12))
            throw DomainError("AWPoint: e_plus * e_minus must equal 1");
    }
};

/// p_n(y; a,b,c,d | q) through the terminating 4phi3:
///   p_n = a^{-n} (ab,ac,ad;q)_n
///         * 4phi3[q^{-n}, a e^{i t}, a e^{-i t}, abcd q^{n-1}; ab, ac, ad; q, q].
template <class R>
cplx<R> aw_poly(long long n, const AWPoint<R>& pt) {
    pt.validate();
    if (n == 0) return cplx<R>(R(1), R(0));
    const QBase<R>& q = pt.q;
    SeriesSpec<R> spec{Variant::phi, {}, {}, q, q.q};
    spec.numerator = {Param<R>::unit_qpow(-n, q), Param<R>(pt.a * pt.e_plus),
                      Param<R>(pt.a * pt.e_minus),
                      Param<R>(pt.a * pt.b * pt.c * pt.d * pow_int(q.q, n - 1))};
    spec.denominator = {Param<R>(pt.a * pt.b), Param<R>(pt.a * pt.c), Param<R>(pt.a * pt.d)};
    SumCtrl ctrl = default_ctrl<R>();
    ctrl.max_terms = n + 2;
    cplx<R> phi = eval_series(spec, ctrl).value;
    cplx<R> poch = qpoch_multi({pt.a * pt.b, pt.a * pt.c, pt.a * pt.d}, q, n);
    return phi * poch * pow_int(pt.a, -n);
}

/// Both sides of the Askey-Wilson generating function:
///   LHS = (1-x) 3phitilde3[a e^{it}, a e^{-it}, abcd/(xq); ab, ac, ad; q, x]
///   RHS = sum_n p_n (abcd/(xq);q)_n / (xq,ab,ac,ad;q)_n
///               * (1 - abcd q^{2n-1}) tau(n) (a x)^n.
template <class R>
std::pair<SumResult<R>, SumResult<R>> aw_gf_sides(const cplx<R>& x, const AWPoint<R>& pt,
                                                  const SumCtrl& ctrl) {
    pt.validate();
    const QBase<R>& q = pt.q;
    const cplx<R> one(R(1), R(0));
    cplx<R> abcd = pt.a * pt.b * pt.c * pt.d;

    SumResult<R> lhs;
    if (x == cplx<R>(R(0), R(0))) {
        lhs.value = one;
        lhs.terms_used = 1;
        lhs.terminated_exactly = true;
    } else {
        SeriesSpec<R> spec{Variant::phi_tilde, {}, {}, q, x};
        spec.numerator = {Param<R>(pt.a * pt.e_plus), Param<R>(pt.a * pt.e_minus),
                          Param<R>(abcd / (x * q.q))};
        spec.denominator = {Param<R>(pt.a * pt.b), Param<R>(pt.a * pt.c),
                            Param<R>(pt.a * pt.d)};
        lhs = eval_series(spec, ctrl);
        lhs.value *= (one - x);
    }

    cplx<R> gf_param = abcd / (x * q.q);
    auto rhs_term = [&](long long n) {
        cplx<R> w = qpoch(gf_param, q, n) /
                    qpoch_multi({x * q.q, pt.a * pt.b, pt.a * pt.c, pt.a * pt.d}, q, n);
        w *= (one - abcd * pow_int(q.q, 2 * n - 1)) * tau(n, q) * pow_int(pt.a * x, n);
        if (abs_c(w) < real_traits<R>::from_double(1e-200)) return cplx<R>(R(0), R(0));
        return w * aw_poly(n, pt);
    };
    SumResult<R> rhs = sum_adaptive<R>(rhs_term, ctrl);
    return {lhs, rhs};
}

}  // namespace qseries
