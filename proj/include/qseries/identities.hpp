// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// Named parameter values for one identity evaluation. Scalars and integer
/// indices are kept in draw order so reports stay deterministic.
template <class R>
struct Assignment {
    std::vector<std::pair<std::string, cplx<R>>> scalars;
    std::vector<std::pair<std::string, long long>> ints;

    const cplx<R>& at(std::string_view name) const {
        for (const auto& [k, v] : scalars)
            if (k == name) return v;
        throw DomainError("assignment: missing scalar " + std::string(name));
    }
    long long int_at(std::string_view name) const {
        for (const auto& [k, v] : ints)
            if (k == name) return v;
        throw DomainError("assignment: missing integer " + std::string(name));
    }
    void set(std::string name, const cplx<R>& v) { scalars.emplace_back(std::move(name), v); }
    void set_int(std::string name, long long v) { ints.emplace_back(std::move(name), v); }
};

/// How one named parameter is drawn.
enum class DrawKind { complex_disk, unit_circle, integer };

struct ParamSpec {
    std::string name;
    DrawKind kind = DrawKind::complex_disk;
    double lo_mod = 0.15, hi_mod = 0.85;  // modulus range, log-uniform
    long long int_lo = 0, int_hi = 0;     // inclusive, for integer kind

    static ParamSpec disk(std::string n, double lo = 0.15, double hi = 0.85) {
        return {std::move(n), DrawKind::complex_disk, lo, hi, 0, 0};
    }
    static ParamSpec circle(std::string n) {
        return {std::move(n), DrawKind::unit_circle, 1.0, 1.0, 0, 0};
    }
    static ParamSpec integer(std::string n, long long lo, long long hi) {
        return {std::move(n), DrawKind::integer, 0, 0, lo, hi};
    }
};

/// A value that must stay away from powers of the base: the sampler rejects
/// when |1 - value * base^m| <= margin for some m in [m_lo, m_hi] (negative
/// m probes value ~ base^{+|m|}).
template <class R>
struct PoleProbe {
    cplx<R> value;
    cplx<R> base;
    int m_lo = 0, m_hi = 200;
};

/// Sampling domain of one identity: parameter draws, derived parameters,
/// decidable inequality constraints, and pole-exclusion probes.
template <class R>
struct ParamDomain {
    std::vector<ParamSpec> params;
    std::vector<std::pair<std::string, std::function<cplx<R>(const Assignment<R>&)>>> derived;
    std::vector<std::pair<std::string, std::function<bool(const Assignment<R>&)>>> constraints;
    std::function<std::vector<PoleProbe<R>>(const Assignment<R>&)> probes;
};

/// A two-sided computable identity with its sampling domain.
template <class R>
struct Identity {
    std::string id;
    std::string title;
    ParamDomain<R> domain;
    std::function<SumResult<R>(const Assignment<R>&, const SumCtrl&)> lhs;
    std::function<SumResult<R>(const Assignment<R>&, const SumCtrl&)> rhs;
};

// ---------------------------------------------------------------------------
// Expansion-theorem building blocks
// ---------------------------------------------------------------------------

/// Omega(n; x, c, d) = (1-xd)(1-c q^{2n+2}) (xd)^n (q/d, cq/x;q)_n
///                     / (cdq, xq;q)_{n+1}.
template <class R>
cplx<R> omega_val(long long n, const cplx<R>& x, const cplx<R>& c, const cplx<R>& d,
                  const QBase<R>& q) {
    const cplx<R> one(R(1), R(0));
    if (d == cplx<R>(R(0), R(0))) throw PoleError("omega_val: d = 0");
    if (x == cplx<R>(R(0), R(0))) throw PoleError("omega_val: x = 0");
    cplx<R> den = qpoch(c * d * q.q, q, n + 1) * qpoch(x * q.q, q, n + 1);
    pole_guard(den, c * d * q.q, "omega_val: denominator");
    return (one - x * d) * (one - c * pow_int(q.q, 2 * n + 2)) * pow_int(x * d, n) *
           qpoch(q.q / d, q, n) * qpoch(c * q.q / x, q, n) / den;
}

/// The well-poised prepending operator. Applied to a phi_tilde spec it
/// produces the standard phi spec with three upper parameters
/// (cdq, q^{-n}, cq^{n+2}) and two lower (cdq^{n+2}, q^{-n} d) prepended,
/// the q-power parameters carried as exact tags. Applied to a previous
/// output (variant phi) it additionally appends a lower parameter q: each
/// application contributes its own (q;q)_k, which the m-fold composition in
/// the multi-sum expansion requires.
template <class R>
struct DeltaOp {
    long long n;
    cplx<R> c, d;
};

template <class R>
SeriesSpec<R> apply_delta(const DeltaOp<R>& op, const SeriesSpec<R>& spec) {
    if (spec.variant == Variant::psi_bilateral)
        throw DomainError("apply_delta: bilateral input");
    const QBase<R>& q = spec.base;
    SeriesSpec<R> out{Variant::phi, {}, {}, q, spec.argument};
    out.numerator.reserve(spec.numerator.size() + 3);
    out.numerator.emplace_back(op.c * op.d * q.q);
    out.numerator.push_back(Param<R>::unit_qpow(-op.n, q));
    out.numerator.emplace_back(op.c * pow_int(q.q, op.n + 2));
    for (const auto& p : spec.numerator) out.numerator.push_back(p);
    out.denominator.reserve(spec.denominator.size() + 3);
    out.denominator.emplace_back(op.c * op.d * pow_int(q.q, op.n + 2));
    out.denominator.push_back(Param<R>::qpow(op.d, -op.n, q));
    for (const auto& p : spec.denominator) out.denominator.push_back(p);
    if (spec.variant == Variant::phi) out.denominator.emplace_back(q.q);
    return out;
}

/// beta_n of a WP Bailey pair from its alpha:
///   beta_n(t,b) = sum_{k=0..n} (bt;q)_{n+k} (b;q)_{n-k}
///                 / ((q;q)_{n-k} (tq;q)_{n+k}) alpha_k.
template <class R>
cplx<R> wp_bailey_beta(const std::function<cplx<R>(long long)>& alpha, const cplx<R>& t,
                       const cplx<R>& b, long long n, const QBase<R>& q) {
    CompensatedSum<R> acc;
    for (long long k = 0; k <= n; ++k) {
        cplx<R> den = qpoch(q.q, q, n - k) * qpoch(t * q.q, q, n + k);
        pole_guard(den, t * q.q, "wp_bailey_beta: denominator");
        acc.add(qpoch(b * t, q, n + k) * qpoch(b, q, n - k) / den * alpha(k));
    }
    return acc.value();
}

/// A WP Bailey pair at fixed slots (t, b): beta is the well-poised transform
/// of alpha.
template <class R>
struct WPBaileyPair {
    std::function<cplx<R>(long long)> alpha;
    std::function<cplx<R>(long long)> beta;
};

template <class R>
WPBaileyPair<R> make_wp_bailey_pair(std::function<cplx<R>(long long)> alpha,
                                    const cplx<R>& t, const cplx<R>& b, const QBase<R>& q) {
    WPBaileyPair<R> pair;
    pair.alpha = alpha;
    pair.beta = [alpha, t, b, q](long long n) { return wp_bailey_beta(alpha, t, b, n, q); };
    return pair;
}

namespace detail {

template <class R>
SumResult<R> exact_result(const cplx<R>& v) {
    SumResult<R> r;
    r.value = v;
    r.terms_used = 1;
    r.terminated_exactly = true;
    return r;
}

/// Ratio of infinite-product lists, reported as an exact-side result.
template <class R>
SumResult<R> inf_ratio(std::initializer_list<cplx<R>> num, std::initializer_list<cplx<R>> den,
                       const QBase<R>& q) {
    cplx<R> d = qpoch_inf_multi(den, q);
    pole_guard(d, cplx<R>(R(0), R(0)), "inf_ratio: denominator product vanishes");
    return exact_result(qpoch_inf_multi(num, q) / d);
}

/// Skip threshold below which a weight times any representable inner value
/// is negligible next to the stop rule.
template <class R>
bool weight_negligible(const cplx<R>& w) {
    return abs_c(w) < real_traits<R>::from_double(1e-220);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Main expansion theorems as reusable two-sided evaluators
// ---------------------------------------------------------------------------

/// LHS of the main expansion: 1/(1-xd) * phitilde[a.., cq/x; b.., xdq; q, xt].
template <class R>
SumResult<R> eval_thm_main_lhs(const std::vector<cplx<R>>& as, const std::vector<cplx<R>>& bs,
                               const cplx<R>& c, const cplx<R>& d, const cplx<R>& x,
                               const cplx<R>& t, const QBase<R>& q, const SumCtrl& ctrl) {
    const cplx<R> one(R(1), R(0));
    SeriesSpec<R> spec{Variant::phi_tilde, {}, {}, q, x * t};
    for (const auto& a : as) spec.numerator.emplace_back(a);
    spec.numerator.emplace_back(c * q.q / x);
    for (const auto& b : bs) spec.denominator.emplace_back(b);
    spec.denominator.emplace_back(x * d * q.q);
    SumResult<R> r = eval_series(spec, ctrl);
    cplx<R> f = one - x * d;
    pole_guard(f, x * d, "eval_thm_main_lhs: 1 - xd vanishes");
    r.value /= f;
    return r;
}

/// RHS of the main expansion: the (xd)^n-weighted sum of terminating
/// (r+3)phi(s+2) series in t/a; the q^{-n} tags terminate each inner sum.
template <class R>
SumResult<R> eval_thm_main_rhs(const std::vector<cplx<R>>& as, const std::vector<cplx<R>>& bs,
                               const cplx<R>& a, const cplx<R>& c, const cplx<R>& d,
                               const cplx<R>& x, const cplx<R>& t, const QBase<R>& q,
                               const SumCtrl& ctrl) {
    const cplx<R> one(R(1), R(0));
    auto term_at = [&](long long n) -> cplx<R> {
        cplx<R> den = qpoch(c * d * q.q, q, n + 1) * qpoch(a * x * q.q, q, n + 1);
        pole_guard(den, c * d * q.q, "eval_thm_main_rhs: weight denominator");
        cplx<R> w = (one - a * c * pow_int(q.q, 2 * n + 2)) * pow_int(x * d, n) *
                    qpoch(a * q.q / d, q, n) * qpoch(c * q.q / x, q, n) / den;
        if (detail::weight_negligible(w)) return cplx<R>(R(0), R(0));
        SeriesSpec<R> inner{Variant::phi, {}, {}, q, t / a};
        inner.numerator.emplace_back(c * d * q.q);
        inner.numerator.push_back(Param<R>::unit_qpow(-n, q));
        inner.numerator.emplace_back(a * c * pow_int(q.q, n + 2));
        for (const auto& ai : as) inner.numerator.emplace_back(ai);
        inner.denominator.emplace_back(c * d * pow_int(q.q, n + 2));
        inner.denominator.push_back(Param<R>::qpow(d / a, -n, q));
        for (const auto& bi : bs) inner.denominator.emplace_back(bi);
        SumCtrl ic = ctrl;
        ic.max_terms = n + 2;
        return w * eval_series(inner, ic).value;
    };
    return sum_adaptive<R>(term_at, ctrl);
}

/// LHS of the d->0 companion theorem: phi[a.., c/x; b..; q, xt].
template <class R>
SumResult<R> eval_thm_dlidi_lhs(const std::vector<cplx<R>>& as, const std::vector<cplx<R>>& bs,
                                const cplx<R>& c, const cplx<R>& x, const cplx<R>& t,
                                const QBase<R>& q, const SumCtrl& ctrl) {
    SeriesSpec<R> spec{Variant::phi, {}, {}, q, x * t};
    for (const auto& a : as) spec.numerator.emplace_back(a);
    spec.numerator.emplace_back(c / x);
    for (const auto& b : bs) spec.denominator.emplace_back(b);
    return eval_series(spec, ctrl);
}

/// RHS of the companion theorem: sum of terminating inner series at tq under
/// the weight (c/x;q)_n / (x;q)_{n+1} (1 - c q^{2n}) tau(n) x^n.
template <class R>
SumResult<R> eval_thm_dlidi_rhs(const std::vector<cplx<R>>& as, const std::vector<cplx<R>>& bs,
                                const cplx<R>& c, const cplx<R>& x, const cplx<R>& t,
                                const QBase<R>& q, const SumCtrl& ctrl) {
    const cplx<R> one(R(1), R(0));
    auto term_at = [&](long long n) -> cplx<R> {
        cplx<R> den = qpoch(x, q, n + 1);
        pole_guard(den, x, "eval_thm_dlidi_rhs: weight denominator");
        cplx<R> w = qpoch(c / x, q, n) / den * (one - c * pow_int(q.q, 2 * n)) * tau(n, q) *
                    pow_int(x, n);
        if (detail::weight_negligible(w)) return cplx<R>(R(0), R(0));
        SeriesSpec<R> inner{Variant::phi, {}, {}, q, t * q.q};
        inner.numerator.push_back(Param<R>::unit_qpow(-n, q));
        for (const auto& ai : as) inner.numerator.emplace_back(ai);
        inner.numerator.emplace_back(c * pow_int(q.q, n));
        for (const auto& bi : bs) inner.denominator.emplace_back(bi);
        inner.denominator.emplace_back(q.q);
        SumCtrl ic = ctrl;
        ic.max_terms = n + 2;
        return w * eval_series(inner, ic).value;
    };
    return sum_adaptive<R>(term_at, ctrl);
}

/// Both sides of the m-fold multi-sum expansion (m = 1, 2, 3). The left side
/// is the phi_tilde with m well-poised factor blocks; the right side nests m
/// Omega-weighted sums over the Delta-composed terminating inner series,
/// truncated at axis_cap per axis.
template <class R>
std::pair<SumResult<R>, SumResult<R>> eval_multi(int m, const std::vector<cplx<R>>& as,
                                                 const std::vector<cplx<R>>& bs,
                                                 const std::vector<cplx<R>>& cs,
                                                 const std::vector<cplx<R>>& ds,
                                                 const std::vector<cplx<R>>& xs,
                                                 const cplx<R>& t, const QBase<R>& q,
                                                 const SumCtrl& ctrl, long long axis_cap = 40) {
    if (m < 1 || m > 3 || cs.size() != static_cast<size_t>(m) ||
        ds.size() != static_cast<size_t>(m) || xs.size() != static_cast<size_t>(m))
        throw DomainError("eval_multi: m must be 1..3 with matching c, d, x lists");
    const cplx<R> one(R(1), R(0));

    SeriesSpec<R> lhs_spec{Variant::phi_tilde, {}, {}, q, t};
    {
        cplx<R> arg = t;
        for (const auto& a : as) lhs_spec.numerator.emplace_back(a);
        for (const auto& b : bs) lhs_spec.denominator.emplace_back(b);
        for (int i = 0; i < m; ++i) {
            lhs_spec.numerator.emplace_back(cs[i] * q.q / xs[i]);
            lhs_spec.denominator.emplace_back(xs[i] * ds[i] * q.q);
            arg *= xs[i];
        }
        lhs_spec.argument = arg;
    }
    SumResult<R> lhs = eval_series(lhs_spec, ctrl);

    SeriesSpec<R> base{Variant::phi_tilde, {}, {}, q, t};
    for (const auto& a : as) base.numerator.emplace_back(a);
    for (const auto& b : bs) base.denominator.emplace_back(b);

    auto inner_value = [&](const std::vector<long long>& ns) -> cplx<R> {
        SeriesSpec<R> spec = base;
        for (int i = 0; i < m; ++i)
            spec = apply_delta(DeltaOp<R>{ns[i], cs[i], ds[i]}, spec);
        SumCtrl ic = ctrl;
        long long cap = ns[0];
        for (long long nv : ns) cap = std::min(cap, nv);
        ic.max_terms = cap + 2;
        return eval_series(spec, ic).value;
    };

    SumResult<R> rhs;
    std::vector<long long> ns(static_cast<size_t>(m), 0);
    // recursive Omega-weighted nest with per-axis stop rule
    long long used = 0;
    auto level = [&](auto&& self, int depth, const cplx<R>& w_acc) -> cplx<R> {
        CompensatedSum<R> acc;
        int quiet = 0;
        using T = real_traits<R>;
        // inner levels run a decade tighter than the requested accuracy
        const R cut = T::from_double(depth == 0 ? ctrl.tol : ctrl.tol / 10);
        // the terminating inner sum unlocks terms while n_d <= min of the
        // outer indices, so contributions can rebound there; the stop rule
        // only counts once the k-budget is saturated
        long long unlock = axis_cap;
        if (depth > 0) {
            unlock = ns[0];
            for (int i = 1; i < depth; ++i) unlock = std::min(unlock, ns[i]);
        }
        for (long long n = 0; n < axis_cap; ++n) {
            ns[static_cast<size_t>(depth)] = n;
            cplx<R> w = w_acc * omega_val(n, xs[depth], cs[depth], ds[depth], q);
            cplx<R> contrib;
            if (detail::weight_negligible(w)) {
                contrib = cplx<R>(R(0), R(0));
            } else if (depth + 1 == m) {
                contrib = w * inner_value(ns);
                ++used;
            } else {
                contrib = self(self, depth + 1, w);
            }
            acc.add(contrib);
            R mag = abs_c(contrib);
            R scale = abs_c(acc.value());
            // inside the unlock zone only a much deeper quiet level may
            // stop the loop: dead rows escape quickly, dip-then-rebound
            // rows keep summing
            R level_cut = (depth > 0 && n <= unlock) ? cut * T::from_double(1e-8) : cut;
            if (mag < level_cut * (scale > R(1) ? scale : R(1))) {
                if (++quiet >= ctrl.k_stop) return acc.value();
            } else {
                quiet = 0;
            }
        }
        return acc.value();  // axis cap reached; tail covered by domain constraints
    };
    rhs.value = level(level, 0, one);
    rhs.terms_used = used;
    return {lhs, rhs};
}

}  // namespace qseries
