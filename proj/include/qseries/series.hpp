// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "qseries/kahan.hpp"
#include "qseries/qcore.hpp"

namespace qseries {

enum class Variant { phi, phi_tilde, psi_bilateral };

/// Summation budget and stop rule. The rule: k_stop consecutive terms with
/// |term| < tol * max(1, |partial|) end the sum.
struct SumCtrl {
    double tol = 1e-14;
    long long max_terms = 4000;
    int k_stop = 5;
};

template <class R>
SumCtrl default_ctrl() {
    SumCtrl c;
    c.tol = real_traits<R>::max_digits10 > 20 ? 1e-28 : 1e-14;
    return c;
}

template <class R>
struct SumResult {
    cplx<R> value{};
    long long terms_used = 0;
    bool terminated_exactly = false;
    R tail_estimate{0};
};

/// One basic or bilateral hypergeometric sum:
///   phi         : sum_{n>=0} (num;q)_n / (den;q)_n tau(n)^{1+s-r} z^n / (q;q)_n
///   phi_tilde   : sum_{n>=0} (num;q)_n / (den;q)_n tau(n)^{s-r} z^n
///   psi_bilateral: sum_{n in Z} (num;q)_n / (den;q)_n z^n, equal-length lists
template <class R>
struct SeriesSpec {
    Variant variant;
    std::vector<Param<R>> numerator;
    std::vector<Param<R>> denominator;
    QBase<R> base;
    cplx<R> argument;
};

/// Smallest N such that a numerator parameter is tagged as exactly q^{-N};
/// absent when no unit-coefficient tag with nonpositive exponent exists.
template <class R>
std::optional<long long> is_terminating(const SeriesSpec<R>& spec) {
    std::optional<long long> best;
    for (const auto& p : spec.numerator) {
        if (p.tagged && p.unit_coeff && p.tag_exp <= 0) {
            long long N = -p.tag_exp;
            if (!best || N < *best) best = N;
        }
    }
    return best;
}

namespace detail {

/// Tail bound from the decay observed across the quiet window of the stop
/// rule: rho is the geometric-mean step ratio between the first and last
/// small terms. A single-step ratio is too noisy for tau-graded series whose
/// term magnitudes oscillate while decaying. A window that fails to decay
/// yields the not-yet-converged sentinel; callers keep summing rather than
/// report an unbounded tail, and genuine divergence surfaces as
/// NoConvergence at max_terms.
template <class R>
R tail_from_window(R first_mag, R last_mag, int steps) {
    using T = real_traits<R>;
    if (last_mag == R(0)) return R(0);
    R rho;
    if (steps >= 1 && first_mag > R(0))
        rho = T::pow(last_mag / first_mag, R(1) / R(steps));
    else
        rho = R(1);
    if (!(rho < R(1))) return T::from_double(1e300);
    return last_mag * rho / (R(1) - rho);
}

template <class R>
bool tail_usable(R tail) {
    return tail < real_traits<R>::from_double(1e290);
}

// tau(n)^e as sign and one integer power, exact for negative e as well.
template <class R>
cplx<R> tau_pow(long long n, long long e, const QBase<R>& q) {
    cplx<R> v = pow_int(q.q, binom2(n) * e);
    return ((n * e) & 1) ? -v : v;
}

template <class R>
long long tau_exponent(const SeriesSpec<R>& spec) {
    long long r = static_cast<long long>(spec.numerator.size());
    long long s = static_cast<long long>(spec.denominator.size());
    switch (spec.variant) {
        case Variant::phi: return 1 + s - r;
        case Variant::phi_tilde: return s - r;
        default: return 0;
    }
}

}  // namespace detail

namespace detail {

/// Denominator Pochhammer with the pole guard applied per factor, for either
/// sign of the index. The product itself may be legitimately tiny or huge.
template <class R>
cplx<R> poch_denominator(const Param<R>& p, const QBase<R>& q, long long n) {
    const cplx<R> one(R(1), R(0));
    cplx<R> out = one;
    if (n >= 0) {
        cplx<R> w = p.value;
        for (long long k = 0; k < n; ++k) {
            cplx<R> f = one - w;
            pole_guard(f, w, "term: denominator Pochhammer pole");
            out *= f;
            w *= q.q;
        }
        return out;
    }
    return qpoch(p.value, q, n);  // negative index guards its own factors
}

}  // namespace detail

/// The exact n-th summand of the spec's variant, computed from scratch.
template <class R>
cplx<R> term(const SeriesSpec<R>& spec, long long n) {
    const QBase<R>& q = spec.base;
    if (spec.variant != Variant::psi_bilateral && n < 0)
        throw DomainError("term: n < 0 only for bilateral series");

    cplx<R> num(R(1), R(0));
    for (const auto& p : spec.numerator) num *= qpoch_param(p, q, n);
    cplx<R> den(R(1), R(0));
    for (const auto& p : spec.denominator) den *= detail::poch_denominator(p, q, n);
    cplx<R> out = num / den * pow_int(spec.argument, n);
    if (spec.variant == Variant::phi) {
        out *= detail::tau_pow(n, detail::tau_exponent(spec), q);
        out /= qpoch(q.q, q, n);
    } else if (spec.variant == Variant::phi_tilde) {
        out *= detail::tau_pow(n, detail::tau_exponent(spec), q);
    }
    return out;
}

/// Adaptive summation of term_at(0), term_at(1), ... under the stop rule.
/// Used for every one-sided tail in this module and for the weighted outer
/// sums of the identity catalog.
template <class R, class TermFn>
SumResult<R> sum_adaptive(TermFn&& term_at, const SumCtrl& ctrl) {
    using T = real_traits<R>;
    CompensatedSum<R> acc;
    SumResult<R> res;
    int quiet = 0, qf_pos = 0;
    R qf_mag(0);
    for (long long n = 0; n < ctrl.max_terms; ++n) {
        cplx<R> t = term_at(n);
        if (!is_finite(t)) throw OverflowError("sum_adaptive: non-finite term");
        acc.add(t);
        res.terms_used = n + 1;
        R mag = abs_c(t);
        R scale = abs_c(acc.value());
        if (mag < T::from_double(ctrl.tol) * (scale > R(1) ? scale : R(1))) {
            ++quiet;
            if (mag > R(0) && qf_mag == R(0)) {
                qf_mag = mag;
                qf_pos = quiet;
            }
            if (quiet >= ctrl.k_stop) {
                R tail = detail::tail_from_window(qf_mag, mag, quiet - qf_pos);
                if (detail::tail_usable(tail)) {
                    res.value = acc.value();
                    res.tail_estimate = tail;
                    return res;
                }
                quiet = 0;
                qf_mag = R(0);
                qf_pos = 0;
            }
        } else {
            quiet = 0;
            qf_mag = R(0);
            qf_pos = 0;
        }
    }
    throw NoConvergence("sum_adaptive: max_terms reached");
}

/// phi / phi_tilde evaluation by running term ratio: the (n+1)-th term is the
/// n-th times a rational expression in q^n, so each step is O(r+s) with the
/// denominator pole check happening on every ratio update.
template <class R>
SumResult<R> eval_series(const SeriesSpec<R>& spec, const SumCtrl& ctrl) {
    using T = real_traits<R>;
    if (spec.variant == Variant::psi_bilateral)
        throw DomainError("eval_series: use eval_bilateral for psi series");
    const QBase<R>& q = spec.base;
    const cplx<R> one(R(1), R(0));

    if (spec.argument == cplx<R>(R(0), R(0))) {
        SumResult<R> res;
        res.value = one;
        res.terms_used = 1;
        res.terminated_exactly = true;
        return res;
    }

    const long long e = detail::tau_exponent(spec);
    const bool is_phi = spec.variant == Variant::phi;
    auto terminate_at = is_terminating(spec);

    CompensatedSum<R> acc;
    SumResult<R> res;
    cplx<R> term_n = one;
    cplx<R> qn = one;
    int quiet = 0, qf_pos = 0;
    R qf_mag(0);

    for (long long n = 0; n < ctrl.max_terms; ++n) {
        if (!is_finite(term_n)) throw OverflowError("eval_series: term overflow");
        acc.add(term_n);
        res.terms_used = n + 1;

        if (terminate_at && n == *terminate_at) {
            res.value = acc.value();
            res.terminated_exactly = true;
            res.tail_estimate = R(0);
            return res;
        }

        R mag = abs_c(term_n);
        R scale = abs_c(acc.value());
        if (mag < T::from_double(ctrl.tol) * (scale > R(1) ? scale : R(1))) {
            ++quiet;
            if (mag > R(0) && qf_mag == R(0)) {
                qf_mag = mag;
                qf_pos = quiet;
            }
            if (quiet >= ctrl.k_stop) {
                R tail = detail::tail_from_window(qf_mag, mag, quiet - qf_pos);
                if (detail::tail_usable(tail)) {
                    res.value = acc.value();
                    res.tail_estimate = tail;
                    return res;
                }
                quiet = 0;
                qf_mag = R(0);
                qf_pos = 0;
            }
        } else {
            quiet = 0;
            qf_mag = R(0);
            qf_pos = 0;
        }

        // ratio from term n to n+1
        cplx<R> ratio = spec.argument;
        bool exact_zero = false;
        for (const auto& p : spec.numerator) {
            if (p.exact_zero_at(n)) { exact_zero = true; break; }
            ratio *= (one - p.value * qn);
        }
        if (exact_zero) {
            // all terms beyond n are identically zero by tag
            res.value = acc.value();
            res.terms_used = n + 1;
            res.terminated_exactly = true;
            res.tail_estimate = R(0);
            return res;
        }
        for (const auto& p : spec.denominator) {
            cplx<R> f = one - p.value * qn;
            pole_guard(f, p.value * qn, "eval_series: denominator pole");
            ratio /= f;
        }
        if (e != 0) ratio *= pow_int(-qn, e);
        if (is_phi) ratio /= (one - q.q * qn);

        term_n *= ratio;
        qn *= q.q;
    }
    throw NoConvergence("eval_series: max_terms reached");
}

/// Bilateral evaluation: the n >= 0 and n <= -1 tails are summed
/// independently, each under the stop rule, and both must converge.
template <class R>
SumResult<R> eval_bilateral(const SeriesSpec<R>& spec, const SumCtrl& ctrl) {
    using T = real_traits<R>;
    if (spec.variant != Variant::psi_bilateral)
        throw DomainError("eval_bilateral: spec must be psi_bilateral");
    if (spec.numerator.size() != spec.denominator.size())
        throw DomainError("eval_bilateral: parameter lists must have equal length");
    const QBase<R>& q = spec.base;
    const cplx<R> one(R(1), R(0));

    if (spec.argument == cplx<R>(R(0), R(0))) {
        SumResult<R> res;
        res.value = one;
        res.terms_used = 1;
        res.terminated_exactly = true;
        return res;
    }

    SumResult<R> res;

    // positive tail, n = 0, 1, 2, ...
    {
        CompensatedSum<R> acc;
        cplx<R> term_n = one;
        cplx<R> qn = one;
        int quiet = 0, qf_pos = 0;
        R qf_mag(0), last_ratio(0);
        bool done = false;
        for (long long n = 0; n < ctrl.max_terms; ++n) {
            if (!is_finite(term_n)) throw OverflowError("eval_bilateral: term overflow");
            acc.add(term_n);
            res.terms_used += 1;
            R mag = abs_c(term_n);
            R scale = abs_c(acc.value());
            if (mag > T::from_double(1e150) && last_ratio >= R(1))
                throw NoConvergence("eval_bilateral: positive tail diverges");
            if (mag < T::from_double(ctrl.tol) * (scale > R(1) ? scale : R(1))) {
                ++quiet;
                if (mag > R(0) && qf_mag == R(0)) {
                    qf_mag = mag;
                    qf_pos = quiet;
                }
                if (quiet >= ctrl.k_stop) {
                    R tail = detail::tail_from_window(qf_mag, mag, quiet - qf_pos);
                    if (detail::tail_usable(tail)) {
                        res.tail_estimate += tail;
                        done = true;
                        break;
                    }
                    quiet = 0;
                    qf_mag = R(0);
                    qf_pos = 0;
                }
            } else {
                quiet = 0;
                qf_mag = R(0);
                qf_pos = 0;
            }
            cplx<R> ratio = spec.argument;
            bool exact_zero = false;
            for (const auto& p : spec.numerator) {
                if (p.exact_zero_at(n)) { exact_zero = true; break; }
                ratio *= (one - p.value * qn);
            }
            if (exact_zero) {
                done = true;
                break;  // all later positive terms vanish identically by tag
            }
            for (const auto& p : spec.denominator) {
                cplx<R> f = one - p.value * qn;
                pole_guard(f, p.value * qn, "eval_bilateral: denominator pole");
                ratio /= f;
            }
            term_n *= ratio;
            last_ratio = abs_c(ratio);
            qn *= q.q;
        }
        if (!done) throw NoConvergence("eval_bilateral: positive tail");
        res.value += acc.value();
    }

    // negative tail, n = -1, -2, ...
    {
        CompensatedSum<R> acc;
        const cplx<R> qinv = one / q.q;
        cplx<R> term_n = one;  // virtual n=0 seed; first ratio lands on n=-1
        cplx<R> qm = qinv;     // q^{-(m+1)} for the current step
        int quiet = 0, qf_pos = 0;
        R qf_mag(0), last_ratio(0);
        bool done = false;
        for (long long m = 0; m < ctrl.max_terms; ++m) {
            cplx<R> ratio = one / spec.argument;
            for (const auto& p : spec.denominator) ratio *= (one - p.value * qm);
            for (const auto& p : spec.numerator) {
                cplx<R> f = one - p.value * qm;
                pole_guard(f, p.value * qm, "eval_bilateral: negative-index pole");
                ratio /= f;
            }
            term_n *= ratio;
            last_ratio = abs_c(ratio);
            qm *= qinv;
            if (!is_finite(term_n)) throw OverflowError("eval_bilateral: term overflow");
            acc.add(term_n);
            res.terms_used += 1;
            R mag = abs_c(term_n);
            R scale = abs_c(acc.value());
            if (mag > T::from_double(1e150) && last_ratio >= R(1))
                throw NoConvergence("eval_bilateral: negative tail diverges");
            if (mag < T::from_double(ctrl.tol) * (scale > R(1) ? scale : R(1))) {
                ++quiet;
                if (mag > R(0) && qf_mag == R(0)) {
                    qf_mag = mag;
                    qf_pos = quiet;
                }
                if (quiet >= ctrl.k_stop) {
                    R tail = detail::tail_from_window(qf_mag, mag, quiet - qf_pos);
                    if (detail::tail_usable(tail)) {
                        res.tail_estimate += tail;
                        done = true;
                        break;
                    }
                    quiet = 0;
                    qf_mag = R(0);
                    qf_pos = 0;
                }
            } else {
                quiet = 0;
                qf_mag = R(0);
                qf_pos = 0;
            }
        }
        if (!done) throw NoConvergence("eval_bilateral: negative tail");
        res.value += acc.value();
    }

    return res;
}

/// Expand the very-well-poised compact notation rW_{r-1}(a1; a4..ar; q, z)
/// into a plain phi spec. The +-sqrt(a1) pair makes the principal-branch
/// choice observably irrelevant.
template <class R>
SeriesSpec<R> vwp_spec(const cplx<R>& a1, const std::vector<Param<R>>& upper,
                       const QBase<R>& q, const cplx<R>& z) {
    if (a1 == cplx<R>(R(0), R(0))) throw DomainError("vwp_spec: a1 must be nonzero");
    cplx<R> s = sqrt_c(a1);
    SeriesSpec<R> spec{Variant::phi, {}, {}, q, z};
    spec.numerator.reserve(3 + upper.size());
    spec.numerator.emplace_back(a1);
    spec.numerator.emplace_back(q.q * s);
    spec.numerator.emplace_back(-q.q * s);
    spec.denominator.reserve(2 + upper.size());
    spec.denominator.emplace_back(s);
    spec.denominator.emplace_back(-s);
    for (const auto& u : upper) {
        if (u.value == cplx<R>(R(0), R(0)))
            throw DomainError("vwp_spec: zero upper parameter");
        spec.numerator.push_back(u);
        spec.denominator.emplace_back(q.q * a1 / u.value);
    }
    return spec;
}

}  // namespace qseries
