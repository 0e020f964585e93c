// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qseries/qcore.hpp"
#include "qseries/rng.hpp"

using namespace qseries;
using C = cplx<double>;

namespace {

C rand_disk(SweepRng& rng, double lo = 0.1, double hi = 0.9) {
    double m = rng.log_uniform(lo, hi);
    double p = rng.uniform01() * 6.283185307179586;
    return C(m * std::cos(p), m * std::sin(p));
}

double rel(const C& a, const C& b) {
    return abs_c(a - b) / std::max({abs_c(a), abs_c(b), 1.0});
}

}  // namespace

TEST_CASE("qpoch basics") {
    QBase<double> q(C(0.5, 0));
    CHECK(qpoch(C(123.0, -4.0), q, 0) == C(1, 0));
    CHECK(qpoch(C(0.5, 0), q, 2).real() == doctest::Approx(0.375).epsilon(1e-15));
    // negative index: 1/(1 - a/q) with a=2, q=0.5
    CHECK(qpoch(C(2, 0), q, -1).real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

    // reciprocal factor exactly at a pole
    CHECK_THROWS_AS(qpoch(C(0.25, 0), q, -2), PoleError);
}

TEST_CASE("qpoch_inf") {
    QBase<double> q(C(0.5, 0));
    CHECK(qpoch_inf(C(0, 0), q) == C(1, 0));
    CHECK(qpoch_inf(C(0.5, 0), q).real() ==
          doctest::Approx(0.2887880950866024212788997).epsilon(1e-15));
    CHECK(qpoch_inf(C(1, 0), q) == C(0, 0));
}

TEST_CASE("qpoch_multi") {
    QBase<double> q(C(0.5, 0));
    CHECK(qpoch_multi<double>({}, q, 5) == C(1, 0));
    CHECK(qpoch_multi<double>({C(0.5, 0), C(0.25, 0)}, q, 1).real() ==
          doctest::Approx(0.375).epsilon(1e-15));
    CHECK(qpoch_multi<double>({C(2, 0)}, q, -1).real() ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("tau and qbinom") {
    QBase<double> q(C(0.5, 0));
    CHECK(tau(0, q) == C(1, 0));
    CHECK(tau(1, q) == C(-1, 0));
    CHECK(tau(3, q).real() == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK_THROWS_AS(tau(-1, q), DomainError);

    CHECK(qbinom(7, 0, q) == C(1, 0));
    CHECK(qbinom(3, 1, q).real() == doctest::Approx(1.75).epsilon(1e-14));  // 1 + q + q^2
    CHECK(qbinom(2, 1, q).real() == doctest::Approx(1.5).epsilon(1e-14));   // 1 + q
    CHECK_THROWS_AS(qbinom(3, 4, q), DomainError);
    CHECK_THROWS_AS(qbinom(3, -1, q), DomainError);
}

TEST_CASE("QBase invariant") {
    CHECK_THROWS_AS(QBase<double>(C(1.2, 0)), DomainError);
    CHECK_THROWS_AS(QBase<double>(C(0, 0)), DomainError);
}

TEST_CASE("shift relations hold at random points") {
    SweepRng rng(42, "qcore-shift", 0);
    for (int trial = 0; trial < 50; ++trial) {
        QBase<double> q(rand_disk(rng, 0.2, 0.8));
        C a = rand_disk(rng), b = rand_disk(rng);
        long long n = 1 + static_cast<long long>(rng.next_u64() % 12);
        long long k = static_cast<long long>(rng.next_u64() % (n + 1));

        // (a;q)_{n-k} / (b;q)_{n-k} via the index-shift relation
        C lhs = qpoch(a, q, n - k) / qpoch(b, q, n - k);
        C rhs = qpoch(a, q, n) / qpoch(b, q, n) *
                qpoch(pow_int(q.q, 1 - n) / b, q, k) / qpoch(pow_int(q.q, 1 - n) / a, q, k) *
                pow_int(b / a, k);
        CHECK(rel(lhs, rhs) < 1e-10);

        // degenerate shift
        C lhs2 = qpoch(a, q, n - k);
        C rhs2 = pow_int(-C(1, 0) / a, k) * pow_int(q.q, binom2(k + 1) - n * k) *
                 qpoch(a, q, n) / qpoch(pow_int(q.q, 1 - n) / a, q, k);
        CHECK(rel(lhs2, rhs2) < 1e-10);

        // tau addition
        CHECK(rel(tau(n + k, q), tau(n, q) * tau(k, q) * pow_int(q.q, n * k)) < 1e-13);

        // reciprocal consistency
        CHECK(rel(qpoch(a, q, -n) * qpoch(a * pow_int(q.q, -n), q, n), C(1, 0)) < 1e-12);

        // index additivity
        long long mm = static_cast<long long>(rng.next_u64() % 8);
        CHECK(rel(qpoch(a, q, n + mm),
                  qpoch(a, q, n) * qpoch(a * pow_int(q.q, n), q, mm)) < 1e-12);
    }
}

TEST_CASE("tagged parameters") {
    QBase<double> q(C(0.5, 0));
    auto p = Param<double>::unit_qpow(-3, q);
    CHECK(p.exact_zero_at(3));
    CHECK_FALSE(p.exact_zero_at(2));
    CHECK(qpoch_param(p, q, 4) == C(0, 0));
    CHECK(qpoch_param(p, q, 3) != C(0, 0));

    auto pc = Param<double>::qpow(C(0.7, 0), -2, q);
    CHECK_FALSE(pc.exact_zero_at(2));  // non-unit coefficient never exact-terminates
    CHECK(rel(pc.value, C(0.7 * 4.0, 0)) < 1e-15);
}
