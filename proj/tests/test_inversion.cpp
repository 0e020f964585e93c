// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qseries/inversion.hpp"
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

TEST_CASE("triple identity for the linear kernel") {
    auto k = linear_kernel<double>();
    SweepRng rng(5, "triple-identity", 0);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        C a = rand_disk(rng, 0.05, 1.0), b = rand_disk(rng, 0.05, 1.0);
        C c = rand_disk(rng, 0.05, 1.0), x = rand_disk(rng, 0.05, 1.0);
        C r = k.g(a, b) * k.f(x, c) + k.g(b, c) * k.f(x, a) + k.g(c, a) * k.f(x, b);
        worst = std::max(worst, abs_c(r));
        // antisymmetry
        CHECK(abs_c(k.g(a, b) + k.g(b, a)) == 0.0);
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("matrix_B entries") {
    QBase<double> q(C(0.5, 0));
    C a(0.3, 0), c(0.7, 0);
    auto nodes = geometric_nodes(a, c, q);
    auto kern = linear_kernel<double>();

    auto B = matrix_B(kern, nodes, 4);
    for (long long n = 0; n <= 4; ++n) CHECK(B(n, n) == C(1, 0));
    // B_{1,0} = f(x_0, b_0) / g(b_1, b_0) = (1 - ac) / (c - cq)
    CHECK(rel(B(1, 0), (C(1, 0) - a * c) / (c - c * q.q)) < 1e-14);
    CHECK(B(0, 1) == C(0, 0));

    auto B0 = matrix_B(kern, nodes, 0);
    CHECK(B0.size() == 1);
    CHECK(B0(0, 0) == C(1, 0));
}

TEST_CASE("matrix_Binv entries") {
    QBase<double> q(C(0.5, 0));
    C a(0.3, 0), c(0.7, 0);
    auto nodes = geometric_nodes(a, c, q);
    auto kern = linear_kernel<double>();
    auto Bi = matrix_Binv(kern, nodes, 4);
    for (long long n = 0; n <= 4; ++n) CHECK(Bi(n, n) == C(1, 0));
    // direct substitution at (1,0)
    C expect = kern.f(nodes.x(0), nodes.b(0)) / kern.f(nodes.x(1), nodes.b(1)) *
               kern.f(nodes.x(1), nodes.b(1)) / kern.g(nodes.b(0), nodes.b(1));
    CHECK(rel(Bi(1, 0), expect) < 1e-14);
}

TEST_CASE("mutual inversion, linear kernel") {
    auto kern = linear_kernel<double>();
    {
        QBase<double> q(C(0.5, 0));
        auto nodes = geometric_nodes(C(0.3, 0), C(0.7, 0), q);
        auto B = matrix_B(kern, nodes, 1);
        auto Bi = matrix_Binv(kern, nodes, 1);
        CHECK(verify_inverse_pair(B, Bi) <= 1e-15);

        auto B16 = matrix_B(kern, nodes, 16);
        auto Bi16 = matrix_Binv(kern, nodes, 16);
        CHECK(verify_inverse_pair(B16, Bi16) < 1e-10);
    }
    SweepRng rng(13, "inversion-random", 0);
    for (int trial = 0; trial < 10; ++trial) {
        QBase<double> q(rand_disk(rng, 0.2, 0.8));
        auto nodes = geometric_nodes(rand_disk(rng), rand_disk(rng), q);
        auto B = matrix_B(kern, nodes, 16);
        auto Bi = matrix_Binv(kern, nodes, 16);
        CHECK(verify_inverse_pair(B, Bi) < 1e-9);
    }
}

TEST_CASE("gessel-stanton pair") {
    QBase<double> p(C(0.6, 0)), q(C(0.5, 0));
    C A(0.4, 0);
    auto [M, W] = gessel_stanton_pair(A, p, q, 12);

    // diagonals: M_{n,n} = q^{-n^2}, and the pair multiplies to 1 there
    for (long long n = 0; n <= 12; ++n) {
        CHECK(rel(M(n, n), pow_int(q.q, -n * n)) < 1e-12);
        CHECK(rel(M(n, n) * W(n, n), C(1, 0)) < 1e-12);
    }
    CHECK(verify_inverse_pair(M, W) < 1e-9);

    SweepRng rng(17, "gs-random", 0);
    for (int trial = 0; trial < 5; ++trial) {
        QBase<double> pr(rand_disk(rng, 0.2, 0.8)), qr(rand_disk(rng, 0.2, 0.8));
        auto [Mr, Wr] = gessel_stanton_pair(rand_disk(rng), pr, qr, 12);
        CHECK(verify_inverse_pair(Mr, Wr) < 1e-9);
    }
}

TEST_CASE("expansion coefficients and reconstruction") {
    QBase<double> q(C(0.5, 0));
    C a(0.3, 0.1), c(0.67, -0.1);
    auto nodes = geometric_nodes(a, c, q);
    auto kern = linear_kernel<double>();

    // constant F: G_0 = F(b_0) / f(x_0, b_0), all higher coefficients vanish
    std::vector<C> Fconst(8, C(1, 0));
    C g0 = expansion_coeffs(std::span<const C>(Fconst), kern, nodes, 0);
    CHECK(rel(g0, C(1, 0) / kern.f(nodes.x(0), nodes.b(0))) < 1e-13);
    for (long long n = 1; n <= 5; ++n)
        CHECK(abs_c(expansion_coeffs(std::span<const C>(Fconst), kern, nodes, n)) < 1e-10);

    // round trip: coefficients of F = 1, reconstructed at x = b_3, give 1
    std::vector<C> G(6);
    for (long long n = 0; n <= 5; ++n)
        G[n] = expansion_coeffs(std::span<const C>(Fconst), kern, nodes, n);
    CHECK(rel(reconstruct(std::span<const C>(G), kern, nodes, nodes.b(3), 5), C(1, 0)) <
          1e-10);

    // F identically zero
    std::vector<C> F0(6, C(0, 0));
    for (long long n = 0; n <= 5; ++n)
        CHECK(expansion_coeffs(std::span<const C>(F0), kern, nodes, n) == C(0, 0));

    // the constant basis element reproduces the unit coefficient vector
    std::vector<C> Fbasis(8, kern.f(nodes.x(0), nodes.b(0)));
    CHECK(rel(expansion_coeffs(std::span<const C>(Fbasis), kern, nodes, 0), C(1, 0)) <
          1e-13);
    for (long long n = 1; n <= 4; ++n)
        CHECK(abs_c(expansion_coeffs(std::span<const C>(Fbasis), kern, nodes, n)) < 1e-10);

    // G = (1, 0, 0, ...) reconstructs to the constant f(x_0, b_0)
    std::vector<C> e0 = {C(1, 0), C(0, 0), C(0, 0)};
    C val = reconstruct(std::span<const C>(e0), kern, nodes, C(0.21, 0.34), 2);
    CHECK(rel(val, kern.f(nodes.x(0), nodes.b(0))) < 1e-13);

    // x = b_m kills every term beyond m
    std::vector<C> Gr = {C(0.3, 0.2), C(-0.4, 0.1), C(0.2, -0.5), C(0.1, 0.1), C(0.7, 0)};
    C at3a = reconstruct(std::span<const C>(Gr), kern, nodes, nodes.b(3), 3);
    C at3b = reconstruct(std::span<const C>(Gr), kern, nodes, nodes.b(3), 4);
    CHECK(rel(at3a, at3b) < 1e-12);
}

TEST_CASE("sampling-reconstruction recovers finite coefficient vectors") {
    SweepRng rng(23, "sampling-reconstruction", 0);
    auto kern = linear_kernel<double>();
    for (int trial = 0; trial < 20; ++trial) {
        QBase<double> q(rand_disk(rng, 0.25, 0.75));
        auto nodes = geometric_nodes(rand_disk(rng), rand_disk(rng), q);
        const long long m = 4;
        std::vector<C> G(m + 1);
        for (auto& g : G) g = rand_disk(rng, 0.1, 1.0);
        std::vector<C> F(m + 3);
        for (long long n = 0; n < static_cast<long long>(F.size()); ++n)
            F[n] = reconstruct(std::span<const C>(G), kern, nodes, nodes.b(n), m);
        for (long long n = 0; n <= m; ++n) {
            C gp = expansion_coeffs(std::span<const C>(F), kern, nodes, n);
            CHECK(abs_c(gp - G[n]) /
                      std::max({abs_c(G[n]), 1.0}) < 1e-9);
        }
    }
}

TEST_CASE("near-coincident nodes are rejected") {
    QBase<double> q(C(0.5, 0));
    auto kern = linear_kernel<double>();
    NodeSequences<double> bad{[](long long n) { return C(0.3 + n, 0); },
                              [](long long) { return C(0.4, 0); }};
    CHECK_THROWS_AS(matrix_B(kern, bad, 3), DomainError);
}
