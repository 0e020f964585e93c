// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qseries/kahan.hpp"
#include "qseries/qcore.hpp"

namespace qseries {

/// An (f,g) kernel: g antisymmetric, f tied to g by the three-term relation
///   g(a,b) f(x,c) + g(b,c) f(x,a) + g(c,a) f(x,b) = 0.
template <class R>
struct FGKernel {
    std::function<cplx<R>(const cplx<R>&, const cplx<R>&)> f;
    std::function<cplx<R>(const cplx<R>&, const cplx<R>&)> g;
    std::string name;
};

/// The kernel of the title: f(x,y) = 1 - x y, g(x,y) = y - x.
template <class R>
FGKernel<R> linear_kernel() {
    return FGKernel<R>{
        [](const cplx<R>& x, const cplx<R>& y) { return cplx<R>(R(1), R(0)) - x * y; },
        [](const cplx<R>& x, const cplx<R>& y) { return y - x; },
        "linear"};
}

/// Node sequences x_n, b_n. The b_n must be pairwise distinct on the range a
/// matrix uses; geometric_nodes gives the q-series choice x_n = a q^n,
/// b_n = c q^n.
template <class R>
struct NodeSequences {
    std::function<cplx<R>(long long)> x;
    std::function<cplx<R>(long long)> b;
};

template <class R>
NodeSequences<R> geometric_nodes(const cplx<R>& a, const cplx<R>& c, const QBase<R>& q) {
    return NodeSequences<R>{
        [a, q](long long n) { return a * pow_int(q.q, n); },
        [c, q](long long n) { return c * pow_int(q.q, n); }};
}

/// Lower-triangular matrix with rows 0..size-1; entries above the diagonal
/// read as zero.
template <class R>
class TriMatrix {
  public:
    explicit TriMatrix(long long size)
        : size_(size), data_(static_cast<size_t>(size * (size + 1) / 2)) {}

    long long size() const { return size_; }

    cplx<R>& at(long long n, long long k) { return data_[idx(n, k)]; }
    cplx<R> operator()(long long n, long long k) const {
        if (k > n) return cplx<R>(R(0), R(0));
        return data_[idx(n, k)];
    }

  private:
    size_t idx(long long n, long long k) const {
        return static_cast<size_t>(n * (n + 1) / 2 + k);
    }
    long long size_;
    std::vector<cplx<R>> data_;
};

namespace detail {

template <class R>
void check_nodes_distinct(const NodeSequences<R>& seqs, long long N) {
    // relative separation: geometric node tails shrink toward zero, so an
    // absolute floor would reject every large range
    for (long long i = 0; i <= N; ++i) {
        for (long long j = i + 1; j <= N; ++j) {
            R scale = std::max(abs_c(seqs.b(i)), abs_c(seqs.b(j)));
            R floor = real_traits<R>::from_double(1e-8) *
                      std::max(scale, real_traits<R>::from_double(1e-30));
            if (abs_c(seqs.b(i) - seqs.b(j)) <= floor)
                throw DomainError("node sequence b_n not separated on the used range");
        }
    }
}

}  // namespace detail

/// B_{n,k} = prod_{i=k..n-1} f(x_i, b_k) / prod_{i=k+1..n} g(b_i, b_k),
/// built column-by-column from cached running products (O(N^2) total).
/// Rows 0..N, so the returned matrix has size N+1.
template <class R>
TriMatrix<R> matrix_B(const FGKernel<R>& kernel, const NodeSequences<R>& seqs, long long N) {
    detail::check_nodes_distinct(seqs, N);
    TriMatrix<R> B(N + 1);
    for (long long k = 0; k <= N; ++k) {
        cplx<R> bk = seqs.b(k);
        cplx<R> num(R(1), R(0)), den(R(1), R(0));
        B.at(k, k) = cplx<R>(R(1), R(0));
        for (long long n = k + 1; n <= N; ++n) {
            num *= kernel.f(seqs.x(n - 1), bk);
            cplx<R> gf = kernel.g(seqs.b(n), bk);
            pole_guard(gf, seqs.b(n), "matrix_B: vanishing g denominator");
            den *= gf;
            B.at(n, k) = num / den;
        }
    }
    return B;
}

/// B^{-1}_{n,k} = f(x_k,b_k)/f(x_n,b_n) * prod_{i=k+1..n} f(x_i, b_n)
///                                       / prod_{i=k..n-1} g(b_i, b_n).
template <class R>
TriMatrix<R> matrix_Binv(const FGKernel<R>& kernel, const NodeSequences<R>& seqs, long long N) {
    detail::check_nodes_distinct(seqs, N);
    TriMatrix<R> M(N + 1);
    for (long long n = 0; n <= N; ++n) {
        cplx<R> bn = seqs.b(n);
        cplx<R> fnn = kernel.f(seqs.x(n), bn);
        pole_guard(fnn, seqs.x(n), "matrix_Binv: f(x_n, b_n) vanishes");
        M.at(n, n) = cplx<R>(R(1), R(0));
        cplx<R> num(R(1), R(0)), den(R(1), R(0));
        for (long long k = n - 1; k >= 0; --k) {
            num *= kernel.f(seqs.x(k + 1), bn);
            cplx<R> gf = kernel.g(seqs.b(k), bn);
            pole_guard(gf, seqs.b(k), "matrix_Binv: vanishing g denominator");
            den *= gf;
            M.at(n, k) = kernel.f(seqs.x(k), seqs.b(k)) / fnn * num / den;
        }
    }
    return M;
}

/// Max normalized residual of both product orders against the identity:
///   max_{n,k} |sum_i A_{n,i} B_{i,k} - delta_{n,k}| / max(1, sum_i |A_{n,i} B_{i,k}|).
/// The normalization is what makes the measure meaningful: the entries grow
/// like q^{-binom(N,2)}, so the raw absolute residual scales with that growth
/// and says nothing about correctness.
template <class R>
R verify_inverse_pair(const TriMatrix<R>& B, const TriMatrix<R>& Binv) {
    if (B.size() != Binv.size()) throw DomainError("verify_inverse_pair: size mismatch");
    const long long N = B.size() - 1;
    R worst(0);
    auto probe = [&](const TriMatrix<R>& L, const TriMatrix<R>& Rm) {
        for (long long n = 0; n <= N; ++n) {
            for (long long k = 0; k <= n; ++k) {
                CompensatedSum<R> acc;
                R scale(0);
                for (long long i = k; i <= n; ++i) {
                    cplx<R> t = L(n, i) * Rm(i, k);
                    acc.add(t);
                    scale += abs_c(t);
                }
                cplx<R> s = acc.value();
                if (n == k) s -= cplx<R>(R(1), R(0));
                R dev = abs_c(s) / (scale > R(1) ? scale : R(1));
                if (dev > worst) worst = dev;
            }
        }
    };
    probe(B, Binv);
    probe(Binv, B);
    return worst;
}

/// The Gessel-Stanton q-Lagrange pair:
///   M_{n,k} = (A p^k q^k; p)_{n-k} / (q;q)_{n-k} * q^{-nk}
///   W_{n,k} = (-1)^{n-k} q^{binom(n-k+1,2)+nk} (1 - A p^k q^k)
///             * (A q^n p^{n-1}; p^{-1})_{n-k-1} / (q;q)_{n-k}.
/// The p^{-1}-base factor is a finite product of n-k-1 factors; at
/// n-k-1 = -1 the reciprocal rule (a; p^{-1})_{-1} = 1/(1 - a p) applies.
template <class R>
std::pair<TriMatrix<R>, TriMatrix<R>> gessel_stanton_pair(const cplx<R>& A,
                                                          const QBase<R>& p,
                                                          const QBase<R>& q,
                                                          long long N) {
    TriMatrix<R> M(N + 1), W(N + 1);
    const cplx<R> one(R(1), R(0));
    for (long long n = 0; n <= N; ++n) {
        for (long long k = 0; k <= n; ++k) {
            cplx<R> Apk_qk = A * pow_int(p.q, k) * pow_int(q.q, k);
            cplx<R> qq = qpoch(q.q, q, n - k);
            M.at(n, k) = qpoch(Apk_qk, p, n - k) / qq * pow_int(q.q, -n * k);

            cplx<R> head = A * pow_int(q.q, n) * pow_int(p.q, n - 1);
            cplx<R> pinv_poch;
            long long depth = n - k - 1;
            if (depth >= 0) {
                pinv_poch = one;
                cplx<R> f = head;
                for (long long j = 0; j < depth; ++j) {
                    pinv_poch *= (one - f);
                    f /= p.q;
                }
            } else {
                cplx<R> w = head * p.q;
                cplx<R> fac = one - w;
                pole_guard(fac, w, "gessel_stanton_pair: reciprocal factor");
                pinv_poch = one / fac;
            }
            cplx<R> sgn = ((n - k) & 1) ? -one : one;
            W.at(n, k) = sgn * pow_int(q.q, binom2(n - k + 1) + n * k) * (one - Apk_qk) *
                         pinv_poch / qq;
        }
    }
    return {std::move(M), std::move(W)};
}

/// Expansion coefficients of Lemma-2.2 form, from samples F(b_0..b_n):
///   G_n = sum_{k=0..n} F(b_k) prod_{i=1..n-1} f(x_i,b_k)
///                            / prod_{i=0..n, i != k} g(b_i,b_k).
/// At n = 0 the numerator product is the reciprocal-convention
/// prod_{i=1..-1} f = 1/f(x_0, b_0); this is forced by the round trip with
/// the reconstruction formula (constant F must reproduce itself).
template <class R>
cplx<R> expansion_coeffs(std::span<const cplx<R>> F_at_b, const FGKernel<R>& kernel,
                         const NodeSequences<R>& seqs, long long n) {
    if (static_cast<long long>(F_at_b.size()) < n + 1)
        throw DomainError("expansion_coeffs: need samples F(b_0..b_n)");
    CompensatedSum<R> acc;
    for (long long k = 0; k <= n; ++k) {
        cplx<R> bk = seqs.b(k);
        cplx<R> num(R(1), R(0));
        if (n == 0) {
            cplx<R> f0 = kernel.f(seqs.x(0), bk);
            pole_guard(f0, seqs.x(0), "expansion_coeffs: f(x_0, b_0) vanishes");
            num = cplx<R>(R(1), R(0)) / f0;
        } else {
            for (long long i = 1; i <= n - 1; ++i) num *= kernel.f(seqs.x(i), bk);
        }
        cplx<R> den(R(1), R(0));
        for (long long i = 0; i <= n; ++i) {
            if (i == k) continue;
            cplx<R> gf = kernel.g(seqs.b(i), bk);
            pole_guard(gf, seqs.b(i), "expansion_coeffs: vanishing g denominator");
            den *= gf;
        }
        acc.add(F_at_b[static_cast<size_t>(k)] * num / den);
    }
    return acc.value();
}

/// Partial sum to N of the Lemma-2.2 expansion
///   F(x) = sum_n G_n f(x_n,b_n) prod_{k=0..n-1} g(b_k,x) / prod_{k=1..n} f(x_k,x).
template <class R>
cplx<R> reconstruct(std::span<const cplx<R>> G, const FGKernel<R>& kernel,
                    const NodeSequences<R>& seqs, const cplx<R>& x, long long N) {
    if (static_cast<long long>(G.size()) < N + 1)
        throw DomainError("reconstruct: need coefficients G_0..G_N");
    CompensatedSum<R> acc;
    cplx<R> num(R(1), R(0)), den(R(1), R(0));
    for (long long n = 0; n <= N; ++n) {
        if (n > 0) {
            num *= kernel.g(seqs.b(n - 1), x);
            cplx<R> ff = kernel.f(seqs.x(n), x);
            pole_guard(ff, seqs.x(n), "reconstruct: f(x_k, x) vanishes");
            den *= ff;
        }
        acc.add(G[static_cast<size_t>(n)] * kernel.f(seqs.x(n), seqs.b(n)) * num / den);
    }
    return acc.value();
}

}  // namespace qseries
