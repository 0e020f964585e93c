// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria mirror the project contract: inversion residuals,
// round trips, the full two-sided catalog sweep in both precisions, the
// limit chains, multi-sum agreement, the Askey-Wilson checks, the symmetry
// property, and report determinism.

#include <chrono>
#include <cstdio>
#include <string>

#include "qseries/harness.hpp"
#include "qseries/inversion.hpp"

using namespace qseries;
using C = cplx<double>;

namespace {

int failures = 0;

void line(int idx, const char* what, bool ok, const std::string& metric) {
    std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, what,
                metric.c_str());
    if (!ok) ++failures;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

C rand_disk(SweepRng& rng, double lo, double hi) {
    double m = rng.log_uniform(lo, hi);
    double p = rng.uniform01() * 6.283185307179586;
    return C(m * std::cos(p), m * std::sin(p));
}

double relc(const C& a, const C& b) {
    return abs_c(a - b) / std::max({abs_c(a), abs_c(b), 1.0});
}

// --- criterion 1: linear-kernel inversion delta check -----------------------
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    auto kern = linear_kernel<double>();
    SweepRng rng(101, "acc-linear-inversion", 0);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        QBase<double> q(rand_disk(rng, 0.2, 0.8));
        auto nodes = geometric_nodes(rand_disk(rng, 0.15, 0.85), rand_disk(rng, 0.15, 0.85), q);
        auto B = matrix_B(kern, nodes, 16);
        auto Bi = matrix_Binv(kern, nodes, 16);
        worst = std::max(worst, verify_inverse_pair(B, Bi));
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(1, "linear-kernel inversion residual, N=16, 20 trials", worst < 1e-9 && dt < 1.0,
         "worst=" + sci(worst) + ", wall=" + sci(dt) + "s");
}

// --- criterion 2: Gessel-Stanton pair ---------------------------------------
void criterion_2() {
    SweepRng rng(102, "acc-gs-inversion", 0);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        QBase<double> p(rand_disk(rng, 0.2, 0.8)), q(rand_disk(rng, 0.2, 0.8));
        auto [M, W] = gessel_stanton_pair(rand_disk(rng, 0.15, 0.85), p, q, 12);
        worst = std::max(worst, verify_inverse_pair(M, W));
    }
    line(2, "Gessel-Stanton pair residual, N=12, 20 trials", worst < 1e-9,
         "worst=" + sci(worst));
}

// --- criterion 3: three-term kernel identity --------------------------------
void criterion_3() {
    auto k = linear_kernel<double>();
    SweepRng rng(103, "acc-triple", 0);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        C a = rand_disk(rng, 0.05, 1.0), b = rand_disk(rng, 0.05, 1.0);
        C c = rand_disk(rng, 0.05, 1.0), x = rand_disk(rng, 0.05, 1.0);
        worst = std::max(
            worst, abs_c(k.g(a, b) * k.f(x, c) + k.g(b, c) * k.f(x, a) + k.g(c, a) * k.f(x, b)));
    }
    line(3, "three-term kernel identity residual, 1000 points", worst < 1e-12,
         "worst=" + sci(worst));
}

// --- criterion 4: coefficient extraction round trips ------------------------
void criterion_4() {
    auto kern = linear_kernel<double>();
    SweepRng rng(104, "acc-roundtrip", 0);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        QBase<double> q(rand_disk(rng, 0.25, 0.8));
        auto nodes = geometric_nodes(rand_disk(rng, 0.15, 0.85), rand_disk(rng, 0.15, 0.85), q);
        const long long N = 12;
        std::vector<C> G(N + 1);
        for (auto& g : G) g = rand_disk(rng, 0.1, 1.0);
        std::vector<C> F(N + 1);
        for (long long n = 0; n <= N; ++n)
            F[n] = reconstruct(std::span<const C>(G), kern, nodes, nodes.b(n), N);
        for (long long n = 0; n <= N; ++n) {
            C gp = expansion_coeffs(std::span<const C>(F), kern, nodes, n);
            // scale-aware recovery error: the extraction terms grow like
            // q^{-binom(n,2)}, so the raw difference is measured against them
            double scale = 1.0;
            for (long long k = 0; k <= n; ++k) {
                C den(1, 0);
                for (long long i = 0; i <= n; ++i)
                    if (i != k) den *= kern.g(nodes.b(i), nodes.b(k));
                scale = std::max(scale, abs_c(F[k]) / abs_c(den));
            }
            worst = std::max(worst, abs_c(gp - G[n]) / scale);
        }
    }
    line(4, "expansion/reconstruction round trips, N=12, 20 trials", worst < 1e-9,
         "worst=" + sci(worst));
}

// --- criterion 5: full catalog sweep, both precisions ------------------------
void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    RunConfig cfg;
    cfg.samples = 50;
    cfg.seed = 424243;
    cfg.tol = 1e-8;
    auto rep = run<double>(cfg);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double worst = 0;
    std::string bad;
    for (const auto& r : rep.results) {
        worst = std::max(worst, static_cast<double>(r.max_rel_err));
        if (!r.pass()) bad += " " + r.id;
    }
    line(5, "full catalog sweep, double, 50 samples/identity",
         rep.all_pass && dt < 300.0,
         "worst_rel_err=" + sci(worst) + ", wall=" + sci(dt) +
             "s" + (bad.empty() ? "" : ", failing:" + bad));

    auto t1 = std::chrono::steady_clock::now();
    RunConfig xcfg;
    xcfg.samples = 10;
    xcfg.seed = 424243;
    xcfg.tol = 1e-20;
    xcfg.precision = "extended";
    auto xrep = run<f128>(xcfg);
    double xdt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    double xworst = 0;
    std::string xbad;
    for (const auto& r : xrep.results) {
        xworst = std::max(xworst, static_cast<double>(r.max_rel_err));
        if (!r.pass()) xbad += " " + r.id;
    }
    line(5, "full catalog sweep, extended, 10 samples/identity", xrep.all_pass,
         "worst_rel_err=" + sci(xworst) + ", wall=" + sci(xdt) +
             "s" + (xbad.empty() ? "" : ", failing:" + xbad));
}

// --- criterion 6: limit chains -----------------------------------------------
void criterion_6() {
    SumCtrl ctrl = default_ctrl<double>();
    auto catalog = build_catalog<double>();

    // generalized Rogers-Fine -> Rogers-Fine as d -> 0
    {
        const auto& grf = find_identity(catalog, "gen_rogers_fine");
        const auto& rf = find_identity(catalog, "rogers_fine");
        C q(0.41, 0.13), a(0.45, 0.2), c(0.3, -0.25), x(0.5, 0.15);
        Assignment<double> R0;
        R0.set("q", q); R0.set("a", a); R0.set("c", c); R0.set("x", x);
        C target = rf.rhs(R0, ctrl).value;
        auto at = [&](double d) {
            Assignment<double> A;
            A.set("q", q); A.set("a", a); A.set("c", c); A.set("d", C(d, 0)); A.set("x", x);
            return grf.lhs(A, ctrl).value;
        };
        double e1 = abs_c(at(1e-6) - target), e2 = abs_c(at(5e-7) - target);
        line(6, "limit chain: generalized Rogers-Fine -> Rogers-Fine",
             e1 < 1e-4 && e1 / e2 >= 1.5,
             "err(1e-6)=" + sci(e1) + ", shrink=" + sci(e1 / e2));
    }

    // main theorem -> companion theorem as d -> 0, via the zero-padded map
    {
        QBase<double> q(C(0.43, 0.11));
        C a1(0.7, 0.3), b1(0.25, -0.4), a(0.45, 0.2), c(0.3, -0.25), x(0.5, 0.15),
            t(0.6, -0.2);
        auto dl = eval_thm_dlidi_lhs<double>({a1}, {b1, C(0, 0)}, a * c * q.q * q.q,
                                             a * x * q.q, t / (a * q.q), q, ctrl);
        auto at = [&](double d) {
            return eval_thm_main_lhs<double>({a1}, {b1, q.q}, c, C(d, 0), x, t, q, ctrl)
                .value;
        };
        double e1 = abs_c(at(1e-6) - dl.value), e2 = abs_c(at(5e-7) - dl.value);
        // the right sides converge to the same common value
        auto dr = eval_thm_dlidi_rhs<double>({a1}, {b1, C(0, 0)}, a * c * q.q * q.q,
                                             a * x * q.q, t / (a * q.q), q, ctrl);
        double cross = relc(dl.value, dr.value);
        line(6, "limit chain: main theorem -> companion theorem",
             e1 < 1e-4 && e1 / e2 >= 1.5 && cross < 1e-8,
             "err(1e-6)=" + sci(e1) + ", shrink=" + sci(e1 / e2));
    }

    // finite-y very-well-poised form approaches the limiting transformation
    {
        const auto& ct = find_identity(catalog, "concluding_transform");
        Assignment<double> A;
        A.set("q", C(0.41, 0.13));
        A.set("a", C(0.35, 0.15));
        A.set("b", C(0.52, -0.2));
        A.set("c", C(0.28, 0.2));
        A.set("d", C(0.6, 0.1));
        A.set("x", C(0.4, -0.18));
        C target = ct.lhs(A, ctrl).value;
        C rhs_limit = ct.rhs(A, ctrl).value;
        double e1 = abs_c(concluding_rhs_at<double>(C(1e-4, 0), A, ctrl).value - target);
        double e2 = abs_c(concluding_rhs_at<double>(C(5e-5, 0), A, ctrl).value - target);
        line(6, "limit chain: finite-y form of the limiting transformation",
             e1 < 1e-2 && e1 / e2 >= 1.5 && relc(target, rhs_limit) < 1e-8,
             "err(1e-4)=" + sci(e1) + ", shrink=" + sci(e1 / e2));
    }
}

// --- criterion 7: multi-sum expansion ----------------------------------------
void criterion_7() {
    auto catalog = build_catalog<double>();
    SumCtrl ctrl = default_ctrl<double>();
    {
        const auto& e = find_identity(catalog, "thm_multi_m2");
        double worst = 0;
        int accepted = 0;
        for (uint64_t attempt = 0; accepted < 10 && attempt < 4000; ++attempt) {
            auto A = sample_params(e, 7171, attempt);
            if (!A) continue;
            ++accepted;
            auto res = verify_identity(e, *A, ctrl, 1e-6);
            worst = std::max(worst, static_cast<double>(res.rel_err));
        }
        line(7, "multi-sum expansion m=2, 10 samples, axis cap 40",
             accepted == 10 && worst < 1e-6, "worst_rel_err=" + sci(worst));
    }
    {
        const auto& e = find_identity(catalog, "thm_multi_m3");
        double worst = 0;
        int accepted = 0;
        for (uint64_t attempt = 0; accepted < 3 && attempt < 4000; ++attempt) {
            auto A = sample_params(e, 7272, attempt);
            if (!A) continue;
            ++accepted;
            auto res = verify_identity(e, *A, ctrl, 1e-5);
            worst = std::max(worst, static_cast<double>(res.rel_err));
        }
        line(7, "multi-sum expansion m=3, 3 samples",
             accepted == 3 && worst < 1e-5, "worst_rel_err=" + sci(worst));
    }
}

// --- criterion 8: Askey-Wilson generating function ---------------------------
void criterion_8() {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "aw_gf");
    SumCtrl ctrl = default_ctrl<double>();
    double worst = 0;
    int accepted = 0;
    for (uint64_t attempt = 0; accepted < 40 && attempt < 4000; ++attempt) {
        auto A = sample_params(e, 818, attempt);
        if (!A) continue;
        ++accepted;
        auto res = verify_identity(e, *A, ctrl, 1e-8);
        worst = std::max(worst, static_cast<double>(res.rel_err));
    }
    // ten draws with real parameters and e_plus on the unit circle
    SweepRng rng(819, "acc-aw-real", 0);
    double conj_worst = 0;
    for (int k = 0; k < 10; ++k) {
        double th = rng.uniform01() * 3.0;
        AWPoint<double> pt{C(std::cos(th), std::sin(th)),
                           C(std::cos(th), -std::sin(th)),
                           C(rng.log_uniform(0.15, 0.7), 0),
                           C(rng.log_uniform(0.15, 0.7), 0),
                           C(rng.log_uniform(0.15, 0.7), 0),
                           C(rng.log_uniform(0.15, 0.7), 0),
                           QBase<double>(C(rng.log_uniform(0.25, 0.7), 0))};
        C x(rng.log_uniform(0.15, 0.7), 0);
        auto [l, r] = aw_gf_sides(x, pt, ctrl);
        worst = std::max(worst, relc(l.value, r.value));
        ++accepted;
        for (long long n : {1, 2, 4})
            conj_worst = std::max(conj_worst, std::abs(aw_poly(n, pt).imag()));
    }
    line(8, "Askey-Wilson generating function, 50 samples incl. 10 real",
         accepted == 50 && worst < 1e-8 && conj_worst < 1e-10,
         "worst_rel_err=" + sci(worst) +
             ", conj=" + sci(conj_worst));
}

// --- criterion 9: (a,d,x) symmetry of the Rogers-Fine variant ----------------
void criterion_9() {
    SumCtrl ctrl = default_ctrl<double>();
    SweepRng rng(909, "acc-symmetry", 0);
    double worst = 0;
    int samples = 0;
    while (samples < 100) {
        QBase<double> q(rand_disk(rng, 0.2, 0.8));
        C a = rand_disk(rng, 0.15, 0.85), c = rand_disk(rng, 0.15, 0.85);
        C d = rand_disk(rng, 0.15, 0.85), x = rand_disk(rng, 0.15, 0.85);
        try {
            C base = grfm_sub_rhs<double>(a, c, d, x, q, ctrl).value;
            const C perms[5][3] = {{a, x, d}, {d, a, x}, {d, x, a}, {x, a, d}, {x, d, a}};
            for (const auto& p : perms)
                worst = std::max(worst,
                                 relc(base, grfm_sub_rhs<double>(p[0], c, p[1], p[2], q, ctrl)
                                                .value));
        } catch (const PoleError&) {
            continue;  // resample near-pole draws
        }
        ++samples;
    }
    line(9, "symmetry of the Rogers-Fine variant under all 6 permutations",
         worst < 1e-10, "worst=" + sci(worst));
}

// --- criterion 10: report determinism ----------------------------------------
void criterion_10() {
    RunConfig cfg;
    cfg.samples = 1;
    cfg.seed = 10101;
    auto rep1 = run<double>(cfg);
    auto rep2 = run<double>(cfg);
    std::string j1 = report_to_json(rep1), j2 = report_to_json(rep2);
    line(10, "byte-identical reports for identical configs", j1 == j2 && rep1.all_pass,
         "bytes=" + std::to_string(j1.size()));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::printf("%d acceptance criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
