// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qseries/harness.hpp"

using namespace qseries;
using C = cplx<double>;

namespace {

double rel(const C& a, const C& b) {
    return abs_c(a - b) / std::max({abs_c(a), abs_c(b), 1.0});
}

Assignment<double> assign(std::initializer_list<std::pair<const char*, C>> vals,
                          std::initializer_list<std::pair<const char*, long long>> ints = {}) {
    Assignment<double> A;
    for (const auto& [k, v] : vals) A.set(k, v);
    for (const auto& [k, v] : ints) A.set_int(k, v);
    return A;
}

}  // namespace

TEST_CASE("omega_val") {
    QBase<double> q(C(0.5, 0));
    C x(0.3, 0), c(0.2, 0), d(0.4, 0);
    const C one(1, 0);

    C o0 = omega_val(0LL, x, c, d, q);
    C expect0 = (one - x * d) * (one - c * q.q * q.q) /
                ((one - c * d * q.q) * (one - x * q.q));
    CHECK(rel(o0, expect0) < 1e-14);

    CHECK(rel(omega_val(2LL, x, c, d, q), C(-0.0009334493128010534973320087, 0)) < 1e-14);

    CHECK_THROWS_AS(omega_val(1LL, x, c, C(0, 0), q), PoleError);
}

TEST_CASE("apply_delta structure") {
    QBase<double> q(C(0.5, 0));
    SeriesSpec<double> base{Variant::phi_tilde,
                            {Param<double>(C(0.3, 0)), Param<double>(C(0.4, 0))},
                            {Param<double>(C(0.6, 0)), Param<double>(C(0.7, 0))},
                            q,
                            C(0.2, 0)};
    DeltaOp<double> op{3, C(0.25, 0), C(0.5, 0)};
    auto out = apply_delta(op, base);
    CHECK(out.variant == Variant::phi);
    CHECK(out.numerator.size() == base.numerator.size() + 3);
    CHECK(out.denominator.size() == base.denominator.size() + 2);
    CHECK(out.numerator[1].tagged);
    CHECK(out.numerator[1].unit_coeff);
    CHECK(out.numerator[1].tag_exp == -3);
    CHECK(is_terminating(out).value() == 3);

    // n = 0: the prepended q^0 terminates the series at the first term
    auto out0 = apply_delta(DeltaOp<double>{0, C(0.25, 0), C(0.5, 0)}, base);
    SumCtrl ctrl = default_ctrl<double>();
    auto r = eval_series(out0, ctrl);
    CHECK(r.value == C(1, 0));
    CHECK(r.terminated_exactly);
}

TEST_CASE("delta-composed inner sums terminate at min(n_i)+1 exactly") {
    QBase<double> q(C(0.41, 0.13));
    SeriesSpec<double> base{Variant::phi_tilde,
                            {Param<double>(C(0.3, 0.1))},
                            {Param<double>(C(0.6, -0.2))},
                            q,
                            C(0.3, -0.1)};
    auto composed = apply_delta(DeltaOp<double>{3, C(0.25, 0.1), C(0.5, -0.1)},
                                apply_delta(DeltaOp<double>{5, C(0.2, 0), C(0.4, 0.2)}, base));
    CHECK(is_terminating(composed).value() == 3);
    SumCtrl ctrl = default_ctrl<double>();
    auto r = eval_series(composed, ctrl);
    CHECK(r.terminated_exactly);
    CHECK(r.terms_used == 4);  // min(5, 3) + 1
    CHECK(r.tail_estimate == 0.0);
}

TEST_CASE("wp_bailey_beta") {
    QBase<double> q(C(0.41, 0.13));
    C t(0.3, -0.25), b(0.6, 0.1);
    auto delta0 = [](long long k) { return k == 0 ? C(1, 0) : C(0, 0); };
    for (long long n = 0; n <= 5; ++n) {
        C expect = qpoch(b * t, q, n) * qpoch(b, q, n) /
                   (qpoch(q.q, q, n) * qpoch(t * q.q, q, n));
        CHECK(rel(wp_bailey_beta<double>(delta0, t, b, n, q), expect) < 1e-13);
    }
    auto any = [](long long k) { return C(0.3 + 0.1 * k, 0.1); };
    CHECK(rel(wp_bailey_beta<double>(any, t, b, 0, q), any(0)) < 1e-15);
}

TEST_CASE("thm_main degenerate t = 0") {
    QBase<double> q(C(0.5, 0));
    SumCtrl ctrl = default_ctrl<double>();
    C a(0.3, 0), c(0.2, 0), d(0.5, 0), x(0.4, 0);
    auto lhs = eval_thm_main_lhs<double>({}, {}, c, d, x, C(0, 0), q, ctrl);
    auto rhs = eval_thm_main_rhs<double>({}, {}, a, c, d, x, C(0, 0), q, ctrl);
    CHECK(rel(lhs.value, C(1.25, 0)) < 1e-12);
    CHECK(rel(lhs.value, rhs.value) < 1e-10);
}

TEST_CASE("catalog construction and lookup") {
    auto catalog = build_catalog<double>();
    CHECK(catalog.size() == 36);
    CHECK(find_identity(catalog, "rogers_fine").id == "rogers_fine");
    CHECK_THROWS_AS(find_identity(catalog, "nonsense"), NotFoundError);

    // ids are unique
    for (size_t i = 0; i < catalog.size(); ++i)
        for (size_t j = i + 1; j < catalog.size(); ++j)
            CHECK(catalog[i].id != catalog[j].id);
}

TEST_CASE("every catalog entry passes at its first accepted sample") {
    auto catalog = build_catalog<double>();
    SumCtrl ctrl = default_ctrl<double>();
    for (const auto& e : catalog) {
        CAPTURE(e.id);
        std::optional<Assignment<double>> A;
        for (uint64_t attempt = 0; attempt < 500 && !A; ++attempt)
            A = sample_params(e, 12345, attempt);
        REQUIRE(A.has_value());
        auto res = verify_identity(e, *A, ctrl, 1e-8);
        CAPTURE(res.note);
        CHECK(res.status == SampleStatus::pass);
    }
}

TEST_CASE("rogers_fine collapses at c = x") {
    auto catalog = build_catalog<double>();
    const auto& rf = find_identity(catalog, "rogers_fine");
    auto A = assign({{"q", C(0.5, 0)}, {"a", C(0.45, 0.2)}, {"c", C(0.5, 0.15)},
                     {"x", C(0.5, 0.15)}});
    auto res = verify_identity(rf, A, default_ctrl<double>(), 1e-8);
    CHECK(res.status == SampleStatus::pass);
    CHECK(res.rel_err < 1e-12);
    CHECK(rel(res.lhs, C(1, 0) - C(0.5, 0.15)) < 1e-12);
}

TEST_CASE("q_gauss at the real point of record") {
    auto catalog = build_catalog<double>();
    const auto& qg = find_identity(catalog, "q_gauss");
    auto A = assign({{"q", C(0.5, 0)}, {"c", C(0.5, 0)}, {"d", C(0.3, 0)},
                     {"x", C(0.4, 0)}});
    auto res = verify_identity(qg, A, default_ctrl<double>(), 1e-8);
    CHECK(res.status == SampleStatus::pass);
    CHECK(res.rel_err < 1e-10);
}

TEST_CASE("coefficient identity for the 6W5 family at m = 0, 1, 2") {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "vwp_6w5_coeff");
    for (long long m : {0, 1, 2}) {
        auto A = assign({{"q", C(0.41, 0.13)}, {"a", C(0.31, 0.2)}, {"c", C(0.3, -0.25)},
                         {"d", C(0.52, 0.1)}, {"x", C(0.5, 0.15)}},
                        {{"m", m}});
        auto res = verify_identity(e, A, default_ctrl<double>(), 1e-8);
        CHECK(res.status == SampleStatus::pass);
        CHECK(res.rel_err < 1e-10);
    }
}

TEST_CASE("dlidi collapse at c = x") {
    QBase<double> q(C(0.43, 0.11));
    SumCtrl ctrl = default_ctrl<double>();
    C x(0.5, 0.1), t(0.6, -0.2), a1(0.7, 0.3), b1(0.25, -0.4);
    auto lhs = eval_thm_dlidi_lhs<double>({a1}, {b1}, x, x, t, q, ctrl);
    auto rhs = eval_thm_dlidi_rhs<double>({a1}, {b1}, x, x, t, q, ctrl);
    CHECK(rel(lhs.value, C(1, 0)) < 1e-12);
    CHECK(rel(lhs.value, rhs.value) < 1e-12);
}

TEST_CASE("multi expansion reduces to the balanced-list entry at m = 1") {
    QBase<double> q(C(0.41, 0.13));
    SumCtrl ctrl = default_ctrl<double>();
    C a1(0.7, 0.3), b1(0.25, -0.4), c1(0.2, -0.3), d1(0.52, 0.1), x1(0.35, 0.1),
        t(0.3, -0.1);
    auto [lhs, rhs] = eval_multi<double>(1, {a1}, {b1}, {c1}, {d1}, {x1}, t, q, ctrl, 200);
    CHECK(rel(lhs.value, rhs.value) < 1e-10);

    // the m = 1 left side is exactly the balanced-list entry's left side
    auto catalog = build_catalog<double>();
    const auto& re = find_identity(catalog, "r_eq_s");
    auto A = assign({{"q", q.q}, {"a1", a1}, {"b1", b1}, {"c", c1}, {"d", d1},
                     {"x", x1}, {"t", t}});
    auto lhs2 = re.lhs(A, ctrl);
    CHECK(rel(lhs.value, lhs2.value) < 1e-12);
}

TEST_CASE("multi expansion two-sided at m = 2 and t = 0") {
    QBase<double> q(C(0.41, 0.13));
    SumCtrl ctrl = default_ctrl<double>();
    std::vector<C> cs = {C(0.2, -0.3), C(0.3, 0.2)};
    std::vector<C> ds = {C(0.4, 0.1), C(0.3, -0.2)};
    std::vector<C> xs = {C(0.35, 0.1), C(0.3, -0.12)};
    auto [lhs, rhs] = eval_multi<double>(2, {C(0.7, 0.3)}, {C(0.25, -0.4)}, cs, ds, xs,
                                         C(0.3, -0.1), q, ctrl, 60);
    CHECK(rel(lhs.value, rhs.value) < 1e-8);

    auto [l0, r0] = eval_multi<double>(2, {C(0.7, 0.3)}, {C(0.25, -0.4)}, cs, ds, xs,
                                       C(0, 0), q, ctrl, 60);
    CHECK(rel(l0.value, C(1, 0)) < 1e-14);
    CHECK(rel(l0.value, r0.value) < 1e-8);
}

TEST_CASE("limit chain: generalized Rogers-Fine descends to Rogers-Fine") {
    auto catalog = build_catalog<double>();
    const auto& grf = find_identity(catalog, "gen_rogers_fine");
    const auto& rf = find_identity(catalog, "rogers_fine");
    SumCtrl ctrl = default_ctrl<double>();
    C a(0.45, 0.2), c(0.3, -0.25), x(0.5, 0.15), q(0.41, 0.13);
    auto rf_val =
        rf.rhs(assign({{"q", q}, {"a", a}, {"c", c}, {"x", x}}), ctrl).value;
    auto at = [&](double d) {
        auto A = assign({{"q", q}, {"a", a}, {"c", c}, {"d", C(d, 0)}, {"x", x}});
        return grf.lhs(A, ctrl).value;
    };
    double e1 = abs_c(at(1e-6) - rf_val);
    double e2 = abs_c(at(5e-7) - rf_val);
    CHECK(e1 < 1e-4);
    CHECK(e1 / e2 >= 1.5);
}

TEST_CASE("limit chain: companion theorem descends to the Carlitz-type entry") {
    auto catalog = build_catalog<double>();
    const auto& dl = find_identity(catalog, "thm_dlidi");
    const auto& cg = find_identity(catalog, "carlitz_gen");
    SumCtrl ctrl = default_ctrl<double>();
    C q(0.41, 0.13), a1(0.7, 0.3), b1(0.25, -0.4), b2(0.6, 0.1), x(0.5, 0.15), t(0.4, -0.2);
    auto base = assign({{"q", q}, {"a1", a1}, {"b1", b1}, {"b2", b2}, {"x", x}, {"t", t}});
    C target = cg.rhs(base, ctrl).value;
    auto A = assign({{"q", q}, {"a1", a1}, {"b1", b1}, {"b2", b2}, {"c", C(1e-6, 0)},
                     {"x", x}, {"t", t}});
    CHECK(abs_c(dl.rhs(A, ctrl).value - target) < 1e-5);
    CHECK(abs_c(dl.lhs(A, ctrl).value - target) < 1e-5);
}

TEST_CASE("extended precision instantiation") {
    using X = cplx<f128>;
    QBase<f128> q(X(f128(0.5), f128(0)));
    // the frozen double-mode product value to its full double accuracy
    X v = qpoch_inf(X(f128(0.5), f128(0)), q);
    CHECK(std::abs(static_cast<double>(v.real()) - 0.2887880950866024) < 1e-16);

    auto catalog = build_catalog<f128>();
    const auto& rf = find_identity(catalog, "rogers_fine");
    std::optional<Assignment<f128>> A;
    for (uint64_t attempt = 0; attempt < 200 && !A; ++attempt)
        A = sample_params(rf, 2024, attempt);
    REQUIRE(A.has_value());
    auto res = verify_identity(rf, *A, default_ctrl<f128>(), 1e-20);
    CHECK(res.status == SampleStatus::pass);
    CHECK(static_cast<double>(res.rel_err) < 1e-20);
}

TEST_CASE("grfm_sub series side is symmetric in (a, d, x)") {
    QBase<double> q(C(0.41, 0.13));
    SumCtrl ctrl = default_ctrl<double>();
    C a(0.45, 0.2), c(0.3, -0.25), d(0.52, 0.1), x(0.5, 0.15);
    C base = grfm_sub_rhs<double>(a, c, d, x, q, ctrl).value;
    CHECK(rel(base, grfm_sub_rhs<double>(a, c, x, d, q, ctrl).value) < 1e-10);
    CHECK(rel(base, grfm_sub_rhs<double>(d, c, a, x, q, ctrl).value) < 1e-10);
    CHECK(rel(base, grfm_sub_rhs<double>(d, c, x, a, q, ctrl).value) < 1e-10);
    CHECK(rel(base, grfm_sub_rhs<double>(x, c, a, d, q, ctrl).value) < 1e-10);
    CHECK(rel(base, grfm_sub_rhs<double>(x, c, d, a, q, ctrl).value) < 1e-10);
}

TEST_CASE("pfaff_saalschutz_S covers the zero rows") {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "pfaff_saalschutz_S");
    // i = 0 with N = n >= 1 makes both sides vanish identically
    auto A = assign({{"q", C(0.41, 0.13)}, {"a", C(0.45, 0.2)}, {"c", C(0.3, -0.25)},
                     {"d", C(0.52, 0.1)}},
                    {{"i", 0}, {"N", 4}});
    auto res = verify_identity(e, A, default_ctrl<double>(), 1e-8);
    CHECK(res.status == SampleStatus::pass);
    CHECK(abs_c(res.lhs) < 1e-10);
    CHECK(abs_c(res.rhs) < 1e-10);
}
