// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>

#include "qseries/harness.hpp"

using namespace qseries;
using C = cplx<double>;

TEST_CASE("sampling is deterministic in (seed, id, attempt)") {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "rogers_fine");
    for (uint64_t attempt : {0ull, 3ull, 17ull}) {
        auto A1 = sample_params(e, 99, attempt);
        auto A2 = sample_params(e, 99, attempt);
        REQUIRE(A1.has_value() == A2.has_value());
        if (A1) {
            for (size_t i = 0; i < A1->scalars.size(); ++i) {
                CHECK(A1->scalars[i].first == A2->scalars[i].first);
                CHECK(A1->scalars[i].second == A2->scalars[i].second);
            }
        }
    }
    // different seeds decorrelate
    auto B1 = sample_params(e, 99, 0);
    auto B2 = sample_params(e, 100, 0);
    if (B1 && B2) CHECK(B1->scalars[0].second != B2->scalars[0].second);
}

TEST_CASE("accepted samples satisfy their constraints") {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "thm_main");
    int accepted = 0;
    for (uint64_t attempt = 0; attempt < 400; ++attempt) {
        auto A = sample_params(e, 5, attempt);
        if (!A) continue;
        ++accepted;
        CHECK(abs_c(A->at("x") * A->at("d")) < 0.9);
        CHECK(abs_c(A->at("x") * A->at("t")) < 0.9);
        CHECK(abs_c(A->at("t") / A->at("a")) < 0.9);
    }
    CHECK(accepted > 10);
}

TEST_CASE("pole-exclusion audit on the reciprocity sampler") {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "reciprocity");
    const C one(1, 0);
    long long accepted = 0;
    for (uint64_t attempt = 0; attempt < 10000 && accepted < 2000; ++attempt) {
        auto A = sample_params(e, 31, attempt);
        if (!A) continue;
        ++accepted;
        // no accepted sample may put a*q/c within 1e-3 of a q^{-m} pole
        C v = A->at("a") * A->at("q") / A->at("c");
        C q = A->at("q");
        C w = v;
        for (int m = 0; m <= 60; ++m) {
            CHECK(abs_c(one - w) > 1e-3);
            w *= q;
        }
    }
    CHECK(accepted >= 200);
}

TEST_CASE("verify_identity classifies adversarial samples without crashing") {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "q_gauss");
    SumCtrl ctrl = default_ctrl<double>();
    ctrl.max_terms = 300;
    Assignment<double> A;
    A.set("q", C(0.5, 0));
    A.set("c", C(0.5, 0));
    A.set("d", C(0.3, 0));
    A.set("x", C(0.999, 0));  // argument pushed to the unit circle
    auto res = verify_identity(e, A, ctrl, 1e-8);
    CHECK(res.status == SampleStatus::no_convergence);
}

TEST_CASE("run rejects unknown ids before evaluating anything") {
    RunConfig cfg;
    cfg.identity_ids = {"no_such_identity"};
    cfg.samples = 1;
    CHECK_THROWS_AS(run<double>(cfg), NotFoundError);
}

TEST_CASE("reports are byte-identical across runs and valid JSON") {
    RunConfig cfg;
    cfg.identity_ids = {"rogers_fine", "q_gauss", "partial_theta"};
    cfg.samples = 3;
    cfg.seed = 2718;
    auto r1 = run<double>(cfg);
    auto r2 = run<double>(cfg);
    std::string j1 = report_to_json(r1);
    std::string j2 = report_to_json(r2);
    CHECK(j1 == j2);
    CHECK(r1.all_pass);

    auto parsed = nlohmann::json::parse(j1);
    CHECK(parsed.contains("config"));
    CHECK(parsed.contains("results"));
    CHECK(parsed.contains("summary"));
    CHECK(parsed["results"].size() == 3);
    CHECK(parsed["summary"]["status"] == "pass");
    CHECK(parsed["config"]["seed"] == 2718);
}

TEST_CASE("extended-mode reports are deterministic too") {
    RunConfig cfg;
    cfg.identity_ids = {"rogers_fine", "partial_theta"};
    cfg.samples = 2;
    cfg.seed = 161803;
    cfg.tol = 1e-20;
    cfg.precision = "extended";
    auto r1 = run<f128>(cfg);
    auto r2 = run<f128>(cfg);
    CHECK(report_to_json(r1) == report_to_json(r2));
    CHECK(r1.all_pass);
}

TEST_CASE("rejected samples never count toward the quota") {
    auto catalog = build_catalog<double>();
    const auto& e = find_identity(catalog, "ramanujan_1psi1");
    RunConfig cfg;
    cfg.identity_ids = {e.id};
    cfg.samples = 5;
    cfg.seed = 4;
    auto rep = run<double>(cfg);
    REQUIRE(rep.results.size() == 1);
    CHECK(rep.results[0].accepted == 5);
    CHECK(rep.results[0].pass());
}
