// SPDX-License-Identifier: Apache-2.0
//
// qseries command line: catalog listing, randomized verification sweeps, and
// inversion stress checks.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qseries/harness.hpp"
#include "qseries/inversion.hpp"

namespace {

using qseries::RunConfig;

template <class R>
int run_sweep(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    qseries::Report<R> report = qseries::run<R>(cfg);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& r : report.results) {
        std::cout << (r.pass() ? "pass" : "FAIL") << "  " << r.id
                  << "  accepted=" << r.accepted << " rejected=" << r.rejected
                  << " max_rel_err=" << qseries::real_traits<R>::to_string(r.max_rel_err);
        if (r.exhausted) std::cout << "  [sampler exhausted: over-constrained domain]";
        std::cout << "\n";
    }
    std::cout << (report.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "  ("
              << report.results.size() << " identities, wall " << dt << " s)\n";
    return report.all_pass ? 0 : 1;
}

int run_inversion(const std::string& kernel, long long size, double tol, uint64_t seed) {
    using R = double;
    using C = qseries::cplx<R>;
    qseries::SweepRng rng(seed, "inversion:" + kernel, 0);
    auto draw = [&rng](double lo, double hi) {
        double mod = rng.log_uniform(lo, hi);
        double ph = rng.uniform01() * 2.0 * std::numbers::pi;
        return C(mod * std::cos(ph), mod * std::sin(ph));
    };
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        if (kernel == "linear") {
            C a = draw(0.15, 0.85), c = draw(0.15, 0.85);
            qseries::QBase<R> q(draw(0.2, 0.8));
            auto nodes = qseries::geometric_nodes(a, c, q);
            auto kern = qseries::linear_kernel<R>();
            auto B = qseries::matrix_B(kern, nodes, size);
            auto Bi = qseries::matrix_Binv(kern, nodes, size);
            worst = std::max(worst, qseries::verify_inverse_pair(B, Bi));
        } else {
            C A = draw(0.15, 0.85);
            qseries::QBase<R> p(draw(0.2, 0.8)), q(draw(0.2, 0.8));
            auto [M, W] = qseries::gessel_stanton_pair(A, p, q, size);
            worst = std::max(worst, qseries::verify_inverse_pair(M, W));
        }
    }
    std::cout << "kernel=" << kernel << " size=" << size
              << " trials=20 worst_residual=" << worst << (worst < tol ? "  pass" : "  FAIL")
              << "\n";
    return worst < tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical q-series identity verification engine"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "print catalog ids and titles");

    RunConfig cfg;
    std::vector<CLI::Option*> tol_opts;
    auto add_sweep_opts = [&cfg, &tol_opts](CLI::App* cmd) {
        cmd->add_option("--samples", cfg.samples, "accepted samples per identity");
        cmd->add_option("--seed", cfg.seed, "sweep seed");
        tol_opts.push_back(cmd->add_option("--tol", cfg.tol,
                                           "pass threshold on relative error"));
        cmd->add_option("--max-terms", cfg.max_terms, "summation budget per series");
        cmd->add_option("--precision", cfg.precision, "double or extended")
            ->check(CLI::IsMember({"double", "extended"}));
        cmd->add_option("--report", cfg.report_path, "write a JSON report here");
    };

    auto* verify_cmd = app.add_subcommand("verify", "verify selected identities");
    verify_cmd->add_option("--id", cfg.identity_ids, "identity id (repeatable)")->required();
    add_sweep_opts(verify_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify the whole catalog");
    add_sweep_opts(sweep_cmd);

    std::string kernel = "linear";
    long long size = 16;
    double inv_tol = 1e-9;
    uint64_t inv_seed = 7;
    auto* inv_cmd = app.add_subcommand("inversion", "matrix inversion-pair stress check");
    inv_cmd->add_option("--kernel", kernel, "linear or gessel-stanton")
        ->check(CLI::IsMember({"linear", "gessel-stanton"}));
    inv_cmd->add_option("--size", size, "largest row index");
    inv_cmd->add_option("--tol", inv_tol, "pass threshold on the normalized residual");
    inv_cmd->add_option("--seed", inv_seed, "trial seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // config errors exit 2; --help exits 0
    }

    try {
        if (list_cmd->parsed()) {
            auto catalog = qseries::build_catalog<double>();
            for (const auto& e : catalog) std::cout << e.id << "\t" << e.title << "\n";
            return 0;
        }
        if (verify_cmd->parsed() || sweep_cmd->parsed()) {
            bool tol_given = false;
            for (auto* o : tol_opts) tol_given = tol_given || o->count() > 0;
            if (cfg.precision == "extended") {
                if (!tol_given) cfg.tol = 1e-20;
                return run_sweep<qseries::f128>(cfg);
            }
            return run_sweep<double>(cfg);
        }
        if (inv_cmd->parsed()) return run_inversion(kernel, size, inv_tol, inv_seed);
    } catch (const qseries::NotFoundError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const qseries::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
