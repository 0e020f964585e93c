// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "qseries/catalog.hpp"
#include "qseries/rng.hpp"
#include "qseries/version.hpp"

namespace qseries {

struct RunConfig {
    std::vector<std::string> identity_ids;  // empty = whole catalog
    long long samples = 50;
    uint64_t seed = 20240915;
    double tol = 1e-8;
    long long max_terms = 4000;
    std::string precision = "double";  // "double" | "extended"
    std::string report_path;           // empty = no file
};

enum class SampleStatus { pass, fail, rejected_sample, no_convergence };

inline const char* to_string(SampleStatus s) {
    switch (s) {
        case SampleStatus::pass: return "pass";
        case SampleStatus::fail: return "fail";
        case SampleStatus::rejected_sample: return "rejected_sample";
        default: return "no_convergence";
    }
}

template <class R>
struct ComparisonResult {
    Assignment<R> assignment;
    cplx<R> lhs{}, rhs{};
    R rel_err{0};
    R lhs_tail{0}, rhs_tail{0};
    SampleStatus status = SampleStatus::fail;
    std::string note;
};

template <class R>
struct IdentityReport {
    std::string id;
    std::string title;
    long long accepted = 0;
    long long rejected = 0;
    long long failures = 0;
    R max_rel_err{0};
    R mean_rel_err{0};
    bool exhausted = false;
    ComparisonResult<R> worst;
    bool pass() const { return !exhausted && failures == 0 && accepted > 0; }
};

namespace detail {

/// Rejects values too close to base^m for m in [m_lo, m_hi].
template <class R>
bool probe_clear(const PoleProbe<R>& pr, double margin) {
    const cplx<R> one(R(1), R(0));
    R m = real_traits<R>::from_double(margin);
    if (pr.m_lo >= 0) {
        cplx<R> w = pr.value * pow_int(pr.base, pr.m_lo);
        for (int k = pr.m_lo; k <= pr.m_hi; ++k) {
            if (abs_c(one - w) <= m) return false;
            if (abs_c(w) < R(1e-4)) break;  // further powers only shrink it
            w *= pr.base;
        }
        return true;
    }
    cplx<R> binv = one / pr.base;
    cplx<R> w = pr.value * binv;
    for (int k = -1; k >= pr.m_lo; --k) {
        if (abs_c(one - w) <= m) return false;
        if (abs_c(w) > R(1e4)) break;  // further negative powers only grow it
        w *= binv;
    }
    return true;
}

}  // namespace detail

/// Draw one assignment for the identity; nullopt = rejected draw. The draw
/// consumes a fixed RNG stream keyed by (seed, identity id, attempt index),
/// so acceptance decisions never shift later draws.
template <class R>
std::optional<Assignment<R>> sample_params(const Identity<R>& identity, uint64_t seed,
                                           uint64_t attempt_index) {
    SweepRng rng(seed, identity.id, attempt_index);
    Assignment<R> A;
    for (const auto& ps : identity.domain.params) {
        switch (ps.kind) {
            case DrawKind::complex_disk: {
                double mod = rng.log_uniform(ps.lo_mod, ps.hi_mod);
                double phase = rng.uniform01() * 2.0 * std::numbers::pi;
                A.set(ps.name, cplx_from<R>(mod * std::cos(phase), mod * std::sin(phase)));
                break;
            }
            case DrawKind::unit_circle: {
                double phase = rng.uniform01() * 2.0 * std::numbers::pi;
                A.set(ps.name, cplx_from<R>(std::cos(phase), std::sin(phase)));
                break;
            }
            case DrawKind::integer:
                A.set_int(ps.name, rng.uniform_int(ps.int_lo, ps.int_hi));
                break;
        }
    }
    for (const auto& [name, fn] : identity.domain.derived) A.set(name, fn(A));
    for (const auto& [label, ok] : identity.domain.constraints)
        if (!ok(A)) return std::nullopt;
    if (identity.domain.probes) {
        for (const auto& pr : identity.domain.probes(A))
            if (!detail::probe_clear(pr, 1e-3)) return std::nullopt;
    }
    return A;
}

/// Evaluate both sides at the assignment and classify the sample. Evaluation
/// errors become statuses; a sweep never aborts on a bad point.
template <class R>
ComparisonResult<R> verify_identity(const Identity<R>& identity, const Assignment<R>& A,
                                    const SumCtrl& ctrl, double tol) {
    ComparisonResult<R> res;
    res.assignment = A;
    try {
        SumResult<R> l = identity.lhs(A, ctrl);
        SumResult<R> r = identity.rhs(A, ctrl);
        res.lhs = l.value;
        res.rhs = r.value;
        R denom = std::max({abs_c(l.value), abs_c(r.value), R(1)});
        res.rel_err = abs_c(l.value - r.value) / denom;
        res.lhs_tail = l.tail_estimate / std::max(abs_c(l.value), R(1));
        res.rhs_tail = r.tail_estimate / std::max(abs_c(r.value), R(1));
        R t = real_traits<R>::from_double(tol);
        bool tails_ok = res.lhs_tail < t / R(10) && res.rhs_tail < t / R(10);
        res.status = (res.rel_err < t && tails_ok) ? SampleStatus::pass : SampleStatus::fail;
    } catch (const PoleError& e) {
        res.status = SampleStatus::rejected_sample;
        res.note = e.what();
    } catch (const NoConvergence& e) {
        res.status = SampleStatus::no_convergence;
        res.note = e.what();
    } catch (const OverflowError& e) {
        res.status = SampleStatus::no_convergence;
        res.note = e.what();
    }
    return res;
}

/// Sweep one identity: accept `samples` assignments (skipping rejections)
/// and verify each. Gives up after 1000 consecutive rejections.
template <class R>
IdentityReport<R> sweep_identity(const Identity<R>& identity, const RunConfig& cfg) {
    IdentityReport<R> rep;
    rep.id = identity.id;
    rep.title = identity.title;
    SumCtrl ctrl = default_ctrl<R>();
    ctrl.max_terms = cfg.max_terms;

    uint64_t attempt = 0;
    long long consecutive_rejects = 0;
    R err_sum(0);
    while (rep.accepted < cfg.samples) {
        auto A = sample_params(identity, cfg.seed, attempt++);
        if (!A) {
            ++rep.rejected;
            if (++consecutive_rejects >= 1000) {
                rep.exhausted = true;
                break;
            }
            continue;
        }
        ComparisonResult<R> res = verify_identity(identity, *A, ctrl, cfg.tol);
        if (res.status == SampleStatus::rejected_sample) {
            ++rep.rejected;
            if (++consecutive_rejects >= 1000) {
                rep.exhausted = true;
                break;
            }
            continue;
        }
        consecutive_rejects = 0;
        ++rep.accepted;
        if (res.status != SampleStatus::pass) ++rep.failures;
        if (res.status == SampleStatus::pass || res.status == SampleStatus::fail) {
            err_sum += res.rel_err;
            if (res.rel_err >= rep.max_rel_err) {
                rep.max_rel_err = res.rel_err;
                rep.worst = res;
            }
        } else if (rep.failures == 1) {
            rep.worst = res;
        }
    }
    rep.mean_rel_err = rep.accepted > 0 ? err_sum / R(rep.accepted) : R(0);
    return rep;
}

template <class R>
struct Report {
    RunConfig config;
    std::vector<IdentityReport<R>> results;
    bool all_pass = true;
};

template <class R>
std::string report_to_json(const Report<R>& rep);

/// Full sweep over the configured identities (empty list = whole catalog).
/// Unknown ids fail up front; the report file, when requested, is written
/// before returning.
template <class R>
Report<R> run(const RunConfig& cfg) {
    auto catalog = build_catalog<R>();
    std::vector<const Identity<R>*> todo;
    if (cfg.identity_ids.empty()) {
        for (const auto& e : catalog) todo.push_back(&e);
    } else {
        for (const auto& id : cfg.identity_ids) todo.push_back(&find_identity(catalog, id));
    }
    Report<R> report;
    report.config = cfg;
    for (const auto* e : todo) {
        report.results.push_back(sweep_identity(*e, cfg));
        if (!report.results.back().pass()) report.all_pass = false;
    }
    if (!cfg.report_path.empty()) {
        std::ofstream out(cfg.report_path, std::ios::binary);
        if (!out) throw DomainError("cannot open report path: " + cfg.report_path);
        out << report_to_json(report);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Report serialization: one JSON object with keys config, results, summary.
// All floating values are decimal strings at full precision, so the bytes
// are a pure function of (config, code version).
// ---------------------------------------------------------------------------

namespace detail {

inline void json_escape(std::ostream& os, std::string_view s) {
    os << '"';
    for (char c : s) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << '"';
}

template <class R>
void json_assignment(std::ostream& os, const Assignment<R>& A) {
    os << "{";
    bool first = true;
    for (const auto& [name, v] : A.scalars) {
        if (!first) os << ", ";
        first = false;
        json_escape(os, name);
        os << ": ";
        json_escape(os, cplx_to_string(v));
    }
    for (const auto& [name, v] : A.ints) {
        if (!first) os << ", ";
        first = false;
        json_escape(os, name);
        os << ": " << v;
    }
    os << "}";
}

}  // namespace detail

template <class R>
std::string report_to_json(const Report<R>& rep) {
    using T = real_traits<R>;
    std::ostringstream os;
    const RunConfig& c = rep.config;
    os << "{\n  \"config\": {\n    \"identities\": [";
    for (size_t i = 0; i < c.identity_ids.size(); ++i) {
        if (i) os << ", ";
        detail::json_escape(os, c.identity_ids[i]);
    }
    os << "],\n    \"samples\": " << c.samples << ",\n    \"seed\": " << c.seed
       << ",\n    \"tol\": " << '"' << real_traits<double>::to_string(c.tol) << '"'
       << ",\n    \"max_terms\": " << c.max_terms << ",\n    \"precision\": ";
    detail::json_escape(os, c.precision);
    os << ",\n    \"library_version\": ";
    detail::json_escape(os, library_version);
    os << "\n  },\n  \"results\": [\n";
    for (size_t i = 0; i < rep.results.size(); ++i) {
        const auto& r = rep.results[i];
        os << "    {\"id\": ";
        detail::json_escape(os, r.id);
        os << ", \"status\": " << (r.pass() ? "\"pass\"" : "\"fail\"")
           << ", \"accepted\": " << r.accepted << ", \"rejected\": " << r.rejected
           << ", \"failures\": " << r.failures << ", \"max_rel_err\": ";
        detail::json_escape(os, T::to_string(r.max_rel_err));
        os << ", \"mean_rel_err\": ";
        detail::json_escape(os, T::to_string(r.mean_rel_err));
        os << ", \"worst\": {\"rel_err\": ";
        detail::json_escape(os, T::to_string(r.worst.rel_err));
        os << ", \"status\": ";
        detail::json_escape(os, to_string(r.worst.status));
        os << ", \"params\": ";
        detail::json_assignment(os, r.worst.assignment);
        os << "}}";
        os << (i + 1 < rep.results.size() ? ",\n" : "\n");
    }
    long long passed = 0;
    for (const auto& r : rep.results) passed += r.pass() ? 1 : 0;
    os << "  ],\n  \"summary\": {\"total\": " << rep.results.size()
       << ", \"passed\": " << passed
       << ", \"failed\": " << (static_cast<long long>(rep.results.size()) - passed)
       << ", \"status\": " << (rep.all_pass ? "\"pass\"" : "\"fail\"") << "}\n}\n";
    return os.str();
}

}  // namespace qseries
