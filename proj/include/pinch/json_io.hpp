#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <string>

#include <json.hpp>

#include "pinch/batch.hpp"
#include "pinch/models.hpp"
#include "pinch/report.hpp"
#include "pinch/sharpness.hpp"
#include "pinch/version.hpp"

namespace pinch {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Tensor serialization: flat row-major array with a {dim, rank} header.
// ---------------------------------------------------------------------------

inline json to_json(const SymMatrix& s) {
    return json{{"dim", s.dim()}, {"rank", 2}, {"data", s.data()}};
}

inline json to_json(const CurvTensor& t) {
    return json{{"dim", t.dim()}, {"rank", 4}, {"data", t.data()}};
}

inline SymMatrix sym_matrix_from_json(const json& j) {
    if (j.at("rank").get<int>() != 2) throw std::invalid_argument("expected rank-2 tensor");
    const int n = j.at("dim").get<int>();
    const auto data = j.at("data").get<std::vector<double>>();
    if (data.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("bad tensor payload");
    SymMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) s.set(i, k, data[static_cast<size_t>(i) * n + k]);
    return s;
}

inline CurvTensor curv_tensor_from_json(const json& j) {
    if (j.at("rank").get<int>() != 4) throw std::invalid_argument("expected rank-4 tensor");
    const int n = j.at("dim").get<int>();
    const auto data = j.at("data").get<std::vector<double>>();
    CurvTensor t(n);
    if (data.size() != t.data().size()) throw std::invalid_argument("bad tensor payload");
    size_t a = 0;
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) t.raw(i, jj, k, l) = data[a++];
    return t;
}

inline json to_json(const Witness& w) {
    json j = json::object();
    if (w.t) j["T"] = to_json(*w.t);
    if (w.w) j["W"] = to_json(*w.w);
    return j;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json to_json(const VerificationReport& r) {
    json j{{"id", to_string(r.id)},     {"dim", r.dim},
           {"lhs", r.lhs},              {"rhs", r.rhs},
           {"ratio", r.ratio},          {"pass", r.pass},
           {"tolerance", r.tolerance},  {"kind", r.is_identity ? "identity" : "inequality"}};
    if (r.is_identity) j["deviation"] = r.deviation;
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

inline json to_json(const SuiteResult& s, bool identity_suite) {
    json j{{"id", to_string(s.id)},
           {"dim", s.dim},
           {"samples", s.samples},
           {"violations", s.violations}};
    if (identity_suite)
        j["max_rel_dev"] = s.max_metric;
    else
        j["max_ratio"] = s.max_metric;
    if (s.worst) j["worst_witness"] = to_json(*s.worst);
    return j;
}

inline json to_json(const PinchingVerdict& v, const std::string& model_name, int dim) {
    return json{{"theorem", to_string(v.theorem_id)},
                {"model", model_name},
                {"dim", dim},
                {"lhs", v.lhs},
                {"rhs", v.rhs},
                {"ratio", v.ratio()},
                {"holds", v.holds},
                {"strict", v.strict},
                {"degenerate", v.degenerate}};
}

inline json to_json(const SharpnessResult& r, const SearchConfig& cfg) {
    json j{{"inequality", to_string(cfg.inequality_id)},
           {"dim", cfg.dim},
           {"restarts", cfg.restarts},
           {"max_iters", cfg.max_iters},
           {"step_size", cfg.step_size},
           {"fd_step", cfg.fd_step},
           {"tolerance", cfg.tolerance},
           {"best_ratio", r.best_ratio},
           {"iters_used", r.iters_used},
           {"converged", r.converged},
           {"violation_found", r.violation_found},
           {"best_restart", r.best_restart}};
    json argmax = json::object();
    if (r.argmax_t) argmax["T"] = to_json(*r.argmax_t);
    if (r.argmax_w) argmax["W"] = to_json(*r.argmax_w);
    j["argmax"] = argmax;
    return j;
}

inline json model_summary_json(const ModelGeometry& m) {
    json j{{"name", m.name},
           {"dim", m.dim},
           {"volume", m.volume},
           {"einstein", m.einstein},
           {"scalar_curv", m.scalar()},
           {"ric0_norm_sq", m.ric0_norm_sq()},
           {"weyl_norm_sq", m.weyl_norm_sq()}};
    if (m.euler_char) j["euler_char"] = *m.euler_char;
    if (m.lambda) j["lambda"] = *m.lambda;
    if (m.einstein && m.scalar() > 0.0) j["yamabe"] = yamabe_einstein(m);
    return j;
}

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------

inline std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Every emitted report embeds its manifest; identical manifests (minus
/// timestamp) produce identical numerical payloads.
struct RunManifest {
    std::string command;
    json parameters = json::object();
    uint64_t seed = 0;
    std::string timestamp = iso8601_utc_now();
    std::string tool_version = kVersion;
};

inline json to_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"parameters", m.parameters},
                {"seed", m.seed},
                {"timestamp", m.timestamp},
                {"tool_version", m.tool_version}};
}

/// Canonical serialization: nlohmann's sorted keys and shortest
/// round-tripping number format, so parse-then-dump is byte-identical.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace pinch
