// pinch: verification CLI for sharp algebraic curvature inequalities,
// model-geometry pinching functionals, and sharpness probes.
//
// Exit codes: 0 success, 1 mathematical violation found, 2 usage/config
// error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pinch/batch.hpp"
#include "pinch/json_io.hpp"
#include "pinch/models.hpp"
#include "pinch/sharpness.hpp"
#include "pinch/verifiers.hpp"
#include "pinch/version.hpp"

namespace {

using pinch::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void emit(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + opts.out_path);
    f << text;
}

// Configuration file (JSON) merged below built-in defaults; CLI flags win.
struct Defaults {
    std::vector<int> dims = {4, 5, 6};
    long samples = 1000;
    uint64_t seed = 42;
    int threads = 0;
    int restarts = 64;
    int iters = 500;
    double step_size = 0.05;
    double fd_step = 1e-5;
    double tolerance = 1e-9;
    std::string format = "text";
};

Defaults load_defaults(const std::string& config_path) {
    Defaults d;
    if (config_path.empty()) return d;
    std::ifstream f(config_path);
    if (!f) throw std::invalid_argument("cannot open config file: " + config_path);
    json j = json::parse(f);
    if (j.contains("dims")) d.dims = j["dims"].get<std::vector<int>>();
    if (j.contains("samples")) d.samples = j["samples"].get<long>();
    if (j.contains("seed")) d.seed = j["seed"].get<uint64_t>();
    if (j.contains("threads")) d.threads = j["threads"].get<int>();
    if (j.contains("restarts")) d.restarts = j["restarts"].get<int>();
    if (j.contains("iters")) d.iters = j["iters"].get<int>();
    if (j.contains("step_size")) d.step_size = j["step_size"].get<double>();
    if (j.contains("fd_step")) d.fd_step = j["fd_step"].get<double>();
    if (j.contains("tolerance")) d.tolerance = j["tolerance"].get<double>();
    if (j.contains("format")) d.format = j["format"].get<std::string>();
    return d;
}

std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") return argv[i + 1];
    if (const char* env = std::getenv("PINCH_CONFIG")) return env;
    return {};
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::vector<int>& dims, long samples, uint64_t seed, int threads,
               const OutputOptions& opts) {
    if (samples < 1) throw std::invalid_argument("verify: --samples must be >= 1");
    for (int n : dims)
        if (n < 4 || n > 10) throw std::invalid_argument("verify: dims must lie in {4,...,10}");

    pinch::RunManifest manifest;
    manifest.command = "verify";
    manifest.seed = seed;
    manifest.parameters = json{{"dims", dims}, {"samples", samples}};

    json inequalities = json::array();
    json identities = json::array();
    long violations = 0;
    for (int n : dims) {
        for (const auto& s : pinch::run_inequality_block(n, samples, seed, threads)) {
            violations += s.violations;
            inequalities.push_back(pinch::to_json(s, /*identity_suite=*/false));
        }
        for (const auto& s : pinch::run_identity_block(n, samples, seed, threads)) {
            violations += s.violations;
            identities.push_back(pinch::to_json(s, /*identity_suite=*/true));
        }
    }

    json report{{"manifest", pinch::to_json(manifest)},
                {"inequalities", inequalities},
                {"identities", identities},
                {"violations", violations}};

    if (opts.format == "json") {
        emit(opts, pinch::canonical_dump(report));
    } else if (opts.format == "text") {
        std::string out;
        out += "verify: dims=[";
        for (size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
        out += "] samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) + "\n";
        auto line = [&](const json& s, bool identity) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "  %-22s n=%-2d %s=%-12.5g violations=%ld\n",
                          s["id"].get<std::string>().c_str(), s["dim"].get<int>(),
                          identity ? "max_dev" : "max_ratio",
                          identity ? s["max_rel_dev"].get<double>() : s["max_ratio"].get<double>(),
                          static_cast<long>(s["violations"].get<long>()));
            out += buf;
        };
        for (const auto& s : inequalities) line(s, false);
        for (const auto& s : identities) line(s, true);
        out += violations == 0 ? "PASS: no violations\n"
                               : "FAIL: " + std::to_string(violations) + " violations\n";
        emit(opts, out);
    } else {
        throw std::invalid_argument("verify: unsupported format '" + opts.format + "'");
    }
    return violations == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// pinch (verdicts)
// ---------------------------------------------------------------------------

int cmd_pinch(const std::string& model_name, const std::string& theorem, const OutputOptions& opts) {
    const pinch::ModelGeometry model = pinch::model_by_name(model_name);
    const pinch::TheoremId id = pinch::theorem_from_string(theorem);
    const pinch::PinchingVerdict verdict = pinch::evaluate_pinching(model, id);

    pinch::RunManifest manifest;
    manifest.command = "pinch";
    manifest.parameters = json{{"model", model_name}, {"theorem", theorem}};
    json report{{"manifest", pinch::to_json(manifest)},
                {"verdict", pinch::to_json(verdict, model_name, model.dim)}};

    if (opts.format == "json") {
        emit(opts, pinch::canonical_dump(report));
    } else if (opts.format == "csv") {
        std::string out = "model,theorem,dim,lhs,rhs,ratio,holds,strict,degenerate\n";
        out += model_name + "," + theorem + "," + std::to_string(model.dim) + "," +
               fmt17(verdict.lhs) + "," + fmt17(verdict.rhs) + "," + fmt17(verdict.ratio()) + "," +
               (verdict.holds ? "true" : "false") + "," + (verdict.strict ? "true" : "false") + "," +
               (verdict.degenerate ? "true" : "false") + "\n";
        emit(opts, out);
    } else if (opts.format == "text") {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "%s on %s (n=%d): lhs=%.10g rhs=%.10g ratio=%.10g -> %s%s\n", theorem.c_str(),
                      model_name.c_str(), model.dim, verdict.lhs, verdict.rhs, verdict.ratio(),
                      verdict.holds ? "holds" : "fails",
                      verdict.degenerate ? " (degenerate: zero curvature)" : "");
        emit(opts, buf);
    } else {
        throw std::invalid_argument("pinch: unsupported format '" + opts.format + "'");
    }
    return kExitOk; // a failing pinch verdict is data, not an error
}

// ---------------------------------------------------------------------------
// sharpness
// ---------------------------------------------------------------------------

int cmd_sharpness(const pinch::SearchConfig& cfg, const OutputOptions& opts) {
    const pinch::SharpnessResult result = pinch::maximize_ratio(cfg);

    pinch::RunManifest manifest;
    manifest.command = "sharpness";
    manifest.seed = cfg.seed;
    manifest.parameters = json{{"ineq", pinch::to_string(cfg.inequality_id)},
                               {"dim", cfg.dim},
                               {"restarts", cfg.restarts},
                               {"iters", cfg.max_iters}};
    json report{{"manifest", pinch::to_json(manifest)}, {"sharpness", pinch::to_json(result, cfg)}};

    if (opts.format == "json") {
        emit(opts, pinch::canonical_dump(report));
    } else if (opts.format == "text") {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "sharpness %s n=%d: best_ratio=%.12g restarts=%d iters_used=%d converged=%s%s\n",
                      pinch::to_string(cfg.inequality_id), cfg.dim, result.best_ratio, cfg.restarts,
                      result.iters_used, result.converged ? "true" : "false",
                      result.violation_found ? "  VIOLATION FOUND" : "");
        emit(opts, buf);
    } else {
        throw std::invalid_argument("sharpness: unsupported format '" + opts.format + "'");
    }
    return result.violation_found ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

json constants_row(int n) {
    const auto pc = pinch::pinchein_coefficient(n);
    const double a = pinch::einstein_a(n);
    const double da = pinch::derive_a(n);
    return json{{"n", n},
                {"C", pinch::tachibana_c(n)},
                {"C_symbolic", pinch::tachibana_c_symbolic(n)},
                {"A", a},
                {"A_symbolic", pinch::einstein_a_symbolic(n)},
                {"derive_A", da},
                {"agreement", std::abs(da - a) <= 1e-14 * std::abs(a)},
                {"pinchein_coeff", pc.coeff},
                {"pinchein_below_A", pc.strictly_below_a},
                {"okumura_sharp", pinch::okumura_constant(n)},
                {"okumura_printed", pinch::okumura_constant_printed(n)}};
}

int cmd_constants(const OutputOptions& opts) {
    pinch::RunManifest manifest;
    manifest.command = "constants";
    json rows = json::array();
    for (int n = 4; n <= 12; ++n) rows.push_back(constants_row(n));

    if (opts.format == "json") {
        json report{{"manifest", pinch::to_json(manifest)}, {"constants", rows}};
        emit(opts, pinch::canonical_dump(report));
    } else if (opts.format == "csv") {
        std::string out =
            "n,C,C_symbolic,A,A_symbolic,derive_A,agreement,pinchein_coeff,pinchein_below_A,"
            "okumura_sharp,okumura_printed\n";
        for (const auto& r : rows) {
            out += std::to_string(r["n"].get<int>()) + "," + fmt17(r["C"].get<double>()) + "," +
                   r["C_symbolic"].get<std::string>() + "," + fmt17(r["A"].get<double>()) + "," +
                   r["A_symbolic"].get<std::string>() + "," + fmt17(r["derive_A"].get<double>()) +
                   "," + (r["agreement"].get<bool>() ? "true" : "false") + "," +
                   fmt17(r["pinchein_coeff"].get<double>()) + "," +
                   (r["pinchein_below_A"].get<bool>() ? "true" : "false") + "," +
                   fmt17(r["okumura_sharp"].get<double>()) + "," +
                   fmt17(r["okumura_printed"].get<double>()) + "\n";
        }
        emit(opts, out);
    } else if (opts.format == "text") {
        std::string out;
        for (const auto& r : rows) {
            char buf[512];
            std::snprintf(buf, sizeof(buf),
                          "n=%-3d C = %-22s (%s)\n      A = %-22s (%s)  derive_A agreement: %s\n"
                          "      pinchein_coeff = %-22s below A: %s\n",
                          r["n"].get<int>(), fmt17(r["C"].get<double>()).c_str(),
                          r["C_symbolic"].get<std::string>().c_str(),
                          fmt17(r["A"].get<double>()).c_str(),
                          r["A_symbolic"].get<std::string>().c_str(),
                          r["agreement"].get<bool>() ? "true" : "false",
                          fmt17(r["pinchein_coeff"].get<double>()).c_str(),
                          r["pinchein_below_A"].get<bool>() ? "true" : "false");
            out += buf;
        }
        emit(opts, out);
    } else {
        throw std::invalid_argument("constants: unsupported format '" + opts.format + "'");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// models
// ---------------------------------------------------------------------------

int cmd_models(const OutputOptions& opts) {
    pinch::RunManifest manifest;
    manifest.command = "models";
    json rows = json::array();
    for (const std::string& name : pinch::catalog_names())
        rows.push_back(pinch::model_summary_json(pinch::model_by_name(name)));

    if (opts.format == "json") {
        json report{{"manifest", pinch::to_json(manifest)}, {"models", rows}};
        emit(opts, pinch::canonical_dump(report));
    } else if (opts.format == "csv") {
        std::string out = "name,dim,volume,einstein,scalar_curv,ric0_norm_sq,weyl_norm_sq,euler_char\n";
        for (const auto& r : rows) {
            out += r["name"].get<std::string>() + "," + std::to_string(r["dim"].get<int>()) + "," +
                   fmt17(r["volume"].get<double>()) + "," +
                   (r["einstein"].get<bool>() ? "true" : "false") + "," +
                   fmt17(r["scalar_curv"].get<double>()) + "," +
                   fmt17(r["ric0_norm_sq"].get<double>()) + "," +
                   fmt17(r["weyl_norm_sq"].get<double>()) + "," +
                   (r.contains("euler_char") ? std::to_string(r["euler_char"].get<int>()) : "") +
                   "\n";
        }
        emit(opts, out);
    } else if (opts.format == "text") {
        std::string out;
        for (const auto& r : rows) {
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "%-6s n=%d R=%-8.5g |Ric0|^2=%-8.5g |W|^2=%-8.5g vol=%-10.6g chi=%d\n",
                          r["name"].get<std::string>().c_str(), r["dim"].get<int>(),
                          r["scalar_curv"].get<double>(), r["ric0_norm_sq"].get<double>(),
                          r["weyl_norm_sq"].get<double>(),
                          r["volume"].get<double>(), r["euler_char"].get<int>());
            out += buf;
        }
        emit(opts, out);
    } else {
        throw std::invalid_argument("models: unsupported format '" + opts.format + "'");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    Defaults defaults;
    try {
        defaults = load_defaults(find_config_path(argc, argv));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"Numerical verification of sharp algebraic curvature inequalities and "
                 "integral pinching functionals"};
    app.set_version_flag("--version", pinch::kVersion);
    app.require_subcommand(1);

    std::string config_path; // consumed in the pre-scan; declared so CLI11 accepts it
    app.add_option("--config", config_path, "JSON config file (or set PINCH_CONFIG)");

    OutputOptions opts;
    opts.format = defaults.format;
    app.add_option("--format", opts.format, "Output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", opts.out_path, "Write the report to a file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "Run every inequality and identity suite");
    std::vector<int> dims = defaults.dims;
    long samples = defaults.samples;
    uint64_t seed = defaults.seed;
    int threads = defaults.threads;
    verify->add_option("--dims", dims, "Dimensions to test (subset of 4..10)")->delimiter(',');
    verify->add_option("--samples", samples, "Random samples per checker per dimension");
    verify->add_option("--seed", seed, "Master seed");
    verify->add_option("--threads", threads, "Worker threads (0 = hardware)");

    // pinch
    auto* pinchcmd = app.add_subcommand("pinch", "Evaluate a pinching theorem on a catalog model");
    std::string model_name = "s4";
    std::string theorem = "thm_4d";
    pinchcmd->add_option("--model", model_name, "Model name: s4, s2xs2, t4, cp2, sn:<k>");
    pinchcmd->add_option("--theorem", theorem, "Theorem: thm_4d, cor_4d, thm_ndim, thm_einstein");

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "Maximize an inequality's LHS/RHS ratio");
    std::string ineq = "okumura";
    int dim = 4;
    int restarts = defaults.restarts;
    int iters = defaults.iters;
    double step_size = defaults.step_size;
    double fd_step = defaults.fd_step;
    double tolerance = defaults.tolerance;
    uint64_t sharp_seed = defaults.seed;
    int sharp_threads = defaults.threads;
    sharp->add_option("--ineq", ineq, "okumura, huisken, prop_alg, prop_alg_w0, tachibana, eigen_bound");
    sharp->add_option("--dim", dim, "Tensor dimension");
    sharp->add_option("--restarts", restarts, "Independent restarts");
    sharp->add_option("--iters", iters, "Max iterations per restart");
    sharp->add_option("--step", step_size, "Ascent step size");
    sharp->add_option("--fd-step", fd_step, "Finite-difference step");
    sharp->add_option("--tolerance", tolerance, "Violation tolerance on the ratio");
    sharp->add_option("--seed", sharp_seed, "Master seed");
    sharp->add_option("--threads", sharp_threads, "Worker threads (0 = hardware)");

    auto* constants = app.add_subcommand("constants", "Print the constants tables");
    auto* models = app.add_subcommand("models", "List catalog model geometries");
    (void)constants;
    (void)models;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(dims, samples, seed, threads, opts);
        if (pinchcmd->parsed()) return cmd_pinch(model_name, theorem, opts);
        if (sharp->parsed()) {
            pinch::SearchConfig cfg;
            cfg.inequality_id = pinch::check_id_from_string(ineq);
            cfg.dim = dim;
            cfg.restarts = restarts;
            cfg.max_iters = iters;
            cfg.step_size = step_size;
            cfg.fd_step = fd_step;
            cfg.tolerance = tolerance;
            cfg.seed = sharp_seed;
            cfg.threads = sharp_threads;
            return cmd_sharpness(cfg, opts);
        }
        if (constants->parsed()) return cmd_constants(opts);
        if (models->parsed()) return cmd_models(opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
