#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pinch/curv_tensor.hpp"
#include "pinch/decomposition.hpp"
#include "pinch/random_tensors.hpp"
#include "pinch/report.hpp"
#include "pinch/sym_matrix.hpp"
#include "pinch/two_form.hpp"
#include "pinch/verifiers.hpp"

namespace pinch {

struct SearchConfig {
    CheckId inequality_id = CheckId::okumura;
    int dim = 4;
    int restarts = 64;
    int max_iters = 500;
    double step_size = 0.05;
    double fd_step = 1e-5;
    uint64_t seed = 1;
    double tolerance = 1e-9;
    int threads = 0; // 0 = hardware concurrency
    bool record_trace = false;

    void validate() const {
        if (restarts < 1 || max_iters < 1) throw std::invalid_argument("SearchConfig: restarts and max_iters must be >= 1");
        if (step_size <= 0.0 || fd_step <= 0.0) throw std::invalid_argument("SearchConfig: step sizes must be positive");
        if (dim < 3) throw std::invalid_argument("SearchConfig: dim must be >= 3");
    }
};

struct SharpnessResult {
    double best_ratio = 0.0;
    std::optional<SymMatrix> argmax_t;
    std::optional<CurvTensor> argmax_w;
    int iters_used = 0;
    bool converged = false;
    bool violation_found = false;
    int best_restart = -1;
    std::vector<double> trace; // best-so-far per iteration when recorded
};

/// Analytic equality witness diag(1,...,1,-(n-1)), unit-normalized. Only the
/// Okumura-type targets have a registered witness.
inline SymMatrix equality_witness(CheckId id, int n) {
    if (id != CheckId::okumura && id != CheckId::prop_alg_w0)
        throw std::invalid_argument("equality_witness: no analytic witness registered");
    std::vector<double> d(static_cast<size_t>(n), 1.0);
    d.back() = -(n - 1.0);
    SymMatrix t = SymMatrix::diag(d);
    t *= 1.0 / std::sqrt(static_cast<double>(n) * (n - 1));
    return t;
}

namespace detail {

/// Optimization coordinates for one inequality: a trace-free symmetric block
/// and/or a Weyl block. The Weyl block is parametrized by the upper triangle
/// of the symmetric two-form pair matrix; unpacking runs the Bianchi and
/// Weyl projections, so any coordinate vector maps onto the constraint
/// manifold (up to scale).
struct SearchSpace {
    int n = 0;
    bool use_t = false;
    bool use_w = false;

    int t_coords() const { return use_t ? n * (n + 1) / 2 : 0; }
    int w_coords() const {
        const int nn = n * (n - 1) / 2;
        return use_w ? nn * (nn + 1) / 2 : 0;
    }
    int total_coords() const { return t_coords() + w_coords(); }

    SymMatrix unpack_t(const std::vector<double>& x) const {
        SymMatrix t(n);
        int a = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) t.set(i, j, x[static_cast<size_t>(a++)]);
        return traceless(t);
    }

    CurvTensor unpack_w(const std::vector<double>& x) const {
        const int nn = n * (n - 1) / 2;
        // Pair-index lookup tables.
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<size_t>(nn));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

        Eigen::MatrixXd b(nn, nn);
        int a = t_coords();
        for (int p = 0; p < nn; ++p)
            for (int q = p; q < nn; ++q) {
                const double v = x[static_cast<size_t>(a++)];
                b(p, q) = v;
                b(q, p) = v;
            }
        CurvTensor t(n);
        for (int p = 0; p < nn; ++p)
            for (int q = 0; q < nn; ++q) {
                const auto [i, j] = pairs[static_cast<size_t>(p)];
                const auto [k, l] = pairs[static_cast<size_t>(q)];
                const double v = b(p, q);
                t.raw(i, j, k, l) = v;
                t.raw(j, i, k, l) = -v;
                t.raw(i, j, l, k) = -v;
                t.raw(j, i, l, k) = v;
            }
        return weyl_projection(bianchi_projection(t));
    }

    /// Canonical coordinates of a (projected, normalized) pair of tensors.
    void pack(const std::optional<SymMatrix>& t, const std::optional<CurvTensor>& w,
              std::vector<double>& x) const {
        x.assign(static_cast<size_t>(total_coords()), 0.0);
        int a = 0;
        if (use_t) {
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) x[static_cast<size_t>(a++)] = (*t)(i, j);
        }
        if (use_w) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = k + 1; l < n; ++l) {
                            if (k < i || (k == i && l < j)) continue;
                            x[static_cast<size_t>(a++)] = (*w)(i, j, k, l);
                        }
        }
    }
};

inline SearchSpace search_space_for(CheckId id, int n) {
    SearchSpace s;
    s.n = n;
    switch (id) {
        case CheckId::okumura:
        case CheckId::okumura_printed:
        case CheckId::prop_alg_w0: s.use_t = true; break;
        case CheckId::tachibana:
        case CheckId::eigen_bound: s.use_w = true; break;
        case CheckId::huisken:
        case CheckId::prop_alg:
            s.use_t = true;
            s.use_w = true;
            break;
        default: throw std::invalid_argument("maximize_ratio: inequality has no search space");
    }
    return s;
}

/// lhs/rhs of the target inequality on already-projected tensors; 0 for
/// degenerate (zero-norm) inputs.
inline double sharpness_ratio(CheckId id, int n, const std::optional<SymMatrix>& t,
                              const std::optional<CurvTensor>& w) {
    const double t_sq = t ? frob_norm_sq(*t) : 0.0;
    const double w_sq = w ? frob_norm_sq(*w) : 0.0;
    switch (id) {
        case CheckId::okumura: {
            if (t_sq == 0.0) return 0.0;
            return std::abs(cubic_trace(*t)) / (okumura_constant(n) * std::pow(t_sq, 1.5));
        }
        case CheckId::okumura_printed: {
            if (t_sq == 0.0) return 0.0;
            return std::abs(cubic_trace(*t)) / (okumura_constant_printed(n) * std::pow(t_sq, 1.5));
        }
        case CheckId::prop_alg_w0: {
            if (t_sq == 0.0) return 0.0;
            const double lhs = std::abs(2.0 / (n - 2.0) * cubic_trace(*t));
            const double rhs = std::sqrt((n - 2.0) / (2.0 * (n - 1.0))) *
                               std::sqrt(8.0 / (static_cast<double>(n) * (n - 2))) *
                               std::pow(t_sq, 1.5);
            return lhs / rhs;
        }
        case CheckId::huisken: {
            if (t_sq == 0.0 || w_sq == 0.0) return 0.0;
            const double lhs = std::abs(weyl_ricci_contraction(*w, *t));
            return lhs / (std::sqrt((n - 2.0) / (2.0 * (n - 1.0))) * std::sqrt(w_sq) * t_sq);
        }
        case CheckId::prop_alg: {
            if (t_sq == 0.0) return 0.0;
            const double lhs =
                std::abs(-weyl_ricci_contraction(*w, *t) + 2.0 / (n - 2.0) * cubic_trace(*t));
            const double rhs =
                std::sqrt((n - 2.0) / (2.0 * (n - 1.0))) *
                std::sqrt(w_sq + 8.0 / (static_cast<double>(n) * (n - 2)) * t_sq) * t_sq;
            return rhs == 0.0 ? 0.0 : lhs / rhs;
        }
        case CheckId::tachibana: {
            if (w_sq == 0.0) return 0.0;
            const double lhs = 2.0 * weyl_cubic_1(*w) + 0.5 * weyl_cubic_2(*w);
            return lhs / (tachibana_c(n) * std::pow(w_sq, 1.5));
        }
        case CheckId::eigen_bound: {
            if (w_sq == 0.0) return 0.0;
            const double mu = as_two_form_operator(*w).max_eigenvalue();
            return 2.0 * mu /
                   (std::sqrt((n - 2.0) * (n + 1.0) / (static_cast<double>(n) * (n - 1.0))) *
                    std::sqrt(w_sq));
        }
        default: throw std::invalid_argument("sharpness_ratio: unsupported inequality");
    }
}

struct RestartOutcome {
    double best = -1.0;
    std::vector<double> best_x;
    int iters = 0;
    bool converged = false;
    bool violation = false;
    std::vector<double> trace;
};

} // namespace detail

/// Projected gradient ascent on the LHS/RHS ratio over unit-norm tensors
/// with the right symmetries. Restarts run independently (concurrently) from
/// seeds mix_seed(seed, restart); the best ratio wins, lowest restart index
/// breaking ties, so results are deterministic for a fixed config.
inline SharpnessResult maximize_ratio(const SearchConfig& cfg) {
    cfg.validate();
    const detail::SearchSpace space = detail::search_space_for(cfg.inequality_id, cfg.dim);

    auto unpack_t = [&](const std::vector<double>& x) -> std::optional<SymMatrix> {
        if (!space.use_t) return std::nullopt;
        return space.unpack_t(x);
    };
    auto unpack_w = [&](const std::vector<double>& x) -> std::optional<CurvTensor> {
        if (!space.use_w) return std::nullopt;
        return space.unpack_w(x);
    };

    // Ratio as a function of raw coordinates (projections applied inside).
    auto f = [&](const std::vector<double>& x) {
        return detail::sharpness_ratio(cfg.inequality_id, cfg.dim, unpack_t(x), unpack_w(x));
    };

    // Canonical on-manifold representative: project each block and normalize
    // to its unit sphere. Returns false for degenerate (zero-norm) points.
    auto reproject = [&](std::vector<double>& x) {
        std::optional<SymMatrix> t = unpack_t(x);
        std::optional<CurvTensor> w = unpack_w(x);
        if (space.use_t) {
            const double norm = std::sqrt(frob_norm_sq(*t));
            if (norm < 1e-8) return false;
            *t *= 1.0 / norm;
        }
        if (space.use_w) {
            const double norm = std::sqrt(frob_norm_sq(*w));
            if (norm < 1e-8) return false;
            *w *= 1.0 / norm;
        }
        space.pack(t, w, x);
        return true;
    };

    const int total = space.total_coords();
    auto run_restart = [&](int restart_index) {
        detail::RestartOutcome out;
        TensorRng rng(mix_seed(cfg.seed, static_cast<uint64_t>(restart_index)));
        std::vector<double> x(static_cast<size_t>(total));

        // Degenerate starts are rejected and resampled.
        for (int attempt = 0; attempt < 64; ++attempt) {
            for (double& v : x) v = rng.normal();
            if (reproject(x)) break;
        }

        double fx = f(x);
        out.best = fx;
        out.best_x = x;
        if (cfg.record_trace) out.trace.push_back(fx);

        std::vector<double> grad(static_cast<size_t>(total));
        std::vector<double> probe(static_cast<size_t>(total));
        int flat_streak = 0;
        for (int it = 1; it <= cfg.max_iters; ++it) {
            out.iters = it;
            probe = x;
            for (int c = 0; c < total; ++c) {
                const double orig = x[static_cast<size_t>(c)];
                probe[static_cast<size_t>(c)] = orig + cfg.fd_step;
                const double up = f(probe);
                probe[static_cast<size_t>(c)] = orig - cfg.fd_step;
                const double down = f(probe);
                probe[static_cast<size_t>(c)] = orig;
                grad[static_cast<size_t>(c)] = (up - down) / (2.0 * cfg.fd_step);
            }
            for (int c = 0; c < total; ++c)
                x[static_cast<size_t>(c)] += cfg.step_size * grad[static_cast<size_t>(c)];
            if (!reproject(x)) break;

            const double fnew = f(x);
            if (fnew > out.best) {
                out.best = fnew;
                out.best_x = x;
            }
            if (cfg.record_trace) out.trace.push_back(out.best);
            if (out.best > 1.0 + cfg.tolerance) {
                out.violation = true;
                return out;
            }
            if (std::abs(fnew - fx) <= 1e-13 * std::max(1.0, std::abs(fnew)))
                ++flat_streak;
            else
                flat_streak = 0;
            fx = fnew;
            if (flat_streak >= 10) {
                out.converged = true;
                break;
            }
        }
        return out;
    };

    std::vector<detail::RestartOutcome> outcomes(static_cast<size_t>(cfg.restarts));
    int workers = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, cfg.restarts));
    if (workers == 1) {
        for (int i = 0; i < cfg.restarts; ++i) outcomes[static_cast<size_t>(i)] = run_restart(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int wi = 0; wi < workers; ++wi)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < cfg.restarts; i = next.fetch_add(1))
                    outcomes[static_cast<size_t>(i)] = run_restart(i);
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic reduce: max ratio, lowest restart index wins ties.
    int best_index = 0;
    for (int i = 1; i < cfg.restarts; ++i)
        if (outcomes[static_cast<size_t>(i)].best > outcomes[static_cast<size_t>(best_index)].best)
            best_index = i;

    const detail::RestartOutcome& win = outcomes[static_cast<size_t>(best_index)];
    SharpnessResult result;
    result.best_ratio = win.best;
    result.iters_used = win.iters;
    result.converged = win.converged;
    result.best_restart = best_index;
    result.trace = win.trace;
    for (const auto& o : outcomes) result.violation_found |= o.violation;
    if (!win.best_x.empty()) {
        if (space.use_t) result.argmax_t = space.unpack_t(win.best_x);
        if (space.use_w) result.argmax_w = space.unpack_w(win.best_x);
    }
    return result;
}

} // namespace pinch
