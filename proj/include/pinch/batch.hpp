#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "pinch/random_tensors.hpp"
#include "pinch/report.hpp"
#include "pinch/verifiers.hpp"

namespace pinch {

/// Aggregate over one seeded sample stream for one check at one dimension.
/// metric is the LHS/RHS ratio for inequalities and the relative deviation
/// for identities; worst carries the extremal violating sample, if any.
struct SuiteResult {
    CheckId id;
    int dim = 0;
    long samples = 0;
    double max_metric = 0.0;
    long violations = 0;
    std::optional<Witness> worst;
};

namespace detail {

// Samples are split over a fixed number of chunks with independent seeded
// generators, so results do not depend on the worker count.
inline constexpr int kBatchChunks = 16;

inline uint64_t chunk_seed(uint64_t seed, uint64_t block_salt, int dim, int chunk) {
    return mix_seed(mix_seed(mix_seed(seed, block_salt), static_cast<uint64_t>(dim)),
                    static_cast<uint64_t>(chunk));
}

struct CheckAccumulator {
    double max_metric = -1.0;
    long violations = 0;
    std::optional<Witness> worst;

    void absorb(const VerificationReport& r) {
        const double metric = r.is_identity ? r.deviation : r.ratio;
        if (!r.pass) {
            ++violations;
            if (r.witness && (!worst || metric > max_metric)) worst = r.witness;
        }
        if (metric > max_metric) max_metric = metric;
    }

    void merge(const CheckAccumulator& o) {
        violations += o.violations;
        if (o.worst && (!worst || o.max_metric > max_metric)) worst = o.worst;
        if (o.max_metric > max_metric) max_metric = o.max_metric;
    }
};

/// Runs `body(rng, accs)` once per sample, chunked and parallelized with
/// deterministic merging. `k` is the number of accumulators the body fills.
template <typename Body>
std::vector<CheckAccumulator> run_chunked(int k, int dim, long samples, uint64_t seed,
                                          uint64_t block_salt, int threads, const Body& body) {
    std::vector<std::vector<CheckAccumulator>> per_chunk(
        kBatchChunks, std::vector<CheckAccumulator>(static_cast<size_t>(k)));
    const long base = samples / kBatchChunks;
    const long rem = samples % kBatchChunks;

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        try {
            for (int c = next.fetch_add(1); c < kBatchChunks; c = next.fetch_add(1)) {
                const long count = base + (c < rem ? 1 : 0);
                TensorRng rng(chunk_seed(seed, block_salt, dim, c));
                for (long s = 0; s < count; ++s) body(rng, per_chunk[static_cast<size_t>(c)]);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
        }
    };

    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, kBatchChunks));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<CheckAccumulator> merged(static_cast<size_t>(k));
    for (const auto& chunk : per_chunk)
        for (int i = 0; i < k; ++i) merged[static_cast<size_t>(i)].merge(chunk[static_cast<size_t>(i)]);
    return merged;
}

inline SuiteResult to_result(CheckId id, int dim, long samples, const CheckAccumulator& acc) {
    return SuiteResult{id, dim, samples, std::max(acc.max_metric, 0.0), acc.violations, acc.worst};
}

} // namespace detail

/// The five inequality checkers (plus the crude cubic bound) evaluated on a
/// shared stream of random Weyl-like tensors and trace-free symmetric
/// matrices; one SuiteResult per checker.
inline std::vector<SuiteResult> run_inequality_block(int dim, long samples, uint64_t seed,
                                                     int threads = 0) {
    enum { kOkumura, kHuisken, kPropAlg, kTachibana, kTachibanaCrude, kEigenBound, kCount };
    auto accs = detail::run_chunked(
        kCount, dim, samples, seed, /*block_salt=*/0x1435u, threads,
        [dim](TensorRng& rng, std::vector<detail::CheckAccumulator>& out) {
            const CurvTensor w = rng.weyl_like(dim);
            const SymMatrix t = rng.traceless_sym(dim);
            out[kOkumura].absorb(check_okumura(t));
            out[kHuisken].absorb(check_huisken(w, t));
            out[kPropAlg].absorb(check_prop_alg(w, t));
            const auto [sharp, crude] = check_tachibana_pair(w);
            out[kTachibana].absorb(sharp);
            out[kTachibanaCrude].absorb(crude);
            out[kEigenBound].absorb(check_eigen_bound(w));
        });
    return {detail::to_result(CheckId::okumura, dim, samples, accs[kOkumura]),
            detail::to_result(CheckId::huisken, dim, samples, accs[kHuisken]),
            detail::to_result(CheckId::prop_alg, dim, samples, accs[kPropAlg]),
            detail::to_result(CheckId::tachibana, dim, samples, accs[kTachibana]),
            detail::to_result(CheckId::tachibana_crude, dim, samples, accs[kTachibanaCrude]),
            detail::to_result(CheckId::eigen_bound, dim, samples, accs[kEigenBound])};
}

/// The exact-identity checks on shared random samples. The omega
/// contraction identity is O(n^6) per sample, so it runs only for dims 4-6
/// (where the constants derivation actually uses it) with its own sample
/// budget; the cheap omega norm identity runs at every dim.
inline std::vector<SuiteResult> run_identity_block(int dim, long samples, uint64_t seed,
                                                   int threads = 0, long omega_samples = -1) {
    enum {
        kAlg1,
        kCubicRicci,
        kTvu,
        kCombined,
        kTwoForm,
        kOmegaNorm,
        kFiveDim, // dim 5 only
        kCount
    };
    const bool five = dim == 5;
    auto accs = detail::run_chunked(
        kCount, dim, samples, seed, /*block_salt=*/0x2526u, threads,
        [dim, five](TensorRng& rng, std::vector<detail::CheckAccumulator>& out) {
            const CurvTensor rm = rng.curvature(dim);
            const CurvTensor w = weyl_projection(rm);
            const SymMatrix t = rng.traceless_sym(dim);
            const SymMatrix s = rng.sym(dim);
            out[kAlg1].absorb(check_alg1(w, t));
            out[kCubicRicci].absorb(cubic_ricci_identity_check(s));
            out[kTvu].absorb(tvu_norm_identities(t));
            out[kCombined].absorb(check_combined_norm(w, t));
            out[kTwoForm].absorb(check_two_form_norm(rm));
            out[kOmegaNorm].absorb(omega_norm_check(w));
            if (five) out[kFiveDim].absorb(check_five_dim_identity(w));
        });

    std::vector<SuiteResult> results = {
        detail::to_result(CheckId::alg1_identity, dim, samples, accs[kAlg1]),
        detail::to_result(CheckId::cubic_ricci_identity, dim, samples, accs[kCubicRicci]),
        detail::to_result(CheckId::tvu_norms, dim, samples, accs[kTvu]),
        detail::to_result(CheckId::combined_norm, dim, samples, accs[kCombined]),
        detail::to_result(CheckId::two_form_norm, dim, samples, accs[kTwoForm]),
        detail::to_result(CheckId::omega_norm, dim, samples, accs[kOmegaNorm])};
    if (five) results.push_back(detail::to_result(CheckId::five_dim_identity, dim, samples, accs[kFiveDim]));

    if (dim >= 4 && dim <= 6) {
        if (omega_samples < 0) omega_samples = samples;
        auto omega_accs = detail::run_chunked(
            1, dim, omega_samples, seed, /*block_salt=*/0x3617u, threads,
            [dim](TensorRng& rng, std::vector<detail::CheckAccumulator>& out) {
                out[0].absorb(omega_identities(rng.weyl_like(dim)));
            });
        results.push_back(detail::to_result(CheckId::omega_identity, dim, omega_samples, omega_accs[0]));
    }
    return results;
}

} // namespace pinch
