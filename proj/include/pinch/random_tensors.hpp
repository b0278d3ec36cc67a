#pragma once

#include <cstdint>
#include <random>

#include "pinch/curv_tensor.hpp"
#include "pinch/decomposition.hpp"
#include "pinch/sym_matrix.hpp"

namespace pinch {

/// splitmix64 step; used to derive independent per-worker seeds.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Explicit-state seeded generator for the tensor families used by the
/// verification suites. Never global; one instance per worker.
class TensorRng {
  public:
    explicit TensorRng(uint64_t seed) : eng_(seed) {}

    double normal() { return normal_(eng_); }

    /// Symmetric matrix with N(0,1) entries, symmetrized.
    SymMatrix sym(int n) {
        SymMatrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) s.set(i, j, normal());
        return s;
    }

    SymMatrix traceless_sym(int n) { return traceless(sym(n)); }

    /// Sum of n Kulkarni-Nomizu squares of random symmetric matrices; has all
    /// curvature symmetries and satisfies first Bianchi by construction.
    CurvTensor curvature(int n) {
        CurvTensor acc(n);
        for (int a = 0; a < n; ++a) {
            const SymMatrix s = sym(n);
            acc += kulkarni_nomizu(s, s);
        }
        return acc;
    }

    /// Weyl component of curvature(n): totally trace-free, first Bianchi.
    /// Identically zero when n == 3.
    CurvTensor weyl_like(int n) { return weyl_projection(curvature(n)); }

  private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

inline SymMatrix random_traceless_sym(int n, uint64_t seed) {
    return TensorRng(seed).traceless_sym(n);
}

inline CurvTensor random_curvature(int n, uint64_t seed) { return TensorRng(seed).curvature(n); }

inline CurvTensor random_weyl_like(int n, uint64_t seed) { return TensorRng(seed).weyl_like(n); }

} // namespace pinch
