#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pinch/curv_tensor.hpp"
#include "pinch/report.hpp"
#include "pinch/sym_matrix.hpp"

namespace pinch {

/// Orthogonal three-part split of a curvature tensor:
///   Rm = weyl + ricci_part + scalar_part
/// with ricci_part = (1/(n-2)) Ric0 (kn) g and
/// scalar_part = (R / (2n(n-1))) g (kn) g.
struct CurvDecomposition {
    CurvTensor weyl;
    CurvTensor ricci_part;
    CurvTensor scalar_part;
};

inline CurvDecomposition decompose(const CurvTensor& rm) {
    const int n = rm.dim();
    if (n < 3) throw std::invalid_argument("decompose: requires dim >= 3");
    const SymMatrix g = SymMatrix::identity(n);
    const SymMatrix ric0 = traceless(ricci_contract(rm));
    const double r = scalar_curv(rm);

    CurvTensor ricci_part = (1.0 / (n - 2)) * kulkarni_nomizu(ric0, g);
    CurvTensor scalar_part = (r / (2.0 * n * (n - 1))) * kulkarni_nomizu(g, g);
    CurvTensor weyl = rm - ricci_part - scalar_part;
    return CurvDecomposition{std::move(weyl), std::move(ricci_part), std::move(scalar_part)};
}

/// Totally trace-free part of a curvature tensor; idempotent.
inline CurvTensor weyl_projection(const CurvTensor& t) { return decompose(t).weyl; }

/// Orthogonal split of Ric0 (kn) Ric0 used by the main algebraic estimate:
/// a totally trace-free part plus the two displayed trace correction terms.
struct TvuDecomposition {
    CurvTensor t_part;
    CurvTensor v_part;
    CurvTensor u_part;
};

inline TvuDecomposition tvu_decompose(const SymMatrix& t) {
    require_traceless(t, 1e-12, "tvu_decompose");
    const int n = t.dim();
    const SymMatrix g = SymMatrix::identity(n);
    const SymMatrix t2 = matrix_square(t);
    const double norm_sq = frob_norm_sq(t);
    const CurvTensor gg = kulkarni_nomizu(g, g);

    CurvTensor v = (-2.0 / (n - 2)) * kulkarni_nomizu(t2, g) +
                   (2.0 / (static_cast<double>(n) * (n - 2)) * norm_sq) * gg;
    CurvTensor u = (-1.0 / (static_cast<double>(n) * (n - 1)) * norm_sq) * gg;
    CurvTensor tt = kulkarni_nomizu(t, t) - v - u;
    return TvuDecomposition{std::move(tt), std::move(v), std::move(u)};
}

/// Checks the four squared-norm identities of the T+V+U split:
///   |T (kn) T|^2   = 8|T|^4 - 8|T^2|^2
///   |V|^2          = 16/(n-2) |T^2|^2 - 16/(n(n-2)) |T|^4
///   |U|^2          = 8/(n(n-1)) |T|^4
///   |t|^2 + n/2 |V|^2 = 8(n-2)/(n-1) |T|^4
/// The report carries the worst relative deviation across the four.
inline VerificationReport tvu_norm_identities(const SymMatrix& t) {
    require_traceless(t, 1e-12, "tvu_norm_identities");
    const int n = t.dim();
    const double tol = 1e-11;
    const TvuDecomposition parts = tvu_decompose(t);

    const double norm4 = frob_norm_sq(t) * frob_norm_sq(t);
    const double sq_norm = frob_norm_sq(matrix_square(t));
    const double kn_sq = frob_norm_sq(kulkarni_nomizu(t, t));
    const double v_sq = frob_norm_sq(parts.v_part);
    const double u_sq = frob_norm_sq(parts.u_part);
    const double t_sq = frob_norm_sq(parts.t_part);

    const double dev1 = detail::rel_dev(kn_sq, 8.0 * norm4 - 8.0 * sq_norm, norm4);
    const double dev2 = detail::rel_dev(
        v_sq, 16.0 / (n - 2) * sq_norm - 16.0 / (static_cast<double>(n) * (n - 2)) * norm4, norm4);
    const double dev3 = detail::rel_dev(u_sq, 8.0 / (static_cast<double>(n) * (n - 1)) * norm4, norm4);
    const double dev4 =
        detail::rel_dev(t_sq + 0.5 * n * v_sq, 8.0 * (n - 2) / (n - 1.0) * norm4, norm4);
    const double worst = std::max(std::max(dev1, dev2), std::max(dev3, dev4));

    VerificationReport r = detail::identity_report(CheckId::tvu_norms, n, t_sq + 0.5 * n * v_sq,
                                                   8.0 * (n - 2) / (n - 1.0) * norm4, tol);
    r.deviation = worst;
    r.pass = worst <= tol;
    if (!r.pass) r.witness = Witness{t, std::nullopt};
    return r;
}

/// The local skew-symmetric tensor w^(pqrs)_ij built from a trace-free W for
/// one fixed index block (p,q,r,s).
inline Eigen::MatrixXd omega_tensor(const CurvTensor& w, int p, int q, int r, int s) {
    const int n = w.dim();
    Eigen::MatrixXd om = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        om(i, p) += w(i, q, r, s);
        om(i, q) += w(p, i, r, s);
        om(i, r) += w(p, q, i, s);
        om(i, s) += w(p, q, r, i);
        om(p, i) -= w(i, q, r, s);
        om(q, i) -= w(p, i, r, s);
        om(r, i) -= w(p, q, i, s);
        om(s, i) -= w(p, q, r, i);
    }
    return om;
}

namespace detail {

/// Accumulates, over all n^4 blocks (p,q,r,s), the six-index squared norm of
/// w and (optionally) the full contraction W_ijkl w_ij w_kl. Each block's w
/// has at most 8n nonzero entries, which keeps the norm O(n^5) and the
/// contraction O(n^6) overall.
inline void omega_block_sums(const CurvTensor& w, bool want_contraction, double& contraction_sum,
                             double& norm_sum) {
    const int n = w.dim();
    std::vector<double> om(static_cast<size_t>(n) * n, 0.0);
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    std::vector<int> touched;
    std::vector<int> unique;
    touched.reserve(8 * n);
    unique.reserve(8 * n);
    contraction_sum = 0.0;
    norm_sum = 0.0;

    auto put = [&](int a, int b, double v) {
        const int t = a * n + b;
        om[static_cast<size_t>(t)] += v;
        touched.push_back(t);
    };

    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    touched.clear();
                    unique.clear();
                    for (int i = 0; i < n; ++i) {
                        const double w1 = w(i, q, r, s);
                        const double w2 = w(p, i, r, s);
                        const double w3 = w(p, q, i, s);
                        const double w4 = w(p, q, r, i);
                        put(i, p, w1);
                        put(i, q, w2);
                        put(i, r, w3);
                        put(i, s, w4);
                        put(p, i, -w1);
                        put(q, i, -w2);
                        put(r, i, -w3);
                        put(s, i, -w4);
                    }
                    for (int t : touched)
                        if (!seen[static_cast<size_t>(t)]) {
                            seen[static_cast<size_t>(t)] = 1;
                            unique.push_back(t);
                        }
                    for (int t : unique) norm_sum += om[static_cast<size_t>(t)] * om[static_cast<size_t>(t)];
                    if (!want_contraction) {
                        for (int t : touched) {
                            om[static_cast<size_t>(t)] = 0.0;
                            seen[static_cast<size_t>(t)] = 0;
                        }
                        continue;
                    }
                    for (int ta : unique) {
                        const double x = om[static_cast<size_t>(ta)];
                        if (x == 0.0) continue;
                        const int i = ta / n;
                        const int j = ta % n;
                        double acc = 0.0;
                        for (int tb : unique) {
                            const double y = om[static_cast<size_t>(tb)];
                            if (y == 0.0) continue;
                            acc += w(i, j, tb / n, tb % n) * y;
                        }
                        contraction_sum += x * acc;
                    }
                    for (int t : touched) {
                        om[static_cast<size_t>(t)] = 0.0;
                        seen[static_cast<size_t>(t)] = 0;
                    }
                }
}

} // namespace detail

/// Verifies 2 W3_1 + 1/2 W3_2 == -(1/16) sum_pqrs W_ijkl w_ij w_kl together
/// with the companion norm identity sum_pqrs |w|^2 == 8(n-1) |W|^2, both at
/// relative 1e-11. The contraction identity's sign depends on the curvature
/// sign convention; in this library's convention (round spheres have
/// positive sectional components) the minus sign is the one that holds, to
/// machine precision, on every Weyl tensor of an explicit metric. The norm
/// identity is convention-independent. The report's lhs/rhs are the
/// contraction identity's sides; pass requires both identities.
inline VerificationReport omega_identities(const CurvTensor& w) {
    require_totally_tracefree(w, 1e-10, "omega_identities");
    const int n = w.dim();
    double contraction_sum = 0.0;
    double norm_sum = 0.0;
    detail::omega_block_sums(w, true, contraction_sum, norm_sum);

    const double w_sq = frob_norm_sq(w);
    const double lhs = 2.0 * weyl_cubic_1(w) + 0.5 * weyl_cubic_2(w);
    const double rhs = -contraction_sum / 16.0;
    VerificationReport r =
        detail::identity_report(CheckId::omega_identity, n, lhs, rhs, 1e-11, std::pow(w_sq, 1.5));
    const double norm_dev = detail::rel_dev(norm_sum, 8.0 * (n - 1) * w_sq, w_sq);
    r.deviation = std::max(r.deviation, norm_dev);
    if (norm_dev > 1e-11) r.pass = false;
    if (!r.pass) r.witness = Witness{std::nullopt, w};
    return r;
}

/// Just the norm identity sum_pqrs |w|^2 == 8(n-1)|W|^2 (cheap at any n).
inline VerificationReport omega_norm_check(const CurvTensor& w) {
    require_totally_tracefree(w, 1e-10, "omega_norm_check");
    const int n = w.dim();
    double contraction_sum = 0.0;
    double norm_sum = 0.0;
    detail::omega_block_sums(w, false, contraction_sum, norm_sum);
    VerificationReport r = detail::identity_report(CheckId::omega_norm, n, norm_sum,
                                                   8.0 * (n - 1) * frob_norm_sq(w), 1e-11);
    if (!r.pass) r.witness = Witness{std::nullopt, w};
    return r;
}

} // namespace pinch
