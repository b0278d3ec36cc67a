#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pinch/sym_matrix.hpp"

namespace pinch {

/// Dense rank-4 tensor with the symmetries of a curvature tensor:
/// antisymmetric in the first and last index pairs, symmetric under pair
/// interchange. Stored as a flat n^4 array in an orthonormal frame.
class CurvTensor {
  public:
    explicit CurvTensor(int n) : dim_(n), e_(pow4(n), 0.0) {
        if (n < 2) throw std::invalid_argument("CurvTensor: dim must be >= 2");
    }

    /// Evaluates fn on every index tuple. The callable is responsible for
    /// producing symmetric values; symmetry_defect() exists to audit that.
    static CurvTensor from_function(int n, const std::function<double(int, int, int, int)>& fn) {
        CurvTensor t(n);
        size_t a = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) t.e_[a++] = fn(i, j, k, l);
        return t;
    }

    int dim() const { return dim_; }

    double operator()(int i, int j, int k, int l) const { return e_[flat(i, j, k, l)]; }

    double& raw(int i, int j, int k, int l) { return e_[flat(i, j, k, l)]; }

    CurvTensor& operator+=(const CurvTensor& o) {
        check_dim(o);
        for (size_t a = 0; a < e_.size(); ++a) e_[a] += o.e_[a];
        return *this;
    }

    CurvTensor& operator-=(const CurvTensor& o) {
        check_dim(o);
        for (size_t a = 0; a < e_.size(); ++a) e_[a] -= o.e_[a];
        return *this;
    }

    CurvTensor& operator*=(double c) {
        for (double& x : e_) x *= c;
        return *this;
    }

    friend CurvTensor operator+(CurvTensor a, const CurvTensor& b) { return a += b; }
    friend CurvTensor operator-(CurvTensor a, const CurvTensor& b) { return a -= b; }
    friend CurvTensor operator*(double c, CurvTensor a) { return a *= c; }

    /// Max deviation from the index symmetries (antisymmetry in both pairs,
    /// pair interchange).
    double symmetry_defect() const {
        double d = 0.0;
        const int n = dim_;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const double v = (*this)(i, j, k, l);
                        d = std::max(d, std::abs(v + (*this)(j, i, k, l)));
                        d = std::max(d, std::abs(v + (*this)(i, j, l, k)));
                        d = std::max(d, std::abs(v - (*this)(k, l, i, j)));
                    }
        return d;
    }

    /// Max deviation from the first Bianchi identity.
    double bianchi_defect() const {
        double d = 0.0;
        const int n = dim_;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        d = std::max(d, std::abs((*this)(i, j, k, l) + (*this)(j, k, i, l) +
                                                 (*this)(k, i, j, l)));
        return d;
    }

    const std::vector<double>& data() const { return e_; }

  private:
    static size_t pow4(int n) {
        const size_t m = static_cast<size_t>(n);
        return m * m * m * m;
    }
    size_t flat(int i, int j, int k, int l) const {
        const size_t n = static_cast<size_t>(dim_);
        return ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
    }
    void check_dim(const CurvTensor& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("CurvTensor: dimension mismatch");
    }

    int dim_;
    std::vector<double> e_;
};

/// (A (kn) B)_ijkl = A_ik B_jl - A_il B_jk - A_jk B_il + A_jl B_ik.
/// The result has all curvature symmetries and satisfies first Bianchi.
inline CurvTensor kulkarni_nomizu(const SymMatrix& a, const SymMatrix& b) {
    const int n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("kulkarni_nomizu: dimension mismatch");
    CurvTensor t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    t.raw(i, j, k, l) =
                        a(i, k) * b(j, l) - a(i, l) * b(j, k) - a(j, k) * b(i, l) + a(j, l) * b(i, k);
        }
    return t;
}

inline double frob_norm_sq(const CurvTensor& t) {
    double acc = 0.0;
    for (double x : t.data()) acc += x * x;
    return acc;
}

inline double inner(const CurvTensor& a, const CurvTensor& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    double acc = 0.0;
    const auto& x = a.data();
    const auto& y = b.data();
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

/// Ric_ik = sum_j Rm_ijkj.
inline SymMatrix ricci_contract(const CurvTensor& rm) {
    const int n = rm.dim();
    SymMatrix ric(n);
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += rm(i, j, k, j);
            ric.set(i, k, acc);
        }
    return ric;
}

inline double scalar_curv(const CurvTensor& rm) {
    const int n = rm.dim();
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += rm(i, j, i, j);
    return acc;
}

/// Largest |sum_j T_ijkj| over (i,k): zero iff totally trace-free (a single
/// contraction determines all others through the symmetries).
inline double max_abs_single_trace(const CurvTensor& t) {
    const int n = t.dim();
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += t(i, j, k, j);
            d = std::max(d, std::abs(acc));
        }
    return d;
}

inline void require_totally_tracefree(const CurvTensor& w, double tol, const char* who) {
    if (max_abs_single_trace(w) > tol)
        throw std::invalid_argument(std::string(who) + ": tensor must be totally trace-free");
}

/// Full contraction W_ijkl T_ik T_jl.
inline double weyl_ricci_contraction(const CurvTensor& w, const SymMatrix& t) {
    const int n = w.dim();
    if (t.dim() != n) throw std::invalid_argument("weyl_ricci_contraction: dimension mismatch");
    require_totally_tracefree(w, 1e-10, "weyl_ricci_contraction");
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double tik = t(i, k);
                if (tik == 0.0) continue;
                for (int l = 0; l < n; ++l) acc += w(i, j, k, l) * tik * t(j, l);
            }
    return acc;
}

namespace detail {

/// Reshape to the n^2 x n^2 matrix A[(i,k),(j,l)] = W_ijkl. Symmetric thanks
/// to the pair symmetries of W.
inline Eigen::MatrixXd musical_matrix(const CurvTensor& w) {
    const int n = w.dim();
    Eigen::MatrixXd a(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) a(i * n + k, j * n + l) = w(i, j, k, l);
    return a;
}

} // namespace detail

/// W_ijkl W_ipkq W_pjql. Evaluated as tr(A^3) of the (ik),(jl) reshape; the
/// naive sextuple loop is kept in the test oracles.
inline double weyl_cubic_1(const CurvTensor& w) {
    require_totally_tracefree(w, 1e-10, "weyl_cubic_1");
    const Eigen::MatrixXd a = detail::musical_matrix(w);
    const Eigen::MatrixXd a2 = a * a;
    return a2.cwiseProduct(a).sum();
}

/// W_ijkl W_klpq W_pqij = 8 tr(M^3) with M the pair-indexed two-form matrix.
inline double weyl_cubic_2(const CurvTensor& w) {
    require_totally_tracefree(w, 1e-10, "weyl_cubic_2");
    const int n = w.dim();
    const int nn = n * (n - 1) / 2;
    Eigen::MatrixXd m(nn, nn);
    int row = 0;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l, ++row) {
            int col = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++col) m(row, col) = w(i, j, k, l);
        }
    const Eigen::MatrixXd m2 = m * m;
    return 8.0 * m2.cwiseProduct(m).sum();
}

/// Projects a pair-symmetric tensor onto the subspace satisfying first
/// Bianchi by removing its totally antisymmetric part.
inline CurvTensor bianchi_projection(const CurvTensor& t) {
    const int n = t.dim();
    CurvTensor out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    out.raw(i, j, k, l) =
                        t(i, j, k, l) - (t(i, j, k, l) + t(i, k, l, j) + t(i, l, j, k)) / 3.0;
    return out;
}

} // namespace pinch
