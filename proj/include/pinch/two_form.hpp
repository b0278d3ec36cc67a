#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "pinch/curv_tensor.hpp"

namespace pinch {

/// A curvature-symmetric rank-4 tensor viewed as a symmetric operator on
/// two-forms, (T w)_kl = (1/2) T_ijkl w_ij. Coordinates are the components
/// w_ij with i < j in lexicographic order; in that basis the operator matrix
/// is simply M[(kl),(ij)] = T_ijkl, its eigenvalues are the mu of
/// T_ijkl w_ij = 2 mu w_kl, and ||M||_F^2 = |T|^2 / 4. The convention is
/// pinned by the unit test mapping the identity Kulkarni-Nomizu square to
/// 2*Id with mu = 2.
class TwoFormOperator {
  public:
    static TwoFormOperator from_tensor(const CurvTensor& t) {
        const int n = t.dim();
        const int nn = n * (n - 1) / 2;
        TwoFormOperator op;
        op.dim_ = n;
        op.m_.resize(nn, nn);
        int row = 0;
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l, ++row) {
                int col = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j, ++col) op.m_(row, col) = t(i, j, k, l);
            }
        return op;
    }

    int dim() const { return dim_; }
    int two_form_dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }

    double frob_norm_sq() const { return m_.squaredNorm(); }
    double trace() const { return m_.trace(); }

    /// Largest eigenvalue. Throws on solver failure or a residual above
    /// 1e-11 * scale; never silently returns garbage.
    double max_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m_);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("TwoFormOperator: eigen-solver did not converge");
        const int last = static_cast<int>(m_.rows()) - 1;
        const double mu = solver.eigenvalues()(last);
        const Eigen::VectorXd v = solver.eigenvectors().col(last);
        const double scale = std::max(1.0, m_.norm());
        if ((m_ * v - mu * v).norm() > 1e-11 * scale)
            throw std::runtime_error("TwoFormOperator: eigenpair residual too large");
        return mu;
    }

  private:
    TwoFormOperator() = default;

    int dim_ = 0;
    Eigen::MatrixXd m_;
};

inline TwoFormOperator as_two_form_operator(const CurvTensor& t) {
    return TwoFormOperator::from_tensor(t);
}

inline double max_eigenvalue(const TwoFormOperator& op) { return op.max_eigenvalue(); }

} // namespace pinch
