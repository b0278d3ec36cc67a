#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace pinch {

/// Dense symmetric 2-tensor in an orthonormal frame (the metric is the
/// identity, so index position carries no weight).
class SymMatrix {
  public:
    explicit SymMatrix(int n) : dim_(n), e_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 2) throw std::invalid_argument("SymMatrix: dim must be >= 2");
    }

    static SymMatrix identity(int n) {
        SymMatrix s(n);
        for (int i = 0; i < n; ++i) s.e_[idx(n, i, i)] = 1.0;
        return s;
    }

    static SymMatrix diag(const std::vector<double>& d) {
        SymMatrix s(static_cast<int>(d.size()));
        for (int i = 0; i < s.dim_; ++i) s.e_[idx(s.dim_, i, i)] = d[static_cast<size_t>(i)];
        return s;
    }

    static SymMatrix diag(std::initializer_list<double> d) {
        return diag(std::vector<double>(d));
    }

    int dim() const { return dim_; }

    double operator()(int i, int j) const { return e_[idx(dim_, i, j)]; }

    /// Writes both (i,j) and (j,i); symmetry is enforced at every write.
    void set(int i, int j, double v) {
        e_[idx(dim_, i, j)] = v;
        e_[idx(dim_, j, i)] = v;
    }

    void add(int i, int j, double v) { set(i, j, e_[idx(dim_, i, j)] + v); }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim_; ++i) t += e_[idx(dim_, i, i)];
        return t;
    }

    SymMatrix& operator+=(const SymMatrix& o) {
        check_dim(o);
        for (size_t a = 0; a < e_.size(); ++a) e_[a] += o.e_[a];
        return *this;
    }

    SymMatrix& operator-=(const SymMatrix& o) {
        check_dim(o);
        for (size_t a = 0; a < e_.size(); ++a) e_[a] -= o.e_[a];
        return *this;
    }

    SymMatrix& operator*=(double c) {
        for (double& x : e_) x *= c;
        return *this;
    }

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(double c, SymMatrix a) { return a *= c; }

    const std::vector<double>& data() const { return e_; }

  private:
    static size_t idx(int n, int i, int j) {
        return static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j);
    }
    void check_dim(const SymMatrix& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("SymMatrix: dimension mismatch");
    }

    int dim_;
    std::vector<double> e_;
};

inline double frob_norm_sq(const SymMatrix& s) {
    double acc = 0.0;
    for (double x : s.data()) acc += x * x;
    return acc;
}

/// S - (tr S / n) Id.
inline SymMatrix traceless(const SymMatrix& s) {
    const int n = s.dim();
    const double mean = s.trace() / n;
    SymMatrix out = s;
    for (int i = 0; i < n; ++i) out.set(i, i, s(i, i) - mean);
    return out;
}

/// Sum T_ij T_jk T_ik, i.e. tr(T^3) for symmetric T.
inline double cubic_trace(const SymMatrix& t) {
    const int n = t.dim();
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double tij = t(i, j);
            if (tij == 0.0) continue;
            double inner = 0.0;
            for (int k = 0; k < n; ++k) inner += t(j, k) * t(i, k);
            acc += tij * inner;
        }
    return acc;
}

/// Matrix square (S.S)_ik = S_ip S_kp; symmetric since S is.
inline SymMatrix matrix_square(const SymMatrix& s) {
    const int n = s.dim();
    SymMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) {
            double acc = 0.0;
            for (int p = 0; p < n; ++p) acc += s(i, p) * s(k, p);
            out.set(i, k, acc);
        }
    return out;
}

inline void require_traceless(const SymMatrix& t, double tol, const char* who) {
    if (std::abs(t.trace()) > tol)
        throw std::invalid_argument(std::string(who) + ": input must be trace-free");
}

} // namespace pinch
