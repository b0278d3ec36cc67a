#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pinch/curv_tensor.hpp"
#include "pinch/decomposition.hpp"
#include "pinch/report.hpp"
#include "pinch/sym_matrix.hpp"
#include "pinch/verifiers.hpp"

namespace pinch {

/// Closed-form homogeneous geometry. Curvature is pointwise in an
/// orthonormal frame; every derived scalar is constant, so integrals reduce
/// to pointwise value times volume.
struct ModelGeometry {
    std::string name;
    int dim = 0;
    CurvTensor rm;
    double volume = 0.0;
    std::optional<int> euler_char;
    bool einstein = false;
    std::optional<double> lambda;

    double scalar() const { return scalar_curv(rm); }
    double ric0_norm_sq() const { return frob_norm_sq(traceless(ricci_contract(rm))); }
    double weyl_norm_sq() const { return frob_norm_sq(decompose(rm).weyl); }
};

namespace detail {

/// Volume of the unit round n-sphere, 2 pi^((n+1)/2) / Gamma((n+1)/2).
inline double unit_sphere_volume(int n) {
    return 2.0 * std::pow(std::numbers::pi, (n + 1) / 2.0) / std::tgamma((n + 1) / 2.0);
}

} // namespace detail

/// Round S^n of the given radius: Rm = (1/r^2) * (1/2) g (kn) g.
inline ModelGeometry round_sphere(int n, double radius) {
    if (n < 2) throw std::invalid_argument("round_sphere: requires n >= 2");
    if (radius <= 0.0) throw std::invalid_argument("round_sphere: radius must be positive");
    const SymMatrix g = SymMatrix::identity(n);
    ModelGeometry m{.name = n == 4 ? "s4" : "sn:" + std::to_string(n),
                    .dim = n,
                    .rm = (0.5 / (radius * radius)) * kulkarni_nomizu(g, g),
                    .volume = detail::unit_sphere_volume(n) * std::pow(radius, n),
                    .euler_char = n % 2 == 0 ? std::optional<int>(2) : std::optional<int>(0),
                    .einstein = true,
                    .lambda = (n - 1.0) / (radius * radius)};
    return m;
}

/// S^2 x S^2 with the product metric; sectional curvature 1/r^2 within each
/// factor, zero across. Einstein exactly when the radii agree.
inline ModelGeometry product_spheres(double r1, double r2) {
    if (r1 <= 0.0 || r2 <= 0.0) throw std::invalid_argument("product_spheres: radii must be positive");
    const double k1 = 1.0 / (r1 * r1);
    const double k2 = 1.0 / (r2 * r2);
    auto block = [](int i) { return i < 2 ? 0 : 1; };
    CurvTensor rm = CurvTensor::from_function(4, [&](int i, int j, int k, int l) {
        if (block(i) != block(j) || block(i) != block(k) || block(i) != block(l)) return 0.0;
        const double kappa = block(i) == 0 ? k1 : k2;
        return kappa * ((i == k ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0) -
                        (i == l ? 1.0 : 0.0) * (j == k ? 1.0 : 0.0));
    });
    const double pi = std::numbers::pi;
    const bool einstein = r1 == r2;
    ModelGeometry m{.name = "s2xs2",
                    .dim = 4,
                    .rm = std::move(rm),
                    .volume = (4.0 * pi * r1 * r1) * (4.0 * pi * r2 * r2),
                    .euler_char = 4,
                    .einstein = einstein,
                    .lambda = einstein ? std::optional<double>(k1) : std::nullopt};
    return m;
}

/// Flat torus: zero curvature, volume side^n.
inline ModelGeometry flat_torus(int n, double side) {
    if (n < 2) throw std::invalid_argument("flat_torus: requires n >= 2");
    if (side <= 0.0) throw std::invalid_argument("flat_torus: side must be positive");
    ModelGeometry m{.name = n == 4 ? "t4" : "tn:" + std::to_string(n),
                    .dim = n,
                    .rm = CurvTensor(n),
                    .volume = std::pow(side, n),
                    .euler_char = 0,
                    .einstein = true,
                    .lambda = 0.0};
    return m;
}

/// Fubini-Study CP^2 scaled so Ric = 6g (holomorphic sectional curvature 4,
/// real sectional curvatures in [1,4]); volume pi^2/2, chi = 3.
inline ModelGeometry fubini_study_cp2() {
    // Complex structure J: e1 -> e2, e3 -> e4.
    double jm[4][4] = {};
    jm[0][1] = 1.0;
    jm[1][0] = -1.0;
    jm[2][3] = 1.0;
    jm[3][2] = -1.0;
    const double c = 4.0;
    CurvTensor rm = CurvTensor::from_function(4, [&](int i, int j, int k, int l) {
        const double id_part = (i == k ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0) -
                               (i == l ? 1.0 : 0.0) * (j == k ? 1.0 : 0.0);
        const double j_part = jm[i][k] * jm[j][l] - jm[i][l] * jm[j][k] + 2.0 * jm[i][j] * jm[k][l];
        return c / 4.0 * (id_part + j_part);
    });
    const double pi = std::numbers::pi;
    ModelGeometry m{.name = "cp2",
                    .dim = 4,
                    .rm = std::move(rm),
                    .volume = pi * pi / 2.0,
                    .euler_char = 3,
                    .einstein = true,
                    .lambda = 6.0};
    return m;
}

/// The CLI-addressable catalog: s4, s2xs2, t4, cp2, sn:<k>.
inline ModelGeometry model_by_name(const std::string& name) {
    if (name == "s4") return round_sphere(4, 1.0);
    if (name == "s2xs2") return product_spheres(1.0, 1.0);
    if (name == "t4") return flat_torus(4, 1.0);
    if (name == "cp2") return fubini_study_cp2();
    if (name.rfind("sn:", 0) == 0) {
        const int n = std::stoi(name.substr(3));
        if (n < 2 || n > 32) throw std::invalid_argument("model_by_name: sphere dim out of range");
        return round_sphere(n, 1.0);
    }
    throw std::invalid_argument("model_by_name: unknown model '" + name + "'");
}

inline std::vector<std::string> catalog_names() { return {"s4", "s2xs2", "t4", "cp2"}; }

// ---------------------------------------------------------------------------
// Integral functionals (pointwise value x volume on homogeneous models)
// ---------------------------------------------------------------------------

/// Yamabe invariant through the Einstein closed form, Y = R V^(2/n).
/// Errors on non-Einstein models or nonpositive scalar curvature rather than
/// approximating the conformal infimum.
inline double yamabe_einstein(const ModelGeometry& m) {
    if (!m.einstein) throw std::invalid_argument("yamabe_einstein: model is not Einstein");
    const double r = m.scalar();
    if (r <= 0.0) throw std::invalid_argument("yamabe_einstein: requires positive scalar curvature");
    return r * std::pow(m.volume, 2.0 / m.dim);
}

/// lambda V^(2/n) == Y/n for Einstein models.
inline VerificationReport lambda_identity_check(const ModelGeometry& m) {
    const double y = yamabe_einstein(m);
    const double lambda = m.lambda.value_or(m.scalar() / m.dim);
    const double lhs = lambda * std::pow(m.volume, 2.0 / m.dim);
    VerificationReport r =
        detail::identity_report(CheckId::lambda_identity, m.dim, lhs, y / m.dim, 1e-12);
    return r;
}

// ---------------------------------------------------------------------------
// Pinching verdicts
// ---------------------------------------------------------------------------

enum class TheoremId { thm_4d, cor_4d, thm_ndim, thm_einstein };

inline const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::thm_4d: return "thm_4d";
        case TheoremId::cor_4d: return "cor_4d";
        case TheoremId::thm_ndim: return "thm_ndim";
        case TheoremId::thm_einstein: return "thm_einstein";
    }
    throw std::logic_error("to_string(TheoremId): unknown id");
}

inline TheoremId theorem_from_string(const std::string& s) {
    if (s == "thm_4d") return TheoremId::thm_4d;
    if (s == "cor_4d") return TheoremId::cor_4d;
    if (s == "thm_ndim") return TheoremId::thm_ndim;
    if (s == "thm_einstein") return TheoremId::thm_einstein;
    throw std::invalid_argument("unknown theorem id: " + s);
}

/// Outcome of one pinching-hypothesis evaluation. `holds` is lhs < rhs
/// (strict variants) or lhs <= rhs; `degenerate` marks vacuous cases such as
/// an identically flat model, where the hypothesis class (shrinking soliton)
/// is empty.
struct PinchingVerdict {
    TheoremId theorem_id;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool strict = true;
    bool degenerate = false;

    double ratio() const { return detail::safe_ratio(lhs, rhs); }
};

namespace detail {

inline PinchingVerdict make_verdict(TheoremId id, double lhs, double rhs, bool strict,
                                    bool degenerate = false) {
    PinchingVerdict v{id, lhs, rhs, false, strict, degenerate};
    v.holds = strict ? lhs < rhs : lhs <= rhs;
    return v;
}

} // namespace detail

/// Four-dimensional pinching: integral of |W|^2 + |Ric0|^2 against Y^2/48.
inline PinchingVerdict pinching_thm_4d(const ModelGeometry& m) {
    if (m.dim != 4) throw std::invalid_argument("pinching_thm_4d: requires dim == 4");
    const double lhs = (m.weyl_norm_sq() + m.ric0_norm_sq()) * m.volume;
    const double y = yamabe_einstein(m);
    return detail::make_verdict(TheoremId::thm_4d, lhs, y * y / 48.0, /*strict=*/true);
}

/// Corollary form: integral of |W|^2 + 5/4 |Ric0|^2 against (1/48) integral
/// of R^2; weak inequality. Flagged degenerate when the model has zero
/// curvature (not a shrinker).
inline PinchingVerdict pinching_cor_4d(const ModelGeometry& m) {
    if (m.dim != 4) throw std::invalid_argument("pinching_cor_4d: requires dim == 4");
    const double r = m.scalar();
    const double lhs = (m.weyl_norm_sq() + 1.25 * m.ric0_norm_sq()) * m.volume;
    const double rhs = r * r / 48.0 * m.volume;
    const bool degenerate = frob_norm_sq(m.rm) == 0.0;
    return detail::make_verdict(TheoremId::cor_4d, lhs, rhs, /*strict=*/false, degenerate);
}

/// The n-dimensional pinching hypothesis, 4 <= n. Strict at n = 4, weak
/// otherwise (matching where the rigidity statement needs strictness).
inline PinchingVerdict pinching_thm_ndim(const ModelGeometry& m) {
    const int n = m.dim;
    if (n < 4) throw std::invalid_argument("pinching_thm_ndim: requires dim >= 4");
    if (!m.einstein) throw std::invalid_argument("pinching_thm_ndim: catalog evaluation needs lambda");
    const double y = yamabe_einstein(m);
    const double lambda = m.lambda.value_or(m.scalar() / n);
    const double v2n = std::pow(m.volume, 2.0 / n);

    // |W + sqrt(2)/(sqrt(n)(n-2)) Ric0 (kn) g| is constant on the model.
    const SymMatrix g = SymMatrix::identity(n);
    const SymMatrix ric0 = traceless(ricci_contract(m.rm));
    const CurvTensor combined =
        decompose(m.rm).weyl +
        (std::sqrt(2.0) / (std::sqrt(static_cast<double>(n)) * (n - 2))) * kulkarni_nomizu(ric0, g);
    const double lhs = std::sqrt(frob_norm_sq(combined)) * v2n +
                       std::sqrt((n - 4.0) * (n - 4.0) * (n - 1.0) / (8.0 * (n - 2.0))) * lambda * v2n;
    const double rhs = std::sqrt((n - 2.0) / (32.0 * (n - 1.0))) * y;
    return detail::make_verdict(TheoremId::thm_ndim, lhs, rhs, /*strict=*/n == 4);
}

/// Einstein rigidity hypothesis: (integral |W|^(n/2))^(2/n) against A(n) Y.
inline PinchingVerdict pinching_thm_einstein(const ModelGeometry& m) {
    const int n = m.dim;
    if (n < 4) throw std::invalid_argument("pinching_thm_einstein: requires dim >= 4");
    const double y = yamabe_einstein(m);
    const double lhs = std::sqrt(m.weyl_norm_sq()) * std::pow(m.volume, 2.0 / n);
    return detail::make_verdict(TheoremId::thm_einstein, lhs, einstein_a(n) * y, /*strict=*/true);
}

inline PinchingVerdict evaluate_pinching(const ModelGeometry& m, TheoremId id) {
    switch (id) {
        case TheoremId::thm_4d: return pinching_thm_4d(m);
        case TheoremId::cor_4d: return pinching_cor_4d(m);
        case TheoremId::thm_ndim: return pinching_thm_ndim(m);
        case TheoremId::thm_einstein: return pinching_thm_einstein(m);
    }
    throw std::logic_error("evaluate_pinching: unknown theorem");
}

// ---------------------------------------------------------------------------
// Four-dimensional cross-checks
// ---------------------------------------------------------------------------

/// Chern-Gauss-Bonnet: integral of |W|^2 - 2|Ric0|^2 + R^2/6 == 32 pi^2 chi.
inline VerificationReport gauss_bonnet_4d(const ModelGeometry& m) {
    if (m.dim != 4) throw std::invalid_argument("gauss_bonnet_4d: requires dim == 4");
    if (!m.euler_char) throw std::invalid_argument("gauss_bonnet_4d: missing Euler characteristic");
    const double r = m.scalar();
    const double lhs = (m.weyl_norm_sq() - 2.0 * m.ric0_norm_sq() + r * r / 6.0) * m.volume;
    const double pi = std::numbers::pi;
    const double rhs = 32.0 * pi * pi * *m.euler_char;
    return detail::identity_report(CheckId::gauss_bonnet_4d, 4, lhs, rhs, 1e-9,
                                   32.0 * pi * pi);
}

/// The 4d Schouten tensor, A = (Ric - R g/6) / 2.
inline SymMatrix schouten_4d(const ModelGeometry& m) {
    if (m.dim != 4) throw std::invalid_argument("schouten_4d: requires dim == 4");
    const SymMatrix ric = ricci_contract(m.rm);
    const double r = m.scalar();
    SymMatrix a = ric;
    for (int i = 0; i < 4; ++i) a.set(i, i, ric(i, i) - r / 6.0);
    return 0.5 * a;
}

/// sigma_2 of the eigenvalues of a symmetric matrix, ((tr A)^2 - |A|^2)/2.
inline double sigma2(const SymMatrix& a) {
    const double t = a.trace();
    return 0.5 * (t * t - frob_norm_sq(a));
}

/// Checks sigma_2(A) == R^2/96 - |Ric0|^2/8 and, on Einstein models with
/// R > 0, the equality case of the Yamabe lower bound Y^2 == 96 * integral
/// of sigma_2(A). Returns one report per check.
inline std::vector<VerificationReport> sigma2_gursky(const ModelGeometry& m) {
    if (m.dim != 4) throw std::invalid_argument("sigma2_gursky: requires dim == 4");
    std::vector<VerificationReport> out;
    const double s2 = sigma2(schouten_4d(m));
    const double r = m.scalar();
    const double expected = r * r / 96.0 - m.ric0_norm_sq() / 8.0;
    out.push_back(detail::identity_report(CheckId::sigma2_identity, 4, s2, expected, 1e-11,
                                          r * r / 96.0 + m.ric0_norm_sq() / 8.0));
    if (m.einstein && r > 0.0) {
        const double y = yamabe_einstein(m);
        out.push_back(detail::identity_report(CheckId::gursky_equality, 4, y * y,
                                              96.0 * s2 * m.volume, 1e-10));
    }
    return out;
}

/// Verifies that the corollary slack rewrites through Gauss-Bonnet:
///   int |W|^2 + 5/4 int |Ric0|^2 - 1/48 int R^2
///     == 13/8 int |W|^2 + 1/12 int R^2 - 20 pi^2 chi
/// and that the corollary inequality is equivalent to
///   int |W|^2 + 2/39 int R^2 <= 160/13 pi^2 chi.
inline std::vector<VerificationReport> remark1_rewrite(const ModelGeometry& m) {
    if (m.dim != 4) throw std::invalid_argument("remark1_rewrite: requires dim == 4");
    if (!m.euler_char) throw std::invalid_argument("remark1_rewrite: missing Euler characteristic");
    const double pi = std::numbers::pi;
    const double w2 = m.weyl_norm_sq() * m.volume;
    const double ric2 = m.ric0_norm_sq() * m.volume;
    const double r2 = m.scalar() * m.scalar() * m.volume;
    const double chi = *m.euler_char;

    const double form1 = w2 + 1.25 * ric2 - r2 / 48.0;
    const double form2 = 13.0 / 8.0 * w2 + r2 / 12.0 - 20.0 * pi * pi * chi;
    const double scale = w2 + ric2 + r2 + 32.0 * pi * pi * std::abs(chi) + 1.0;

    std::vector<VerificationReport> out;
    out.push_back(detail::identity_report(CheckId::remark1_rewrite, 4, form1, form2, 1e-10, scale));

    const double variant_diff = w2 + 2.0 / 39.0 * r2 - 160.0 / 13.0 * pi * pi * chi;
    out.push_back(detail::identity_report(CheckId::remark1_variant, 4, variant_diff,
                                          8.0 / 13.0 * form2, 1e-10, scale));
    return out;
}

} // namespace pinch
