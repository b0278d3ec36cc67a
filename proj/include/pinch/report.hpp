#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "pinch/curv_tensor.hpp"
#include "pinch/sym_matrix.hpp"

namespace pinch {

enum class CheckId {
    okumura,
    okumura_printed, // the variant with the radical over the whole fraction
    huisken,
    prop_alg,
    prop_alg_w0,
    tachibana,
    tachibana_crude,
    eigen_bound,
    alg1_identity,
    cubic_ricci_identity,
    tvu_norms,
    omega_identity,
    omega_norm,
    five_dim_identity,
    combined_norm,
    two_form_norm,
    lambda_identity,
    gauss_bonnet_4d,
    sigma2_identity,
    gursky_equality,
    remark1_rewrite,
    remark1_variant,
};

inline const char* to_string(CheckId id) {
    switch (id) {
        case CheckId::okumura: return "okumura";
        case CheckId::okumura_printed: return "okumura_printed";
        case CheckId::huisken: return "huisken";
        case CheckId::prop_alg: return "prop_alg";
        case CheckId::prop_alg_w0: return "prop_alg_w0";
        case CheckId::tachibana: return "tachibana";
        case CheckId::tachibana_crude: return "tachibana_crude";
        case CheckId::eigen_bound: return "eigen_bound";
        case CheckId::alg1_identity: return "alg1_identity";
        case CheckId::cubic_ricci_identity: return "cubic_ricci_identity";
        case CheckId::tvu_norms: return "tvu_norms";
        case CheckId::omega_identity: return "omega_identity";
        case CheckId::omega_norm: return "omega_norm";
        case CheckId::five_dim_identity: return "five_dim_identity";
        case CheckId::combined_norm: return "combined_norm";
        case CheckId::two_form_norm: return "two_form_norm";
        case CheckId::lambda_identity: return "lambda_identity";
        case CheckId::gauss_bonnet_4d: return "gauss_bonnet_4d";
        case CheckId::sigma2_identity: return "sigma2_identity";
        case CheckId::gursky_equality: return "gursky_equality";
        case CheckId::remark1_rewrite: return "remark1_rewrite";
        case CheckId::remark1_variant: return "remark1_variant";
    }
    throw std::logic_error("to_string(CheckId): unknown id");
}

inline CheckId check_id_from_string(const std::string& s) {
    for (int v = 0; v <= static_cast<int>(CheckId::remark1_variant); ++v) {
        const CheckId id = static_cast<CheckId>(v);
        if (s == to_string(id)) return id;
    }
    throw std::invalid_argument("unknown check id: " + s);
}

/// Witness tensors attached to a failing (or extremal) report.
struct Witness {
    std::optional<SymMatrix> t;
    std::optional<CurvTensor> w;
};

/// Structured result of one inequality or identity check.
///
/// Inequality semantics: pass == (lhs <= rhs * (1 + tolerance)), ratio ==
/// lhs/rhs (0 when both sides vanish). Identity semantics: pass == relative
/// difference of the two sides <= tolerance.
struct VerificationReport {
    CheckId id;
    int dim = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool pass = false;
    double tolerance = 0.0;
    bool is_identity = false;
    double deviation = 0.0; // identities: relative deviation of the two sides
    std::optional<Witness> witness;
};

namespace detail {

inline double safe_ratio(double lhs, double rhs) {
    if (rhs == 0.0) return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return lhs / rhs;
}

inline VerificationReport inequality_report(CheckId id, int dim, double lhs, double rhs,
                                            double tol) {
    VerificationReport r;
    r.id = id;
    r.dim = dim;
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = safe_ratio(lhs, rhs);
    r.tolerance = tol;
    r.pass = lhs <= rhs * (1.0 + tol) || (lhs == 0.0 && rhs == 0.0);
    return r;
}

/// scale_floor is the natural magnitude of the identity's terms (e.g.
/// |W||T|^2 for a signed contraction); it keeps the relative comparison
/// meaningful when the two sides are incidentally close to zero by
/// cancellation.
inline VerificationReport identity_report(CheckId id, int dim, double lhs, double rhs, double tol,
                                          double scale_floor = 0.0) {
    VerificationReport r;
    r.id = id;
    r.dim = dim;
    r.lhs = lhs;
    r.rhs = rhs;
    r.is_identity = true;
    r.tolerance = tol;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), scale_floor});
    r.ratio = safe_ratio(lhs, rhs);
    r.deviation = scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
    r.pass = r.deviation <= tol;
    return r;
}

/// Relative deviation of an identity's two sides, 0 when both vanish.
inline double rel_dev(double lhs, double rhs, double scale_floor = 0.0) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), scale_floor});
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

} // namespace detail

} // namespace pinch
