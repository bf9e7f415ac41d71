#pragma once

#include <array>

#include "helisurf/surface.hpp"

namespace helisurf {

/// Default halfspace threshold for the residual of the defining equation.
inline constexpr double kDefaultEpsHalf = 1e-9;

/// The pair (alpha, v) of the singular-minimal equation
/// H = alpha <N,v> / <p,v>. alpha = 0 (classical minimal surfaces) is
/// excluded.
struct SMSParams {
    SMSParams(double alpha_in, UnitVec3 direction_in);

    double alpha;
    UnitVec3 direction;
};

/// Coefficients of the cleared residual's expansion in {1, t, sin t, cos t}.
struct CoefficientQuadruple {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
};

/// The degree-1 pair for v = (0,0,1).
struct VerticalCoefficients {
    double a0 = 0.0;
    double a1 = 0.0;
};

/// H - alpha <N,v>/<p,v> at (s,t). Throws RegularityError below the
/// surface's eps_reg and HalfspaceError when <p,v> <= eps_half.
double residual(const HelicoidalSurface& surface, const SMSParams& params,
                double s, double t, double eps_half = kDefaultEpsHalf);

/// Denominator-cleared residual
///   F(s,t) = numH * <p,v> - alpha * numN_v * (x^2 + h^2 cos^2 theta),
/// where numH is the mean-curvature numerator and numN_v the normal
/// numerator projected on v. Affine-trigonometric in t; defined everywhere
/// (no halfspace or regularity restriction).
double cleared_residual(const ProfileState& state, double h,
                        const SMSParams& params, double t);

/// Closed-form expansion coefficients of the cleared residual:
/// F = A0 + A1 t + A2 sin t + A3 cos t.
CoefficientQuadruple coefficients_general(const ProfileState& state, double h,
                                          const SMSParams& params);

/// The v = (0,0,1) specialization:
///   A0 = z Q - alpha x cos(theta) W,  A1 = h Q,
/// with Q = x (x^2+h^2) theta' + sin(theta)(x^2 + 2 h^2 cos^2 theta) and
/// W = x^2 + h^2 cos^2 theta.
VerticalCoefficients coefficients_vertical(const ProfileState& state, double h,
                                           double alpha);

/// h*A0 - z*A1; closed form -alpha h v3 x cos(theta) W.
double combo_hA0_zA1(const ProfileState& state, double h, const SMSParams& params);

/// v2*A3 - v1*A2; closed form (v1^2 + v2^2) alpha h cos(theta) W.
double combo_v2A3_v1A2(const ProfileState& state, double h, const SMSParams& params);

/// Well-conditioned default sample nodes for the basis {1, t, sin t, cos t}.
inline constexpr std::array<double, 4> kDefaultTNodes{0.0, 1.0471975511965976,
                                                      1.5707963267948966, 1.0};

/// Solves the 4x4 linear system F(s, t_i) = A0 + A1 t_i + A2 sin t_i +
/// A3 cos t_i for the quadruple. Throws std::invalid_argument when the node
/// matrix is ill conditioned (cond_1 >= 1e8).
CoefficientQuadruple extract_coefficients_numeric(
    const ProfileState& state, double h, const SMSParams& params,
    const std::array<double, 4>& t_nodes = kDefaultTNodes);

}  // namespace helisurf
