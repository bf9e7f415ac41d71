#include "helisurf/residual.hpp"

#include <algorithm>
#include <cmath>

namespace helisurf {

namespace {

// Shared pieces of the cleared expansion:
//   Q = x (x^2+h^2) theta' + sin(theta)(x^2 + 2 h^2 cos^2 theta)   (H numerator)
//   W = x^2 + h^2 cos^2 theta                                      (EG - F^2)
struct Pieces {
    double q;
    double w;
    double c;  // cos theta
    double n;  // sin theta
};

Pieces pieces(const ProfileState& st, double h) {
    const double c = std::cos(st.theta);
    const double n = std::sin(st.theta);
    const double w = st.x * st.x + h * h * c * c;
    const double q = st.x * (st.x * st.x + h * h) * st.theta_prime +
                     n * (st.x * st.x + 2.0 * h * h * c * c);
    return {q, w, c, n};
}

}  // namespace

SMSParams::SMSParams(double alpha_in, UnitVec3 direction_in)
    : alpha(alpha_in), direction(direction_in) {
    if (!std::isfinite(alpha) || alpha == 0.0)
        throw std::invalid_argument("SMSParams: alpha must be finite and nonzero");
}

double residual(const HelicoidalSurface& surface, const SMSParams& params, double s, double t,
                double eps_half) {
    const ProfileState st = surface.profile().at(s);
    const double h = surface.pitch();
    if (regularity(st, h) <= surface.eps_reg())
        throw RegularityError("residual: regularity below eps_reg");
    const Vec3 p = parametrize(surface, s, t);
    const double pv = p.dot(params.direction.vec());
    if (pv <= eps_half) throw HalfspaceError("residual: <p,v> below eps_half");
    const double H = mean_curvature_theta(st, h);
    const UnitVec3 N = normal_theta(st, h, t);
    return H - params.alpha * N.vec().dot(params.direction.vec()) / pv;
}

double cleared_residual(const ProfileState& state, double h, const SMSParams& params, double t) {
    const Pieces pc = pieces(state, h);
    const double v1 = params.direction.x();
    const double v2 = params.direction.y();
    const double v3 = params.direction.z();
    const double ct = std::cos(t);
    const double nt = std::sin(t);
    const double pv = (h * t + state.z) * v3 + state.x * (v1 * ct + v2 * nt);
    const double num_nv = pc.c * (v3 * state.x + h * v1 * nt - h * v2 * ct) -
                          state.x * pc.n * (v1 * ct + v2 * nt);
    return pc.q * pv - params.alpha * num_nv * pc.w;
}

CoefficientQuadruple coefficients_general(const ProfileState& state, double h,
                                          const SMSParams& params) {
    const Pieces pc = pieces(state, h);
    const double v1 = params.direction.x();
    const double v2 = params.direction.y();
    const double v3 = params.direction.z();
    const double sin_part = state.x * pc.q + params.alpha * pc.w * state.x * pc.n;
    const double cos_part = params.alpha * h * pc.w * pc.c;
    CoefficientQuadruple cq;
    cq.a0 = v3 * (state.z * pc.q - params.alpha * state.x * pc.w * pc.c);
    cq.a1 = v3 * h * pc.q;
    cq.a2 = v2 * sin_part - v1 * cos_part;
    cq.a3 = v1 * sin_part + v2 * cos_part;
    return cq;
}

VerticalCoefficients coefficients_vertical(const ProfileState& state, double h, double alpha) {
    const Pieces pc = pieces(state, h);
    return {state.z * pc.q - alpha * state.x * pc.c * pc.w, h * pc.q};
}

double combo_hA0_zA1(const ProfileState& state, double h, const SMSParams& params) {
    const CoefficientQuadruple cq = coefficients_general(state, h, params);
    return h * cq.a0 - state.z * cq.a1;
}

double combo_v2A3_v1A2(const ProfileState& state, double h, const SMSParams& params) {
    const CoefficientQuadruple cq = coefficients_general(state, h, params);
    return params.direction.y() * cq.a3 - params.direction.x() * cq.a2;
}

namespace {

// Partial-pivot elimination on the 4x4 basis matrix; also produces the
// inverse for a 1-norm condition estimate.
struct Solve4 {
    std::array<double, 4> solution;
    double cond1;
};

Solve4 solve4(std::array<std::array<double, 4>, 4> m, std::array<double, 4> rhs) {
    double norm_m = 0.0;
    for (int j = 0; j < 4; ++j) {
        double col = 0.0;
        for (int i = 0; i < 4; ++i) col += std::fabs(m[i][j]);
        norm_m = std::max(norm_m, col);
    }

    std::array<std::array<double, 4>, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1.0;

    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0)
            throw std::invalid_argument("extract_coefficients_numeric: singular node matrix");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        std::swap(rhs[col], rhs[piv]);
        const double d = m[col][col];
        for (int j = 0; j < 4; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        rhs[col] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = m[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < 4; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
            rhs[r] -= f * rhs[col];
        }
    }

    double norm_inv = 0.0;
    for (int j = 0; j < 4; ++j) {
        double col = 0.0;
        for (int i = 0; i < 4; ++i) col += std::fabs(inv[i][j]);
        norm_inv = std::max(norm_inv, col);
    }
    return {rhs, norm_m * norm_inv};
}

}  // namespace

CoefficientQuadruple extract_coefficients_numeric(const ProfileState& state, double h,
                                                  const SMSParams& params,
                                                  const std::array<double, 4>& t_nodes) {
    std::array<std::array<double, 4>, 4> m{};
    std::array<double, 4> rhs{};
    for (int i = 0; i < 4; ++i) {
        const double t = t_nodes[i];
        if (!std::isfinite(t))
            throw std::invalid_argument("extract_coefficients_numeric: non-finite node");
        m[i] = {1.0, t, std::sin(t), std::cos(t)};
        rhs[i] = cleared_residual(state, h, params, t);
    }
    const Solve4 sol = solve4(m, rhs);
    if (!(sol.cond1 < 1e8))
        throw std::invalid_argument("extract_coefficients_numeric: ill-conditioned node choice");
    return {sol.solution[0], sol.solution[1], sol.solution[2], sol.solution[3]};
}

}  // namespace helisurf
