#include "helisurf/surface.hpp"

#include <cmath>

namespace helisurf {

HelicoidalSurface::HelicoidalSurface(Profile profile, double pitch, double eps_reg)
    : profile_(std::move(profile)), pitch_(pitch), eps_reg_(eps_reg) {
    if (!std::isfinite(pitch)) throw std::invalid_argument("HelicoidalSurface: non-finite pitch");
    if (!(eps_reg > 0.0) || !std::isfinite(eps_reg))
        throw std::invalid_argument("HelicoidalSurface: eps_reg must be positive");
}

Vec3 helicoidal_motion(const Vec3& p, double t, double h) {
    if (!p.finite() || !std::isfinite(t) || !std::isfinite(h))
        throw std::invalid_argument("helicoidal_motion: non-finite input");
    const double c = std::cos(t);
    const double n = std::sin(t);
    return {p.x * c - p.y * n, p.x * n + p.y * c, p.z + h * t};
}

Vec3 parametrize(const HelicoidalSurface& surface, double s, double t) {
    const ProfileState st = surface.profile().at(s);
    return helicoidal_motion({st.x, 0.0, st.z}, t, surface.pitch());
}

SurfaceJet surface_jet(const HelicoidalSurface& surface, double s, double t) {
    const ProfileState st = surface.profile().at(s);
    const double h = surface.pitch();
    const double xp = std::cos(st.theta);
    const double zp = std::sin(st.theta);
    const double xpp = -st.theta_prime * zp;
    const double zpp = st.theta_prime * xp;
    const double c = std::cos(t);
    const double n = std::sin(t);
    SurfaceJet jet;
    jet.point = {st.x * c, st.x * n, st.z + h * t};
    jet.ds = {xp * c, xp * n, zp};
    jet.dt = {-st.x * n, st.x * c, h};
    jet.dss = {xpp * c, xpp * n, zpp};
    jet.dst = {-xp * n, xp * c, 0.0};
    jet.dtt = {-st.x * c, -st.x * n, 0.0};
    return jet;
}

double regularity(const ProfileState& state, double h) {
    const double c = std::cos(state.theta);
    return state.x * state.x + h * h * c * c;
}

double regularity(const HelicoidalSurface& surface, double s) {
    return regularity(surface.profile().at(s), surface.pitch());
}

FundamentalForms fundamental_forms(const HelicoidalSurface& surface, double s, double t) {
    (void)t;  // closed forms are t-independent
    const ProfileState st = surface.profile().at(s);
    const double h = surface.pitch();
    const double c = std::cos(st.theta);
    const double n = std::sin(st.theta);
    const double w = st.x * st.x + h * h * c * c;
    if (w <= surface.eps_reg()) throw RegularityError("fundamental_forms: EG - F^2 below eps_reg");
    const double sq = std::sqrt(w);
    FundamentalForms forms;
    forms.E = 1.0;
    forms.F = h * n;
    forms.G = st.x * st.x + h * h;
    forms.e = st.x * st.theta_prime / sq;
    forms.f = -h * c * c / sq;
    forms.g = st.x * st.x * n / sq;
    return forms;
}

UnitVec3 normal_general(double x, double xp, double zp, double h, double t) {
    const double w = x * x + h * h * xp * xp;
    if (!(w > kDefaultEpsReg)) throw RegularityError("normal_general: degenerate denominator");
    const double sq = std::sqrt(w);
    const double c = std::cos(t);
    const double n = std::sin(t);
    return UnitVec3(Vec3{(h * xp * n - x * zp * c) / sq, (-h * xp * c - x * zp * n) / sq, x * xp / sq});
}

UnitVec3 normal_theta(const ProfileState& state, double h, double t) {
    const double ct = std::cos(state.theta);
    const double nt = std::sin(state.theta);
    const double w = state.x * state.x + h * h * ct * ct;
    if (!(w > kDefaultEpsReg)) throw RegularityError("normal_theta: degenerate denominator");
    const double sq = std::sqrt(w);
    const double c = std::cos(t);
    const double n = std::sin(t);
    return UnitVec3(Vec3{(h * ct * n - state.x * nt * c) / sq,
                         (-h * ct * c - state.x * nt * n) / sq,
                         state.x * ct / sq});
}

double mean_curvature_general(double x, double xp, double xpp, double zp, double zpp, double h) {
    const double w = x * x + h * h * xp * xp;
    if (!(w > kDefaultEpsReg)) throw RegularityError("mean_curvature_general: degenerate denominator");
    const double num = (xp * zpp - zp * xpp) * (x * x * x + h * h * x) + zp * (2.0 * h * h * xp * xp + x * x);
    return num / (w * std::sqrt(w));
}

double mean_curvature_theta(const ProfileState& state, double h) {
    const double c = std::cos(state.theta);
    const double n = std::sin(state.theta);
    const double w = state.x * state.x + h * h * c * c;
    if (!(w > kDefaultEpsReg)) throw RegularityError("mean_curvature_theta: degenerate denominator");
    const double num = state.x * (state.x * state.x + h * h) * state.theta_prime +
                       n * (state.x * state.x + 2.0 * h * h * c * c);
    return num / (w * std::sqrt(w));
}

}  // namespace helisurf
