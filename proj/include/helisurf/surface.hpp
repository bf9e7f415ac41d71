#pragma once

#include "helisurf/profile.hpp"
#include "helisurf/vec3.hpp"

namespace helisurf {

/// Default threshold on EG - F^2 below which the immersion is treated as
/// degenerate.
inline constexpr double kDefaultEpsReg = 1e-12;

/// Surface swept from a profile curve by the helicoidal motion group with
/// pitch h about the z-axis. h = 0 gives a surface of revolution.
class HelicoidalSurface {
public:
    HelicoidalSurface(Profile profile, double pitch, double eps_reg = kDefaultEpsReg);

    const Profile& profile() const { return profile_; }
    double pitch() const { return pitch_; }
    double eps_reg() const { return eps_reg_; }

private:
    Profile profile_;
    double pitch_;
    double eps_reg_;
};

/// Point and first/second partial derivatives of the parametrization at a
/// fixed (s,t).
struct SurfaceJet {
    Vec3 point;
    Vec3 ds;
    Vec3 dt;
    Vec3 dss;
    Vec3 dst;
    Vec3 dtt;
};

struct FundamentalForms {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double e = 0.0;
    double f = 0.0;
    double g = 0.0;
};

/// Rotation by angle t about the z-axis plus translation h*t along it.
Vec3 helicoidal_motion(const Vec3& p, double t, double h);

/// Psi(s,t) = H_t(gamma(s)) = (x cos t, x sin t, z + h t).
Vec3 parametrize(const HelicoidalSurface& surface, double s, double t);

/// Analytic partials of the parametrization, using x' = cos theta,
/// z' = sin theta, x'' = -theta' sin theta, z'' = theta' cos theta.
SurfaceJet surface_jet(const HelicoidalSurface& surface, double s, double t);

/// E = 1, F = h sin theta, G = x^2 + h^2 and the shape coefficients e, f, g.
/// t-independent; throws RegularityError when EG - F^2 <= eps_reg.
FundamentalForms fundamental_forms(const HelicoidalSurface& surface, double s, double t);

/// EG - F^2 = x^2 + h^2 cos^2 theta. Returns the value; callers threshold.
double regularity(const HelicoidalSurface& surface, double s);
double regularity(const ProfileState& state, double h);

/// Unit normal in the (x', z') form:
/// (h x' sin t - x z' cos t, -h x' cos t - x z' sin t, x x') / sqrt(x^2 + h^2 x'^2).
UnitVec3 normal_general(double x, double xp, double zp, double h, double t);

/// Unit normal in the theta form; equals normal_general under the
/// substitution x' = cos theta, z' = sin theta.
UnitVec3 normal_theta(const ProfileState& state, double h, double t);

/// Sum-of-principal-curvatures mean curvature in the (x', x'', z', z'') form:
/// H = [(x'z'' - z'x'')(x^3 + h^2 x) + z'(2 h^2 x'^2 + x^2)] / (h^2 x'^2 + x^2)^{3/2}.
double mean_curvature_general(double x, double xp, double xpp, double zp, double zpp, double h);

/// Theta form:
/// H = [x (x^2+h^2) theta' + sin theta (x^2 + 2 h^2 cos^2 theta)] / (x^2 + h^2 cos^2 theta)^{3/2}.
double mean_curvature_theta(const ProfileState& state, double h);

}  // namespace helisurf
