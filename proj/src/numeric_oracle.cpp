#include "helisurf/numeric_oracle.hpp"

#include <cmath>

namespace helisurf {

namespace {

// All differencing runs in long double: at the default step 1e-5, double
// second differences carry ~1e-5 absolute roundoff, which would swamp the
// 1e-6 agreement this oracle exists to certify.
struct V3L {
    long double x = 0.0L, y = 0.0L, z = 0.0L;

    V3L operator+(const V3L& o) const { return {x + o.x, y + o.y, z + o.z}; }
    V3L operator-(const V3L& o) const { return {x - o.x, y - o.y, z - o.z}; }
    V3L operator*(long double k) const { return {x * k, y * k, z * k}; }
    V3L operator/(long double k) const { return {x / k, y / k, z / k}; }
    long double dot(const V3L& o) const { return x * o.x + y * o.y + z * o.z; }
    V3L cross(const V3L& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
};

V3L psi(const HelicoidalSurface& surface, long double s, long double t) {
    const Profile::PositionLd pos = surface.profile().position_ld(s);
    const long double h = surface.pitch();
    return {pos.x * std::cos(t), pos.x * std::sin(t), pos.z + h * t};
}

struct JetL {
    V3L point, ds, dt, dss, dst, dtt;
};

JetL fd_jet_ld(const HelicoidalSurface& surface, double s, double t, const FDConfig& cfg) {
    if (!(cfg.step > 0.0) || !(cfg.step < 1e-2) || !std::isfinite(cfg.step))
        throw std::invalid_argument("fd_jet: step must be in (0, 1e-2)");
    const auto dom = surface.profile().domain();
    if (s - 2.0 * cfg.step < dom.min || s + 2.0 * cfg.step > dom.max)
        throw DomainError("fd_jet: stencil underruns the profile domain");

    const long double h = cfg.step;
    const long double sl = s;
    const long double tl = t;
    const V3L c = psi(surface, sl, tl);
    const V3L sp = psi(surface, sl + h, tl);
    const V3L sm = psi(surface, sl - h, tl);
    const V3L tp = psi(surface, sl, tl + h);
    const V3L tm = psi(surface, sl, tl - h);
    const V3L spp = psi(surface, sl + h, tl + h);
    const V3L spm = psi(surface, sl + h, tl - h);
    const V3L smp = psi(surface, sl - h, tl + h);
    const V3L smm = psi(surface, sl - h, tl - h);

    JetL jet;
    jet.point = c;
    jet.ds = (sp - sm) / (2.0L * h);
    jet.dt = (tp - tm) / (2.0L * h);
    jet.dss = (sp - c * 2.0L + sm) / (h * h);
    jet.dtt = (tp - c * 2.0L + tm) / (h * h);
    jet.dst = (spp - spm - smp + smm) / (4.0L * h * h);
    return jet;
}

Vec3 narrow(const V3L& v) {
    return {static_cast<double>(v.x), static_cast<double>(v.y), static_cast<double>(v.z)};
}

}  // namespace

SurfaceJet fd_jet(const HelicoidalSurface& surface, double s, double t, const FDConfig& cfg) {
    const JetL jet = fd_jet_ld(surface, s, t, cfg);
    return {narrow(jet.point), narrow(jet.ds), narrow(jet.dt),
            narrow(jet.dss), narrow(jet.dst), narrow(jet.dtt)};
}

double fd_mean_curvature(const HelicoidalSurface& surface, double s, double t,
                         const FDConfig& cfg) {
    const JetL jet = fd_jet_ld(surface, s, t, cfg);
    const long double E = jet.ds.dot(jet.ds);
    const long double F = jet.ds.dot(jet.dt);
    const long double G = jet.dt.dot(jet.dt);
    const long double det = E * G - F * F;
    if (!(det > surface.eps_reg())) throw RegularityError("fd_mean_curvature: degenerate stencil");
    const V3L cross = jet.ds.cross(jet.dt);
    const V3L n = cross / std::sqrt(cross.dot(cross));
    const long double e = jet.dss.dot(n);
    const long double f = jet.dst.dot(n);
    const long double g = jet.dtt.dot(n);
    return static_cast<double>((e * G - 2.0L * f * F + g * E) / det);
}

}  // namespace helisurf
