#include "helisurf/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "helisurf/residual.hpp"

namespace helisurf {

namespace {

struct RotSt {
    double x, z, th;
};

// theta' of the rotational (h = 0, vertical direction) profile equation.
double rot_rhs(double alpha, const RotSt& y) {
    return (alpha * y.x * std::cos(y.th) - y.z * std::sin(y.th)) / (y.x * y.z);
}

bool admissible(const RotSt& y) {
    return std::isfinite(y.x) && std::isfinite(y.z) && std::isfinite(y.th) &&
           y.x > kRotationalFloor && y.z > kRotationalFloor;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Profile integrate_rotational_profile(double alpha, const RotationalODEState& initial,
                                     double step, int n_steps) {
    if (!std::isfinite(alpha) || alpha == 0.0)
        throw std::invalid_argument("integrate_rotational_profile: alpha must be finite and nonzero");
    if (!std::isfinite(initial.s) || !std::isfinite(initial.theta))
        throw std::invalid_argument("integrate_rotational_profile: non-finite initial state");
    if (!(initial.x > kRotationalFloor) || !(initial.z > kRotationalFloor))
        throw std::invalid_argument("integrate_rotational_profile: initial x,z must exceed the floor");
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("integrate_rotational_profile: step must be positive");
    if (n_steps < 1) throw std::invalid_argument("integrate_rotational_profile: n_steps must be >= 1");

    std::vector<ProfileState> nodes;
    nodes.reserve(static_cast<std::size_t>(n_steps) + 1);
    RotSt y{initial.x, initial.z, initial.theta};
    nodes.push_back({initial.s, y.x, y.z, y.th, rot_rhs(alpha, y)});

    bool truncated = false;
    for (int i = 0; i < n_steps; ++i) {
        auto f = [alpha](const RotSt& yy) {
            return RotSt{std::cos(yy.th), std::sin(yy.th), rot_rhs(alpha, yy)};
        };
        const RotSt k1 = f(y);
        const RotSt y2{y.x + 0.5 * step * k1.x, y.z + 0.5 * step * k1.z, y.th + 0.5 * step * k1.th};
        if (!admissible(y2)) { truncated = true; break; }
        const RotSt k2 = f(y2);
        const RotSt y3{y.x + 0.5 * step * k2.x, y.z + 0.5 * step * k2.z, y.th + 0.5 * step * k2.th};
        if (!admissible(y3)) { truncated = true; break; }
        const RotSt k3 = f(y3);
        const RotSt y4{y.x + step * k3.x, y.z + step * k3.z, y.th + step * k3.th};
        if (!admissible(y4)) { truncated = true; break; }
        const RotSt k4 = f(y4);
        const RotSt next{y.x + step / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
                         y.z + step / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
                         y.th + step / 6.0 * (k1.th + 2.0 * k2.th + 2.0 * k3.th + k4.th)};
        if (!admissible(next)) { truncated = true; break; }
        y = next;
        nodes.push_back({initial.s + (i + 1) * step, y.x, y.z, y.th, rot_rhs(alpha, y)});
    }

    if (nodes.size() < 2)
        throw std::invalid_argument("integrate_rotational_profile: trajectory truncated at the first step");
    return Profile::from_nodes(std::move(nodes), truncated);
}

double max_interior_residual(const Profile& profile, double alpha) {
    const auto& nodes = profile.nodes();
    if (nodes.size() < 3)
        throw std::invalid_argument("max_interior_residual: profile has no interior cells");
    const double step = nodes[1].s - nodes[0].s;
    const HelicoidalSurface surface(profile, 0.0);
    const SMSParams params(alpha, UnitVec3(Vec3{0.0, 0.0, 1.0}));
    double worst = 0.0;
    for (std::size_t i = 1; i + 2 < nodes.size(); ++i) {
        const double s = 0.5 * (nodes[i].s + nodes[i + 1].s);
        const ProfileState st = profile.at(s);
        // Resolution conditions, both step-scaled: the spacing must resolve
        // the turning rate, and the sample must sit above the floor boundary
        // layer where the equation's 1/z terms amplify state error.
        if (std::fabs(st.theta_prime) * step > 0.02) continue;
        if (st.z < 50.0 * step) continue;
        worst = std::max(worst, std::fabs(residual(surface, params, s, 0.0)));
    }
    return worst;
}

TriangleMesh build_mesh(const HelicoidalSurface& surface, const MeshSpec& spec) {
    if (spec.s_count < 2 || spec.t_count < 2)
        throw std::invalid_argument("build_mesh: counts must be >= 2");
    if (!(spec.s_begin != spec.s_end) || !(spec.t_begin != spec.t_end) ||
        !std::isfinite(spec.s_begin) || !std::isfinite(spec.s_end) ||
        !std::isfinite(spec.t_begin) || !std::isfinite(spec.t_end))
        throw std::invalid_argument("build_mesh: ranges must be finite and non-degenerate");

    const int ns = spec.s_count;
    const int nt = spec.t_count;
    auto s_at = [&](double u) { return spec.s_begin * (1.0 - u) + spec.s_end * u; };
    auto t_at = [&](double u) { return spec.t_begin * (1.0 - u) + spec.t_end * u; };

    TriangleMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(ns) * nt);
    for (int i = 0; i < ns; ++i) {
        const double s = s_at(static_cast<double>(i) / (ns - 1));
        if (regularity(surface, s) <= surface.eps_reg())
            throw RegularityError("build_mesh: degenerate grid node");
        for (int j = 0; j < nt; ++j) {
            const double t = t_at(static_cast<double>(j) / (nt - 1));
            mesh.vertices.push_back(parametrize(surface, s, t));
        }
    }

    // Orientation fixed once from the first cell against the surface normal.
    auto vid = [nt](int i, int j) { return static_cast<std::uint32_t>(i * nt + j); };
    bool flip = false;
    {
        const double sc = s_at(0.5 / (ns - 1));
        const double tc = t_at(0.5 / (nt - 1));
        const Vec3& a = mesh.vertices[vid(0, 0)];
        const Vec3& b = mesh.vertices[vid(1, 0)];
        const Vec3& c = mesh.vertices[vid(1, 1)];
        const Vec3 tri_n = (b - a).cross(c - a);
        const UnitVec3 n = normal_theta(surface.profile().at(sc), surface.pitch(), tc);
        flip = tri_n.dot(n.vec()) < 0.0;
    }

    mesh.triangles.reserve(static_cast<std::size_t>(ns - 1) * (nt - 1) * 2);
    for (int i = 0; i + 1 < ns; ++i) {
        for (int j = 0; j + 1 < nt; ++j) {
            std::array<std::uint32_t, 3> t1{vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)};
            std::array<std::uint32_t, 3> t2{vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)};
            if (flip) {
                std::swap(t1[1], t1[2]);
                std::swap(t2[1], t2[2]);
            }
            mesh.triangles.push_back(t1);
            mesh.triangles.push_back(t2);
        }
    }
    return mesh;
}

void export_obj(const TriangleMesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("export_obj: cannot open " + path.string());
    for (const Vec3& v : mesh.vertices)
        out << "v " << format_g17(v.x) << ' ' << format_g17(v.y) << ' ' << format_g17(v.z) << '\n';
    for (const auto& t : mesh.triangles)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    out.flush();
    if (!out) throw std::runtime_error("export_obj: write failed for " + path.string());
}

void write_profile_csv(const Profile& profile, const std::filesystem::path& path) {
    if (profile.nodes().empty())
        throw std::invalid_argument("write_profile_csv: profile has no integration nodes");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_profile_csv: cannot open " + path.string());
    out << "s,x,z,theta\n";
    for (const ProfileState& st : profile.nodes())
        out << format_g17(st.s) << ',' << format_g17(st.x) << ',' << format_g17(st.z) << ','
            << format_g17(st.theta) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write_profile_csv: write failed for " + path.string());
}

}  // namespace helisurf
