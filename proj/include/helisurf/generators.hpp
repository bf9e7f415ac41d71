#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "helisurf/surface.hpp"

namespace helisurf {

/// Initial data for the rotational (h = 0, v = (0,0,1)) profile equation.
/// Admissible trajectories keep x > 0 and z > 0; axis and halfspace floor
/// are singular for the equation.
struct RotationalODEState {
    double s = 0.0;
    double x = 1.0;
    double z = 1.0;
    double theta = 0.0;
};

/// Integration stops (with Profile::truncated() set) when x or z would drop
/// to this floor.
inline constexpr double kRotationalFloor = 1e-6;

/// Fixed-step RK4 on
///   (x', z', theta') = (cos theta, sin theta, (alpha x cos theta - z sin theta)/(x z))
/// from the given initial state. The trajectory, swept with h = 0, satisfies
/// the singular-minimal equation for direction (0,0,1); tests certify this
/// through the residual, not the derivation.
Profile integrate_rotational_profile(double alpha, const RotationalODEState& initial,
                                     double step = 1e-3, int n_steps = 2000);

/// Max |H - alpha <N,v>/<p,v>| for the h = 0, v = (0,0,1) surface over the
/// profile's cell-midpoint samples, restricted to samples the node spacing
/// resolves (|theta'| * step <= 0.02 and z >= 50 * step). Near the singular
/// floor z -> 0 the equation's 1/z terms amplify any fixed-step state error
/// without bound; the truncation flag marks arcs that reach the floor.
double max_interior_residual(const Profile& profile, double alpha);

/// Regular (s,t) sampling grid for meshing. Counts must be >= 2 and ranges
/// non-degenerate.
struct MeshSpec {
    double s_begin = 0.0;
    double s_end = 1.0;
    int s_count = 2;
    double t_begin = 0.0;
    double t_end = 1.0;
    int t_count = 2;
};

struct TriangleMesh {
    std::vector<Vec3> vertices;                         // s-major grid order
    std::vector<std::array<std::uint32_t, 3>> triangles;  // 0-based indices
};

/// Exact evaluations of the parametrization on the grid, two triangles per
/// quad, wound so triangle normals align with the surface normal at cell
/// centers. Throws RegularityError if any grid node is degenerate.
TriangleMesh build_mesh(const HelicoidalSurface& surface, const MeshSpec& spec);

/// Wavefront OBJ: "v x y z" lines (17 significant digits, '.' separator, LF),
/// then "f i j k" with 1-based indices. No normals/UVs, no comments.
void export_obj(const TriangleMesh& mesh, const std::filesystem::path& path);

/// CSV dump of an integrated profile's nodes: header "s,x,z,theta", one row
/// per step, 17 significant digits.
void write_profile_csv(const Profile& profile, const std::filesystem::path& path);

}  // namespace helisurf
