#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "helisurf/errors.hpp"

namespace helisurf {

/// One arc-length sample of the generating curve: position (x,z), turning
/// angle theta with x' = cos(theta), z' = sin(theta), and planar curvature
/// theta' (1/length).
struct ProfileState {
    double s = 0.0;
    double x = 0.0;
    double z = 0.0;
    double theta = 0.0;
    double theta_prime = 0.0;
};

/// Planar generating curve gamma(s) = (x(s), 0, z(s)), parametrized by arc
/// length over a closed interval. Closed-form variants evaluate exactly;
/// integrated variants are fixed-step RK4 trajectories with cubic Hermite
/// evaluation of (x, z, theta) between nodes.
///
/// Immutable after construction; cheap to copy and safe to share across
/// threads.
class Profile {
public:
    enum class Kind { ClosedFormCylinder, ClosedFormLine, Integrated };

    struct Interval {
        double min = 0.0;
        double max = 0.0;
    };

    /// Position evaluated in extended precision; used by the
    /// finite-difference oracle to keep differencing noise below the
    /// comparison tolerances. Same interpolant as at(), wider arithmetic.
    struct PositionLd {
        long double x = 0.0L;
        long double z = 0.0L;
    };

    static constexpr double kDefaultSMin = -10.0;
    static constexpr double kDefaultSMax = 10.0;

    /// Vertical line x = x0 (x0 != 0): theta = sign*pi/2, z(s) = sign*s + z0.
    static Profile cylinder(double x0, double z0, int sign,
                            double s_min = kDefaultSMin, double s_max = kDefaultSMax);

    /// Straight profile: theta constant, x = x0 + s cos(theta0),
    /// z = z0 + s sin(theta0). theta0 = 0 generates helicoids.
    static Profile line(double theta0, double x0, double z0,
                        double s_min = kDefaultSMin, double s_max = kDefaultSMax);

    /// Fixed-step RK4 on (x', z', theta') = (cos theta, sin theta, kappa(s))
    /// from (s0, x0, z0, theta0). Domain is [s0, s0 + step*n_steps].
    static Profile integrate(std::function<double(double)> curvature,
                             double s0, double x0, double z0, double theta0,
                             double step = 1e-3, int n_steps = 1000);

    /// Node-driven variant (uniform spacing required); used by generators
    /// that integrate their own state equations. theta' between nodes is
    /// reconstructed by 4-point local Lagrange interpolation of the node
    /// theta' values.
    static Profile from_nodes(std::vector<ProfileState> nodes, bool truncated = false);

    /// Evaluate at arc length s. Throws DomainError outside the closed
    /// domain (no extrapolation).
    ProfileState at(double s) const;

    PositionLd position_ld(long double s) const;

    Interval domain() const;
    Kind kind() const;

    /// True when an integrating constructor stopped before its requested
    /// span (see generators).
    bool truncated() const;

    /// Integration nodes (empty for closed-form variants).
    const std::vector<ProfileState>& nodes() const;

private:
    struct Data;
    explicit Profile(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

}  // namespace helisurf
