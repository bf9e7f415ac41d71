#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "helisurf/profile.hpp"
#include "helisurf/residual.hpp"

namespace helisurf {

inline constexpr double kDefaultTolZero = 1e-10;

enum class Verdict { SingularMinimal, NotSingularMinimal, Degenerate };

std::string to_string(Verdict v);

/// Location and value of the largest cleared residual seen by a check.
struct Witness {
    double s = 0.0;
    double t = 0.0;
    double value = 0.0;
};

struct CertificationReport {
    std::string label;
    Verdict verdict = Verdict::Degenerate;
    /// Which case of the analysis fired: "x==0", "cos_theta==0" or "generic"
    /// (check_vertical_direction), or the predicate text (certify_cylinder).
    std::string subcase;
    /// max |A_i| over the sampled states.
    double max_abs_a0 = 0.0;
    double max_abs_a1 = 0.0;
    double max_abs_a2 = 0.0;
    double max_abs_a3 = 0.0;
    Witness witness;
};

nlohmann::json to_json(const CertificationReport& report);

/// Evaluates the cylinder-case closed-form quadruple
///   (x0^2 z v3, x0^2 h v3, x0^3 v2 (1+alpha), x0^3 v1 (1+alpha))
/// over a z-sample set. SingularMinimal iff all magnitudes stay below
/// tol_zero, which happens exactly when v3 = 0 and alpha = -1.
CertificationReport certify_cylinder(double x0, double z0, int sign, double h,
                                     double alpha, const UnitVec3& v,
                                     double tol_zero = kDefaultTolZero);

/// Samples (A0, A1) of the vertical-direction expansion along the profile.
/// For h != 0 the verdict is never SingularMinimal: a genuine screw motion
/// cannot keep <p,v> in step with the t-independent left-hand side when v
/// points along the axis.
CertificationReport check_vertical_direction(const Profile& profile, double h, double alpha,
                                             double tol_zero = kDefaultTolZero);

/// Piecewise-constant-curvature profile family member.
struct ProfileFamilyMember {
    double x0 = 1.0;
    double z0 = 1.0;
    double theta0 = 0.0;
    std::vector<double> curvatures;  // one value per segment
    double segment_length = 0.5;
};

/// Deterministic grid over (profile family) x (h, alpha, v).
struct SearchGrid {
    int segments = 3;
    std::vector<double> curvature_values;  // per-segment candidates
    double segment_length = 0.5;
    std::vector<double> x0_values;
    std::vector<double> z0_values;
    std::vector<double> theta0_values;
    std::vector<double> pitches;  // all nonzero
    std::vector<double> alphas;
    std::vector<UnitVec3> directions;
    int s_samples_per_segment = 4;
    std::vector<double> t_samples;
    double integration_step = 1e-3;
    double tol_zero = kDefaultTolZero;
    /// Surfaces whose sampled regularity drops below this are skipped.
    double regularity_floor = 1e-6;

    /// Desk-scale default: 3 segments, curvatures {-1,0,1}, x0 {0.8,1.5},
    /// theta0 {0, pi/4, pi/2}, h {0.5,1}, alpha {-2,-1,1}, 26-point
    /// direction grid.
    static SearchGrid defaults();
};

/// All family members of a grid in deterministic order: x0, z0, theta0
/// outer, per-segment curvature odometer inner.
std::vector<ProfileFamilyMember> enumerate_profile_family(const SearchGrid& grid);

/// RK4 profile for a family member (domain [0, segments * segment_length]).
Profile build_family_profile(const ProfileFamilyMember& member, double integration_step);

/// One (h, alpha, v) cell of the falsification sweep.
struct FalsificationEntry {
    double h = 0.0;
    double alpha = 0.0;
    UnitVec3 v{Vec3{0.0, 0.0, 1.0}};
    /// min over the profile family of max over (s,t) samples of |F|.
    double score = 0.0;
    ProfileFamilyMember best_profile;
    Witness witness;
    /// Classification predicate for this cell: alpha = -1 and v3 = 0.
    bool certified_expected = false;
    std::size_t lex_index = 0;
};

struct SkippedSurface {
    ProfileFamilyMember profile;
    double h = 0.0;
    std::string reason;
};

struct FalsificationReport {
    std::vector<FalsificationEntry> ranked;  // ascending score, ties by grid order
    std::vector<SkippedSurface> skipped;
    double max_certified_score = 0.0;
    double min_noncertified_score = 0.0;
    /// Certified cells all below tol_zero and non-certified cells all at or
    /// above 10x tol_zero.
    bool theorem_consistent = false;
    double tol_zero = kDefaultTolZero;
};

nlohmann::json to_json(const FalsificationEntry& entry);
nlohmann::json to_json(const FalsificationReport& report);

/// Sweeps the grid, minimizing over the profile family the sampled max
/// |cleared_residual| for every (h, alpha, v). Deterministic: fixed
/// lexicographic iteration, stable ranking. Throws std::invalid_argument on
/// an empty grid, a zero pitch, or when every surface is skipped.
FalsificationReport falsification_search(const SearchGrid& grid);

}  // namespace helisurf
