#include "helisurf/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace helisurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

// t values used when locating the witness of a coefficient check.
constexpr std::array<double, 8> kWitnessT{0.0, kPi / 3.0, kPi / 2.0, 1.0, 2.0, 3.5, 5.0, 6.0};

double reconstruct(const CoefficientQuadruple& q, double t) {
    return q.a0 + q.a1 * t + q.a2 * std::sin(t) + q.a3 * std::cos(t);
}

nlohmann::json witness_json(const Witness& w) {
    return {{"s", w.s}, {"t", w.t}, {"F", w.value}};
}

nlohmann::json profile_json(const ProfileFamilyMember& p) {
    return {{"x0", p.x0},
            {"z0", p.z0},
            {"theta0", p.theta0},
            {"curvatures", p.curvatures},
            {"segment_length", p.segment_length}};
}

nlohmann::json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::SingularMinimal: return "SingularMinimal";
        case Verdict::NotSingularMinimal: return "NotSingularMinimal";
        case Verdict::Degenerate: return "Degenerate";
    }
    return "?";
}

nlohmann::json to_json(const CertificationReport& report) {
    return {{"label", report.label},
            {"verdict", to_string(report.verdict)},
            {"subcase", report.subcase},
            {"max_abs_coefficients",
             {{"A0", report.max_abs_a0},
              {"A1", report.max_abs_a1},
              {"A2", report.max_abs_a2},
              {"A3", report.max_abs_a3}}},
            {"witness", witness_json(report.witness)}};
}

CertificationReport certify_cylinder(double x0, double z0, int sign, double h, double alpha,
                                     const UnitVec3& v, double tol_zero) {
    if (x0 == 0.0 || !std::isfinite(x0))
        throw std::invalid_argument("certify_cylinder: x0 must be nonzero");
    if (sign != 1 && sign != -1) throw std::invalid_argument("certify_cylinder: sign must be +-1");

    CertificationReport report;
    report.label = "cylinder(x0=" + std::to_string(x0) + ",h=" + std::to_string(h) +
                   ",alpha=" + std::to_string(alpha) + ")";
    report.subcase = "v3==0 && alpha==-1";

    const double x2 = x0 * x0;
    const double x3 = x2 * x0;
    double max_f = -1.0;
    for (int i = 0; i <= 8; ++i) {
        const double s = -2.0 + 0.5 * i;
        const double z = sign * s + z0;
        CoefficientQuadruple q{x2 * z * v.z(), x2 * h * v.z(), x3 * v.y() * (1.0 + alpha),
                               x3 * v.x() * (1.0 + alpha)};
        report.max_abs_a0 = std::max(report.max_abs_a0, std::fabs(q.a0));
        report.max_abs_a1 = std::max(report.max_abs_a1, std::fabs(q.a1));
        report.max_abs_a2 = std::max(report.max_abs_a2, std::fabs(q.a2));
        report.max_abs_a3 = std::max(report.max_abs_a3, std::fabs(q.a3));
        for (double t : kWitnessT) {
            const double f = reconstruct(q, t);
            if (std::fabs(f) > max_f) {
                max_f = std::fabs(f);
                report.witness = {s, t, f};
            }
        }
    }
    const bool zero = report.max_abs_a0 < tol_zero && report.max_abs_a1 < tol_zero &&
                      report.max_abs_a2 < tol_zero && report.max_abs_a3 < tol_zero;
    report.verdict = zero ? Verdict::SingularMinimal : Verdict::NotSingularMinimal;
    return report;
}

CertificationReport check_vertical_direction(const Profile& profile, double h, double alpha, double tol_zero) {
    if (h == 0.0 || !std::isfinite(h))
        throw std::invalid_argument("check_vertical_direction: pitch must be nonzero");

    const auto dom = profile.domain();
    constexpr int kSamples = 41;
    std::vector<ProfileState> states;
    states.reserve(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        const double u = static_cast<double>(i) / (kSamples - 1);
        states.push_back(profile.at(dom.min * (1.0 - u) + dom.max * u));
    }

    double max_x = 0.0;
    double max_cos = 0.0;
    for (const ProfileState& st : states) {
        max_x = std::max(max_x, std::fabs(st.x));
        max_cos = std::max(max_cos, std::fabs(std::cos(st.theta)));
    }

    CertificationReport report;
    report.label = "vertical_direction(h=" + std::to_string(h) + ",alpha=" + std::to_string(alpha) + ")";
    constexpr double kIdenticallyZero = 1e-9;
    if (max_x < kIdenticallyZero) {
        // x == 0 forces cos(theta) == 0 and regularity is lost.
        report.subcase = "x==0";
        report.verdict = Verdict::Degenerate;
        return report;
    }
    report.subcase = max_cos < kIdenticallyZero ? "cos_theta==0" : "generic";

    double max_f = -1.0;
    for (const ProfileState& st : states) {
        const VerticalCoefficients vc = coefficients_vertical(st, h, alpha);
        report.max_abs_a0 = std::max(report.max_abs_a0, std::fabs(vc.a0));
        report.max_abs_a1 = std::max(report.max_abs_a1, std::fabs(vc.a1));
        for (double t : kWitnessT) {
            const double f = vc.a0 + vc.a1 * t;
            if (std::fabs(f) > max_f) {
                max_f = std::fabs(f);
                report.witness = {st.s, t, f};
            }
        }
    }
    const bool zero = report.max_abs_a0 < tol_zero && report.max_abs_a1 < tol_zero;
    report.verdict = zero ? Verdict::SingularMinimal : Verdict::NotSingularMinimal;
    return report;
}

SearchGrid SearchGrid::defaults() {
    SearchGrid grid;
    grid.segments = 3;
    grid.curvature_values = {-1.0, 0.0, 1.0};
    grid.segment_length = 0.5;
    grid.x0_values = {0.8, 1.5};
    grid.z0_values = {1.0};
    grid.theta0_values = {0.0, kPi / 4.0, kPi / 2.0};
    grid.pitches = {0.5, 1.0};
    grid.alphas = {-2.0, -1.0, 1.0};
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            for (int k = -1; k <= 1; ++k) {
                if (i == 0 && j == 0 && k == 0) continue;
                grid.directions.push_back(UnitVec3::normalized(
                    Vec3{static_cast<double>(i), static_cast<double>(j), static_cast<double>(k)}));
            }
    grid.s_samples_per_segment = 4;
    grid.t_samples = {0.0, 0.7, 1.4, 2.1, 2.8, 3.5, 4.2, 4.9};
    return grid;
}

std::vector<ProfileFamilyMember> enumerate_profile_family(const SearchGrid& grid) {
    if (grid.segments < 1 || grid.curvature_values.empty() || grid.x0_values.empty() ||
        grid.z0_values.empty() || grid.theta0_values.empty())
        throw std::invalid_argument("enumerate_profile_family: empty family grid");
    std::vector<ProfileFamilyMember> family;
    std::vector<std::size_t> digits(static_cast<std::size_t>(grid.segments), 0);
    for (double x0 : grid.x0_values)
        for (double z0 : grid.z0_values)
            for (double theta0 : grid.theta0_values) {
                std::fill(digits.begin(), digits.end(), 0);
                while (true) {
                    ProfileFamilyMember member;
                    member.x0 = x0;
                    member.z0 = z0;
                    member.theta0 = theta0;
                    member.segment_length = grid.segment_length;
                    for (std::size_t d : digits) member.curvatures.push_back(grid.curvature_values[d]);
                    family.push_back(std::move(member));

                    int pos = grid.segments - 1;
                    while (pos >= 0 && ++digits[pos] == grid.curvature_values.size()) {
                        digits[pos] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                }
            }
    return family;
}

Profile build_family_profile(const ProfileFamilyMember& member, double integration_step) {
    if (member.curvatures.empty())
        throw std::invalid_argument("build_family_profile: member has no segments");
    const double total = member.curvatures.size() * member.segment_length;
    const int n_steps = std::max(1, static_cast<int>(std::llround(total / integration_step)));
    auto kappa = [curvs = member.curvatures, seg = member.segment_length](double s) {
        const int idx = std::clamp(static_cast<int>(std::floor(s / seg)), 0,
                                   static_cast<int>(curvs.size()) - 1);
        return curvs[static_cast<std::size_t>(idx)];
    };
    return Profile::integrate(kappa, 0.0, member.x0, member.z0, member.theta0, integration_step,
                              n_steps);
}

nlohmann::json to_json(const FalsificationEntry& entry) {
    return {{"config",
             {{"h", entry.h},
              {"alpha", entry.alpha},
              {"v", {entry.v.x(), entry.v.y(), entry.v.z()}}}},
            {"score", entry.score},
            {"profile", profile_json(entry.best_profile)},
            {"witness", witness_json(entry.witness)},
            {"certified_expected", entry.certified_expected},
            {"lex_index", entry.lex_index}};
}

nlohmann::json to_json(const FalsificationReport& report) {
    nlohmann::json ranked = nlohmann::json::array();
    for (const auto& e : report.ranked) ranked.push_back(to_json(e));
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& s : report.skipped)
        skipped.push_back({{"profile", profile_json(s.profile)}, {"h", s.h}, {"reason", s.reason}});
    return {{"tol_zero", report.tol_zero},
            {"ranked", ranked},
            {"skipped", skipped},
            {"max_certified_score", finite_or_string(report.max_certified_score)},
            {"min_noncertified_score", finite_or_string(report.min_noncertified_score)},
            {"theorem_consistent", report.theorem_consistent}};
}

FalsificationReport falsification_search(const SearchGrid& grid) {
    if (grid.segments < 1 || grid.curvature_values.empty() || grid.x0_values.empty() ||
        grid.z0_values.empty() || grid.theta0_values.empty() || grid.pitches.empty() ||
        grid.alphas.empty() || grid.directions.empty() || grid.t_samples.empty() ||
        grid.s_samples_per_segment < 1)
        throw std::invalid_argument("falsification_search: empty grid");
    for (double h : grid.pitches)
        if (h == 0.0 || !std::isfinite(h))
            throw std::invalid_argument("falsification_search: pitches must be nonzero");
    if (!(grid.segment_length > 0.0) || !(grid.integration_step > 0.0))
        throw std::invalid_argument("falsification_search: bad segment length or step");

    // Enumerate the profile family once; states are pitch-independent.
    struct FamilyEntry {
        ProfileFamilyMember member;
        std::vector<ProfileState> states;
    };
    const int n_s = grid.segments * grid.s_samples_per_segment;

    std::vector<FamilyEntry> family;
    for (ProfileFamilyMember& member : enumerate_profile_family(grid)) {
        const Profile profile = build_family_profile(member, grid.integration_step);
        FamilyEntry entry;
        entry.member = std::move(member);
        const double s_end = profile.domain().max;
        entry.states.reserve(n_s);
        for (int i = 0; i < n_s; ++i) entry.states.push_back(profile.at((i + 0.5) * s_end / n_s));
        family.push_back(std::move(entry));
    }

    FalsificationReport report;
    report.tol_zero = grid.tol_zero;
    report.max_certified_score = 0.0;
    report.min_noncertified_score = std::numeric_limits<double>::infinity();

    // Which family members survive the regularity screen, per pitch.
    std::vector<std::vector<const FamilyEntry*>> usable(grid.pitches.size());
    for (std::size_t ih = 0; ih < grid.pitches.size(); ++ih) {
        const double h = grid.pitches[ih];
        for (const FamilyEntry& entry : family) {
            double min_reg = std::numeric_limits<double>::infinity();
            for (const ProfileState& st : entry.states) min_reg = std::min(min_reg, regularity(st, h));
            if (min_reg <= grid.regularity_floor) {
                report.skipped.push_back({entry.member, h,
                                          "regularity " + std::to_string(min_reg) + " at or below floor"});
            } else {
                usable[ih].push_back(&entry);
            }
        }
    }

    std::size_t lex = 0;
    for (std::size_t ih = 0; ih < grid.pitches.size(); ++ih) {
        const double h = grid.pitches[ih];
        for (double alpha : grid.alphas) {
            for (const UnitVec3& v : grid.directions) {
                const SMSParams params(alpha, v);
                FalsificationEntry cell;
                cell.h = h;
                cell.alpha = alpha;
                cell.v = v;
                cell.lex_index = lex++;
                cell.certified_expected = std::fabs(alpha + 1.0) <= 1e-12 && std::fabs(v.z()) <= 1e-12;
                cell.score = std::numeric_limits<double>::infinity();
                for (const FamilyEntry* entry : usable[ih]) {
                    Witness wit;
                    bool first = true;
                    for (const ProfileState& st : entry->states) {
                        for (double t : grid.t_samples) {
                            const double f = cleared_residual(st, h, params, t);
                            if (first || std::fabs(f) > std::fabs(wit.value)) {
                                wit = {st.s, t, f};
                                first = false;
                            }
                        }
                    }
                    if (std::fabs(wit.value) < cell.score) {
                        cell.score = std::fabs(wit.value);
                        cell.best_profile = entry->member;
                        cell.witness = wit;
                    }
                }
                if (!std::isfinite(cell.score)) continue;  // every profile skipped for this pitch
                if (cell.certified_expected)
                    report.max_certified_score = std::max(report.max_certified_score, cell.score);
                else
                    report.min_noncertified_score = std::min(report.min_noncertified_score, cell.score);
                report.ranked.push_back(std::move(cell));
            }
        }
    }

    if (report.ranked.empty())
        throw std::invalid_argument("falsification_search: every grid surface was skipped");

    std::stable_sort(report.ranked.begin(), report.ranked.end(),
                     [](const FalsificationEntry& a, const FalsificationEntry& b) {
                         return a.score < b.score;
                     });
    report.theorem_consistent = report.max_certified_score < grid.tol_zero &&
                                report.min_noncertified_score >= 10.0 * grid.tol_zero;
    return report;
}

}  // namespace helisurf
