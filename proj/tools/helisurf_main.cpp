// helisurf: curvature evaluation, singular-minimal residual/coefficient
// reports, theorem certification, rotational profile generation and mesh
// export for helicoidal surfaces.
//
// Exit codes: 0 success/consistent, 1 theorem inconsistency detected,
// 2 geometric precondition failure, 3 usage/config error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "helisurf/classifier.hpp"
#include "helisurf/generators.hpp"
#include "helisurf/numeric_oracle.hpp"
#include "helisurf/residual.hpp"

using nlohmann::json;
using namespace helisurf;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Effective configuration, echoed verbatim into every report header.
class Echo {
public:
    void add(const std::string& key, const std::string& value) { kv_.emplace_back(key, value); }
    void add(const std::string& key, double value) { kv_.emplace_back(key, g17(value)); }
    void add(const std::string& key, int value) { kv_.emplace_back(key, std::to_string(value)); }

    void comment_block(std::ostream& os) const {
        for (const auto& [k, v] : kv_) os << "# " << k << "=" << v << "\n";
    }
    json to_json() const {
        json j = json::object();
        for (const auto& [k, v] : kv_) j[k] = v;
        return j;
    }

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

/// "-" selects stdout.
struct OutputTarget {
    explicit OutputTarget(const std::string& path) {
        if (path == "-") {
            os = &std::cout;
        } else {
            file.open(path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ofstream file;
    std::ostream* os = nullptr;
};

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("profile descriptor: expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

double to_double(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number '" + text + "' for " + what);
    }
}

double take(std::map<std::string, std::string>& kv, const std::string& key, double fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    const double v = to_double(it->second, key);
    kv.erase(it);
    return v;
}

double take_required(std::map<std::string, std::string>& kv, const std::string& key,
                     const std::string& kind) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("profile descriptor '" + kind + "' requires " + key);
    const double v = to_double(it->second, key);
    kv.erase(it);
    return v;
}

/// Grammar: kind:key=val,...
///   cylinder:x0=1,z0=0,sign=+[,smin=-10,smax=10]
///   line:theta0=0.5,x0=1,z0=0[,smin=-10,smax=10]
///   integrated:kappa=0.5|−0.2|1,seglen=0.5,x0=1,z0=1,theta0=0[,s0=0,step=1e-3,n=1500]
Profile parse_profile(const std::string& desc) {
    const auto colon = desc.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("profile descriptor must look like kind:key=val,...");
    const std::string kind = desc.substr(0, colon);
    auto kv = parse_kv(desc.substr(colon + 1));

    Profile profile = [&]() {
        if (kind == "cylinder") {
            const double x0 = take_required(kv, "x0", kind);
            const double z0 = take(kv, "z0", 0.0);
            int sign = +1;
            if (const auto it = kv.find("sign"); it != kv.end()) {
                if (it->second == "+" || it->second == "+1" || it->second == "1") sign = +1;
                else if (it->second == "-" || it->second == "-1") sign = -1;
                else throw std::invalid_argument("cylinder sign must be + or -");
                kv.erase(it);
            }
            const double smin = take(kv, "smin", Profile::kDefaultSMin);
            const double smax = take(kv, "smax", Profile::kDefaultSMax);
            return Profile::cylinder(x0, z0, sign, smin, smax);
        }
        if (kind == "line") {
            const double theta0 = take(kv, "theta0", 0.0);
            const double x0 = take_required(kv, "x0", kind);
            const double z0 = take(kv, "z0", 0.0);
            const double smin = take(kv, "smin", Profile::kDefaultSMin);
            const double smax = take(kv, "smax", Profile::kDefaultSMax);
            return Profile::line(theta0, x0, z0, smin, smax);
        }
        if (kind == "integrated") {
            const auto it = kv.find("kappa");
            if (it == kv.end()) throw std::invalid_argument("integrated profile requires kappa");
            std::vector<double> kappas;
            std::stringstream ss(it->second);
            std::string piece;
            while (std::getline(ss, piece, '|')) kappas.push_back(to_double(piece, "kappa"));
            kv.erase(it);
            if (kappas.empty()) throw std::invalid_argument("kappa list is empty");
            const double seglen = take(kv, "seglen", 0.5);
            const double x0 = take_required(kv, "x0", kind);
            const double z0 = take(kv, "z0", 0.0);
            const double theta0 = take(kv, "theta0", 0.0);
            const double s0 = take(kv, "s0", 0.0);
            const double step = take(kv, "step", 1e-3);
            const int n = static_cast<int>(take(kv, "n", 1000.0));
            auto kappa = [kappas, seglen, s0](double s) {
                const int idx = std::clamp(static_cast<int>(std::floor((s - s0) / seglen)), 0,
                                           static_cast<int>(kappas.size()) - 1);
                return kappas[static_cast<std::size_t>(idx)];
            };
            return Profile::integrate(kappa, s0, x0, z0, theta0, step, n);
        }
        throw std::invalid_argument("unknown profile kind '" + kind + "'");
    }();

    if (!kv.empty())
        throw std::invalid_argument("profile descriptor: unknown key '" + kv.begin()->first + "'");
    return profile;
}

/// "a:b:n" inclusive range, or a single value.
std::vector<double> parse_range(const std::string& text) {
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) return {to_double(text, "range")};
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::invalid_argument("range must be start:end:count");
    const double a = to_double(text.substr(0, c1), "range start");
    const double b = to_double(text.substr(c1 + 1, c2 - c1 - 1), "range end");
    const int n = static_cast<int>(to_double(text.substr(c2 + 1), "range count"));
    if (n < 1) throw std::invalid_argument("range count must be >= 1");
    if (n == 1) return {a};
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / (n - 1);
        out.push_back(a * (1.0 - u) + b * u);
    }
    return out;
}

UnitVec3 parse_direction(const std::string& text) {
    std::stringstream ss(text);
    std::string piece;
    std::vector<double> comp;
    while (std::getline(ss, piece, ',')) comp.push_back(to_double(piece, "direction"));
    if (comp.size() != 3) throw std::invalid_argument("direction must be x,y,z");
    return UnitVec3::normalized(Vec3{comp[0], comp[1], comp[2]});
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    return cfg;
}

/// Flags override config-file values which override defaults.
template <typename T>
T resolve(const std::optional<T>& cli, const json& cfg, const std::string& key, T fallback) {
    if (cli) return *cli;
    if (cfg.contains(key)) {
        try {
            return cfg.at(key).get<T>();
        } catch (const json::exception&) {
            throw std::invalid_argument("config key '" + key + "' has the wrong type");
        }
    }
    return fallback;
}

template <typename T>
T resolve_required(const std::optional<T>& cli, const json& cfg, const std::string& key) {
    if (cli) return *cli;
    if (cfg.contains(key)) {
        try {
            return cfg.at(key).get<T>();
        } catch (const json::exception&) {
            throw std::invalid_argument("config key '" + key + "' has the wrong type");
        }
    }
    throw std::invalid_argument("missing required option --" + key);
}

// ---------------------------------------------------------------------------
// curvature: CSV of s,t,H_closed,H_fd,abs_diff
// ---------------------------------------------------------------------------

struct CurvatureArgs {
    std::optional<std::string> profile, s, t, output, config;
    std::optional<double> pitch, fd_step, eps_reg;
};

int cmd_curvature(const CurvatureArgs& args) {
    const json cfg = args.config ? load_config(*args.config) : json::object();
    const std::string profile_desc = resolve_required(args.profile, cfg, "profile");
    const double pitch = resolve_required(args.pitch, cfg, "pitch");
    const std::string s_text = resolve(args.s, cfg, "s", std::string("0"));
    const std::string t_text = resolve(args.t, cfg, "t", std::string("0"));
    const double fd_step = resolve(args.fd_step, cfg, "fd-step", 1e-5);
    const double eps_reg = resolve(args.eps_reg, cfg, "eps-reg", kDefaultEpsReg);
    const std::string output = resolve(args.output, cfg, "output", std::string("-"));

    Echo echo;
    echo.add("command", "curvature");
    echo.add("profile", profile_desc);
    echo.add("pitch", pitch);
    echo.add("s", s_text);
    echo.add("t", t_text);
    echo.add("fd-step", fd_step);
    echo.add("eps-reg", eps_reg);
    echo.add("output", output);

    const HelicoidalSurface surface(parse_profile(profile_desc), pitch, eps_reg);
    const std::vector<double> s_values = parse_range(s_text);
    const std::vector<double> t_values = parse_range(t_text);

    OutputTarget target(output);
    echo.comment_block(*target.os);
    *target.os << "s,t,H_closed,H_fd,abs_diff\n";
    for (double s : s_values) {
        if (regularity(surface, s) <= eps_reg)
            throw RegularityError("curvature: regularity below eps-reg at s=" + g17(s));
        const double closed = mean_curvature_theta(surface.profile().at(s), pitch);
        for (double t : t_values) {
            const double fd = fd_mean_curvature(surface, s, t, {fd_step});
            *target.os << g17(s) << ',' << g17(t) << ',' << g17(closed) << ',' << g17(fd) << ','
                       << g17(std::fabs(closed - fd)) << "\n";
        }
    }
    target.os->flush();
    return 0;
}

// ---------------------------------------------------------------------------
// coeffs: CSV of s,A0,A1,A2,A3 plus the two combination values
// ---------------------------------------------------------------------------

struct CoeffsArgs {
    std::optional<std::string> profile, s, v, output, config;
    std::optional<double> pitch, alpha, eps_reg;
};

int cmd_coeffs(const CoeffsArgs& args) {
    const json cfg = args.config ? load_config(*args.config) : json::object();
    const std::string profile_desc = resolve_required(args.profile, cfg, "profile");
    const double pitch = resolve_required(args.pitch, cfg, "pitch");
    const double alpha = resolve_required(args.alpha, cfg, "alpha");
    const std::string v_text = resolve(args.v, cfg, "v", std::string("0,0,1"));
    const std::string s_text = resolve(args.s, cfg, "s", std::string("0"));
    const double eps_reg = resolve(args.eps_reg, cfg, "eps-reg", kDefaultEpsReg);
    const std::string output = resolve(args.output, cfg, "output", std::string("-"));

    const UnitVec3 v = parse_direction(v_text);
    Echo echo;
    echo.add("command", "coeffs");
    echo.add("profile", profile_desc);
    echo.add("pitch", pitch);
    echo.add("alpha", alpha);
    echo.add("v", g17(v.x()) + "," + g17(v.y()) + "," + g17(v.z()));
    echo.add("s", s_text);
    echo.add("eps-reg", eps_reg);
    echo.add("output", output);

    const HelicoidalSurface surface(parse_profile(profile_desc), pitch, eps_reg);
    const SMSParams params(alpha, v);

    OutputTarget target(output);
    echo.comment_block(*target.os);
    *target.os << "s,A0,A1,A2,A3,hA0_minus_zA1,v2A3_minus_v1A2\n";
    for (double s : parse_range(s_text)) {
        const ProfileState st = surface.profile().at(s);
        if (regularity(st, pitch) <= eps_reg)
            throw RegularityError("coeffs: regularity below eps-reg at s=" + g17(s));
        const CoefficientQuadruple q = coefficients_general(st, pitch, params);
        *target.os << g17(s) << ',' << g17(q.a0) << ',' << g17(q.a1) << ',' << g17(q.a2) << ','
                   << g17(q.a3) << ',' << g17(combo_hA0_zA1(st, pitch, params)) << ','
                   << g17(combo_v2A3_v1A2(st, pitch, params)) << "\n";
    }
    target.os->flush();
    return 0;
}

// ---------------------------------------------------------------------------
// verify: cylinder certification sweep + Prop. 1 sweep + falsification grid
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::optional<std::string> output, config;
    std::optional<double> tol_zero;
};

int cmd_verify(const VerifyArgs& args) {
    const json cfg = args.config ? load_config(*args.config) : json::object();
    const double tol_zero = resolve(args.tol_zero, cfg, "tol-zero", kDefaultTolZero);
    const std::string output = resolve(args.output, cfg, "output", std::string("-"));

    Echo echo;
    echo.add("command", "verify");
    echo.add("tol-zero", tol_zero);
    echo.add("output", output);

    bool consistent = true;
    json report;
    report["config"] = echo.to_json();

    // Cylinder certification: verdict must equal the predicate v3==0 && alpha==-1.
    {
        const UnitVec3 ex(Vec3{1, 0, 0});
        const UnitVec3 ez(Vec3{0, 0, 1});
        const UnitVec3 planar = UnitVec3::normalized(Vec3{0.6, 0.8, 0.0});
        const UnitVec3 tilted = UnitVec3::normalized(Vec3{0.48, 0.6, 0.64});
        struct Case {
            double x0, z0, h, alpha;
            UnitVec3 v;
        };
        const std::vector<Case> cases{{1.0, 0.0, 2.0, -1.0, ex},     {1.0, 0.0, 2.0, -1.0, ez},
                                      {1.0, 0.0, 2.0, -2.0, ex},     {1.7, 0.3, 0.5, -1.0, planar},
                                      {1.7, 0.3, 0.5, -1.0, tilted}, {0.9, -0.2, 1.0, 1.0, planar}};
        json cells = json::array();
        for (const Case& c : cases) {
            const CertificationReport r = certify_cylinder(c.x0, c.z0, +1, c.h, c.alpha, c.v, tol_zero);
            const bool predicate = std::fabs(c.v.z()) <= 1e-12 && std::fabs(c.alpha + 1.0) <= 1e-12;
            const bool ok = (r.verdict == Verdict::SingularMinimal) == predicate;
            consistent = consistent && ok;
            json cell = to_json(r);
            cell["config"] = {{"x0", c.x0}, {"z0", c.z0}, {"sign", 1}, {"h", c.h},
                              {"alpha", c.alpha},          {"v", {c.v.x(), c.v.y(), c.v.z()}}};
            cell["predicate"] = predicate;
            cell["consistent"] = ok;
            cells.push_back(std::move(cell));
        }
        report["certify_cylinder"] = std::move(cells);
    }

    // Prop. 1: no vertical-direction surface with h != 0 may certify.
    {
        const SearchGrid grid = SearchGrid::defaults();
        int cases = 0;
        int negative = 0;
        json worst;
        std::vector<Profile> profiles;
        for (const ProfileFamilyMember& member : enumerate_profile_family(grid))
            profiles.push_back(build_family_profile(member, grid.integration_step));
        for (double h : {0.25, 1.0, 4.0})
            for (double alpha : grid.alphas)
                for (const Profile& p : profiles) {
                    const CertificationReport r = check_vertical_direction(p, h, alpha, tol_zero);
                    ++cases;
                    if (r.verdict != Verdict::SingularMinimal) ++negative;
                    else worst = to_json(r);
                }
        const bool ok = negative == cases;
        consistent = consistent && ok;
        report["vertical_direction"] = {{"cases", cases}, {"all_negative", ok}};
        if (!ok) report["vertical_direction"]["counterexample"] = worst;
    }

    // Falsification sweep over the default grid.
    {
        SearchGrid grid = SearchGrid::defaults();
        grid.tol_zero = tol_zero;
        const FalsificationReport r = falsification_search(grid);
        consistent = consistent && r.theorem_consistent;
        report["falsification"] = to_json(r);
    }

    report["consistent"] = consistent;

    OutputTarget target(output);
    *target.os << report.dump(2) << "\n";
    target.os->flush();
    return consistent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// catenary: rotational profile CSV + optional h=0 surface mesh
// ---------------------------------------------------------------------------

struct CatenaryArgs {
    std::optional<std::string> output, mesh, config;
    std::optional<double> alpha, x0, z0, theta0, step;
    std::optional<int> n, mesh_s, mesh_t;
    bool strict = false;
};

int cmd_catenary(const CatenaryArgs& args) {
    const json cfg = args.config ? load_config(*args.config) : json::object();
    const double alpha = resolve_required(args.alpha, cfg, "alpha");
    const double x0 = resolve(args.x0, cfg, "x0", 1.0);
    const double z0 = resolve(args.z0, cfg, "z0", 1.0);
    const double theta0 = resolve(args.theta0, cfg, "theta0", 0.0);
    const double step = resolve(args.step, cfg, "step", 1e-3);
    const int n = resolve(args.n, cfg, "n", 2000);
    const std::string output = resolve_required(args.output, cfg, "output");
    const std::string mesh_path = resolve(args.mesh, cfg, "mesh", std::string());
    const int mesh_s = resolve(args.mesh_s, cfg, "mesh-s", 33);
    const int mesh_t = resolve(args.mesh_t, cfg, "mesh-t", 65);

    Echo echo;
    echo.add("command", "catenary");
    echo.add("alpha", alpha);
    echo.add("x0", x0);
    echo.add("z0", z0);
    echo.add("theta0", theta0);
    echo.add("step", step);
    echo.add("n", n);
    echo.add("output", output);
    echo.add("mesh", mesh_path.empty() ? "(none)" : mesh_path);
    echo.add("strict", args.strict ? "1" : "0");

    const Profile profile =
        integrate_rotational_profile(alpha, {0.0, x0, z0, theta0}, step, n);
    write_profile_csv(profile, output);

    if (!mesh_path.empty()) {
        echo.add("mesh-s", mesh_s);
        echo.add("mesh-t", mesh_t);
        const HelicoidalSurface surface(profile, 0.0);
        const auto dom = profile.domain();
        const TriangleMesh mesh =
            build_mesh(surface, {dom.min, dom.max, mesh_s, 0.0, 2.0 * kPi, mesh_t});
        export_obj(mesh, mesh_path);
    }

    echo.comment_block(std::cout);
    std::cout << "steps_taken=" << profile.nodes().size() - 1 << "\n";
    std::cout << "truncated=" << (profile.truncated() ? 1 : 0) << "\n";
    std::cout << "max_residual=" << g17(max_interior_residual(profile, alpha)) << "\n";
    std::cout.flush();

    if (args.strict && profile.truncated()) {
        std::cerr << "catenary: trajectory truncated before n steps (--strict)\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// mesh: OBJ export of a helicoidal surface patch
// ---------------------------------------------------------------------------

struct MeshArgs {
    std::optional<std::string> profile, output, config;
    std::optional<double> pitch, s0, s1, t0, t1, eps_reg;
    std::optional<int> ns, nt;
};

int cmd_mesh(const MeshArgs& args) {
    const json cfg = args.config ? load_config(*args.config) : json::object();
    const std::string profile_desc = resolve_required(args.profile, cfg, "profile");
    const double pitch = resolve_required(args.pitch, cfg, "pitch");
    const double s0 = resolve(args.s0, cfg, "s0", 0.0);
    const double s1 = resolve(args.s1, cfg, "s1", 1.0);
    const double t0 = resolve(args.t0, cfg, "t0", 0.0);
    const double t1 = resolve(args.t1, cfg, "t1", 2.0 * kPi);
    const int ns = resolve(args.ns, cfg, "ns", 33);
    const int nt = resolve(args.nt, cfg, "nt", 65);
    const double eps_reg = resolve(args.eps_reg, cfg, "eps-reg", kDefaultEpsReg);
    const std::string output = resolve_required(args.output, cfg, "output");

    Echo echo;
    echo.add("command", "mesh");
    echo.add("profile", profile_desc);
    echo.add("pitch", pitch);
    echo.add("s0", s0);
    echo.add("s1", s1);
    echo.add("ns", ns);
    echo.add("t0", t0);
    echo.add("t1", t1);
    echo.add("nt", nt);
    echo.add("eps-reg", eps_reg);
    echo.add("output", output);

    const HelicoidalSurface surface(parse_profile(profile_desc), pitch, eps_reg);
    const TriangleMesh mesh = build_mesh(surface, {s0, s1, ns, t0, t1, nt});
    export_obj(mesh, output);

    echo.comment_block(std::cout);
    std::cout << "vertices=" << mesh.vertices.size() << "\n";
    std::cout << "triangles=" << mesh.triangles.size() << "\n";
    std::cout.flush();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"helicoidal singular-minimal-surface toolkit"};
    app.require_subcommand(1);

    CurvatureArgs curvature_args;
    CLI::App* curvature = app.add_subcommand(
        "curvature", "Closed-form vs finite-difference mean curvature table (CSV)");
    curvature->add_option("--profile", curvature_args.profile, "kind:key=val,... profile descriptor");
    curvature->add_option("--pitch", curvature_args.pitch, "pitch h");
    curvature->add_option("--s", curvature_args.s, "arc-length samples, start:end:count or value");
    curvature->add_option("--t", curvature_args.t, "motion samples, start:end:count or value");
    curvature->add_option("--fd-step", curvature_args.fd_step, "finite-difference step (default 1e-5)");
    curvature->add_option("--eps-reg", curvature_args.eps_reg, "regularity threshold (default 1e-12)");
    curvature->add_option("--output", curvature_args.output, "CSV path or - for stdout");
    curvature->add_option("--config", curvature_args.config, "JSON config file");

    CoeffsArgs coeffs_args;
    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "Expansion coefficients A0..A3 and combination values along a profile (CSV)");
    coeffs->add_option("--profile", coeffs_args.profile, "kind:key=val,... profile descriptor");
    coeffs->add_option("--pitch", coeffs_args.pitch, "pitch h");
    coeffs->add_option("--alpha", coeffs_args.alpha, "equation exponent alpha (nonzero)");
    coeffs->add_option("--v", coeffs_args.v, "direction x,y,z (normalized)");
    coeffs->add_option("--s", coeffs_args.s, "arc-length samples, start:end:count or value");
    coeffs->add_option("--eps-reg", coeffs_args.eps_reg, "regularity threshold (default 1e-12)");
    coeffs->add_option("--output", coeffs_args.output, "CSV path or - for stdout");
    coeffs->add_option("--config", coeffs_args.config, "JSON config file");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Certify the cylinder classification and sweep the falsification grid (JSON)");
    verify->add_option("--tol-zero", verify_args.tol_zero, "coefficient zero tolerance (default 1e-10)");
    verify->add_option("--output", verify_args.output, "JSON path or - for stdout");
    verify->add_option("--config", verify_args.config, "JSON config file");

    CatenaryArgs catenary_args;
    CLI::App* catenary = app.add_subcommand(
        "catenary", "Integrate a rotational singular-minimal profile (CSV, optional OBJ)");
    catenary->add_option("--alpha", catenary_args.alpha, "equation exponent alpha (nonzero)");
    catenary->add_option("--x0", catenary_args.x0, "initial radius (default 1)");
    catenary->add_option("--z0", catenary_args.z0, "initial height (default 1)");
    catenary->add_option("--theta0", catenary_args.theta0, "initial turning angle (default 0)");
    catenary->add_option("--step", catenary_args.step, "RK4 step (default 1e-3)");
    catenary->add_option("--n", catenary_args.n, "step count (default 2000)");
    catenary->add_option("--output", catenary_args.output, "trajectory CSV path");
    catenary->add_option("--mesh", catenary_args.mesh, "also write the h=0 surface OBJ here");
    catenary->add_option("--mesh-s", catenary_args.mesh_s, "mesh s count (default 33)");
    catenary->add_option("--mesh-t", catenary_args.mesh_t, "mesh t count (default 65)");
    catenary->add_flag("--strict", catenary_args.strict, "exit 2 if the trajectory truncates");
    catenary->add_option("--config", catenary_args.config, "JSON config file");

    MeshArgs mesh_args;
    CLI::App* mesh = app.add_subcommand("mesh", "Export a helicoidal surface patch as OBJ");
    mesh->add_option("--profile", mesh_args.profile, "kind:key=val,... profile descriptor");
    mesh->add_option("--pitch", mesh_args.pitch, "pitch h");
    mesh->add_option("--s0", mesh_args.s0, "s range start (default 0)");
    mesh->add_option("--s1", mesh_args.s1, "s range end (default 1)");
    mesh->add_option("--ns", mesh_args.ns, "s sample count (default 33)");
    mesh->add_option("--t0", mesh_args.t0, "t range start (default 0)");
    mesh->add_option("--t1", mesh_args.t1, "t range end (default 2*pi)");
    mesh->add_option("--nt", mesh_args.nt, "t sample count (default 65)");
    mesh->add_option("--eps-reg", mesh_args.eps_reg, "regularity threshold (default 1e-12)");
    mesh->add_option("--output", mesh_args.output, "OBJ path");
    mesh->add_option("--config", mesh_args.config, "JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (curvature->parsed()) return cmd_curvature(curvature_args);
        if (coeffs->parsed()) return cmd_coeffs(coeffs_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (catenary->parsed()) return cmd_catenary(catenary_args);
        if (mesh->parsed()) return cmd_mesh(mesh_args);
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
