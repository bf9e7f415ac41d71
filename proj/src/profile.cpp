#include "helisurf/profile.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace helisurf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDomainSlack = 1e-9;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string("Profile: non-finite ") + what);
}

// Cubic Hermite on one cell, u in [0,1], derivatives given per unit s.
double hermite(double f0, double d0, double f1, double d1, double step, double u) {
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2.0 * u3 - 3.0 * u2 + 1.0) * f0 + (u3 - 2.0 * u2 + u) * step * d0 +
           (-2.0 * u3 + 3.0 * u2) * f1 + (u3 - u2) * step * d1;
}

long double hermite_ld(long double f0, long double d0, long double f1, long double d1,
                       long double step, long double u) {
    const long double u2 = u * u;
    const long double u3 = u2 * u;
    return (2.0L * u3 - 3.0L * u2 + 1.0L) * f0 + (u3 - 2.0L * u2 + u) * step * d0 +
           (-2.0L * u3 + 3.0L * u2) * f1 + (u3 - u2) * step * d1;
}

}  // namespace

struct Profile::Data {
    Kind kind = Kind::Integrated;
    Interval domain{};
    // closed-form parameters
    double x0 = 0.0;
    double z0 = 0.0;
    int sign = +1;
    double theta0 = 0.0;
    // integrated representation
    std::vector<ProfileState> nodes;
    double step = 0.0;
    std::function<double(double)> kappa;  // null for node-driven profiles
    bool truncated = false;

    void admit(double s) const {
        const double slack = kDomainSlack * (1.0 + std::max(std::fabs(domain.min), std::fabs(domain.max)));
        if (!std::isfinite(s) || s < domain.min - slack || s > domain.max + slack)
            throw DomainError("Profile: arc length outside domain");
    }

    // Cell index for s, clamped to valid Hermite cells.
    int cell(double s) const {
        const int n = static_cast<int>(nodes.size());
        int i = static_cast<int>(std::floor((s - nodes.front().s) / step));
        return std::clamp(i, 0, n - 2);
    }

    // 4-point local Lagrange reconstruction of theta' from node values.
    double theta_prime_lagrange(double s, int i) const {
        const int n = static_cast<int>(nodes.size());
        const int k = std::min(4, n);
        const int j0 = std::clamp(i - 1, 0, n - k);
        double r = 0.0;
        for (int a = 0; a < k; ++a) {
            double term = nodes[j0 + a].theta_prime;
            for (int b = 0; b < k; ++b) {
                if (b == a) continue;
                term *= (s - nodes[j0 + b].s) / (nodes[j0 + a].s - nodes[j0 + b].s);
            }
            r += term;
        }
        return r;
    }
};

Profile Profile::cylinder(double x0, double z0, int sign, double s_min, double s_max) {
    require_finite(x0, "x0");
    require_finite(z0, "z0");
    require_finite(s_min, "s_min");
    require_finite(s_max, "s_max");
    if (x0 == 0.0) throw std::invalid_argument("Profile::cylinder: x0 must be nonzero");
    if (sign != 1 && sign != -1) throw std::invalid_argument("Profile::cylinder: sign must be +-1");
    if (!(s_min < s_max)) throw std::invalid_argument("Profile::cylinder: empty domain");
    auto d = std::make_shared<Data>();
    d->kind = Kind::ClosedFormCylinder;
    d->domain = {s_min, s_max};
    d->x0 = x0;
    d->z0 = z0;
    d->sign = sign;
    return Profile(std::move(d));
}

Profile Profile::line(double theta0, double x0, double z0, double s_min, double s_max) {
    require_finite(theta0, "theta0");
    require_finite(x0, "x0");
    require_finite(z0, "z0");
    if (!(s_min < s_max)) throw std::invalid_argument("Profile::line: empty domain");
    auto d = std::make_shared<Data>();
    d->kind = Kind::ClosedFormLine;
    d->domain = {s_min, s_max};
    d->x0 = x0;
    d->z0 = z0;
    d->theta0 = theta0;
    return Profile(std::move(d));
}

Profile Profile::integrate(std::function<double(double)> curvature, double s0, double x0,
                           double z0, double theta0, double step, int n_steps) {
    if (!curvature) throw std::invalid_argument("Profile::integrate: null curvature function");
    require_finite(s0, "s0");
    require_finite(x0, "x0");
    require_finite(z0, "z0");
    require_finite(theta0, "theta0");
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("Profile::integrate: step must be positive");
    if (n_steps < 1) throw std::invalid_argument("Profile::integrate: n_steps must be >= 1");

    struct St {
        double x, z, th;
    };
    auto f = [&curvature](double s, const St& y) {
        return St{std::cos(y.th), std::sin(y.th), curvature(s)};
    };

    std::vector<ProfileState> nodes;
    nodes.reserve(static_cast<std::size_t>(n_steps) + 1);
    St y{x0, z0, theta0};
    nodes.push_back({s0, y.x, y.z, y.th, curvature(s0)});
    for (int i = 0; i < n_steps; ++i) {
        const double s = s0 + i * step;
        const double sm = s + 0.5 * step;
        const double se = s0 + (i + 1) * step;
        const St k1 = f(s, y);
        const St k2 = f(sm, {y.x + 0.5 * step * k1.x, y.z + 0.5 * step * k1.z, y.th + 0.5 * step * k1.th});
        const St k3 = f(sm, {y.x + 0.5 * step * k2.x, y.z + 0.5 * step * k2.z, y.th + 0.5 * step * k2.th});
        const St k4 = f(se, {y.x + step * k3.x, y.z + step * k3.z, y.th + step * k3.th});
        y.x += step / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        y.z += step / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
        y.th += step / 6.0 * (k1.th + 2.0 * k2.th + 2.0 * k3.th + k4.th);
        const double kap = curvature(se);
        if (!std::isfinite(y.x) || !std::isfinite(y.z) || !std::isfinite(y.th) || !std::isfinite(kap))
            throw std::invalid_argument("Profile::integrate: non-finite state (check curvature function)");
        nodes.push_back({se, y.x, y.z, y.th, kap});
    }

    auto d = std::make_shared<Data>();
    d->kind = Kind::Integrated;
    d->domain = {s0, s0 + n_steps * step};
    d->nodes = std::move(nodes);
    d->step = step;
    d->kappa = std::move(curvature);
    return Profile(std::move(d));
}

Profile Profile::from_nodes(std::vector<ProfileState> nodes, bool truncated) {
    if (nodes.size() < 2) throw std::invalid_argument("Profile::from_nodes: need at least 2 nodes");
    const double step = nodes[1].s - nodes[0].s;
    if (!(step > 0.0)) throw std::invalid_argument("Profile::from_nodes: nodes must be increasing in s");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (std::fabs(nodes[i + 1].s - nodes[i].s - step) > 1e-9 * std::max(1.0, step))
            throw std::invalid_argument("Profile::from_nodes: nodes must be uniformly spaced");
        if (!std::isfinite(nodes[i].x) || !std::isfinite(nodes[i].z) || !std::isfinite(nodes[i].theta) ||
            !std::isfinite(nodes[i].theta_prime))
            throw std::invalid_argument("Profile::from_nodes: non-finite node");
    }
    auto d = std::make_shared<Data>();
    d->kind = Kind::Integrated;
    d->domain = {nodes.front().s, nodes.back().s};
    d->step = step;
    d->nodes = std::move(nodes);
    d->truncated = truncated;
    return Profile(std::move(d));
}

ProfileState Profile::at(double s) const {
    const Data& d = *data_;
    d.admit(s);
    switch (d.kind) {
        case Kind::ClosedFormCylinder:
            return {s, d.x0, d.sign * s + d.z0, d.sign * (kPi / 2.0), 0.0};
        case Kind::ClosedFormLine:
            return {s, d.x0 + s * std::cos(d.theta0), d.z0 + s * std::sin(d.theta0), d.theta0, 0.0};
        case Kind::Integrated: {
            const int i = d.cell(s);
            const ProfileState& a = d.nodes[i];
            const ProfileState& b = d.nodes[i + 1];
            if (s == a.s) return a;
            if (s == b.s) return b;
            const double u = (s - a.s) / d.step;
            const double x = hermite(a.x, std::cos(a.theta), b.x, std::cos(b.theta), d.step, u);
            const double z = hermite(a.z, std::sin(a.theta), b.z, std::sin(b.theta), d.step, u);
            const double theta = hermite(a.theta, a.theta_prime, b.theta, b.theta_prime, d.step, u);
            const double tp = d.kappa ? d.kappa(s) : d.theta_prime_lagrange(s, i);
            return {s, x, z, theta, tp};
        }
    }
    throw std::logic_error("Profile: unknown kind");
}

Profile::PositionLd Profile::position_ld(long double s) const {
    const Data& d = *data_;
    d.admit(static_cast<double>(s));
    switch (d.kind) {
        case Kind::ClosedFormCylinder:
            return {static_cast<long double>(d.x0), d.sign * s + static_cast<long double>(d.z0)};
        case Kind::ClosedFormLine: {
            const long double c = static_cast<long double>(std::cos(d.theta0));
            const long double n = static_cast<long double>(std::sin(d.theta0));
            return {d.x0 + s * c, d.z0 + s * n};
        }
        case Kind::Integrated: {
            const int i = d.cell(static_cast<double>(s));
            const ProfileState& a = d.nodes[i];
            const ProfileState& b = d.nodes[i + 1];
            const long double u = (s - static_cast<long double>(a.s)) / static_cast<long double>(d.step);
            const long double x = hermite_ld(a.x, std::cos(a.theta), b.x, std::cos(b.theta), d.step, u);
            const long double z = hermite_ld(a.z, std::sin(a.theta), b.z, std::sin(b.theta), d.step, u);
            return {x, z};
        }
    }
    throw std::logic_error("Profile: unknown kind");
}

Profile::Interval Profile::domain() const { return data_->domain; }

Profile::Kind Profile::kind() const { return data_->kind; }

bool Profile::truncated() const { return data_->truncated; }

const std::vector<ProfileState>& Profile::nodes() const { return data_->nodes; }

}  // namespace helisurf
