#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "helisurf/numeric_oracle.hpp"
#include "helisurf/surface.hpp"
#include "test_helpers.hpp"

using namespace helisurf;
using testutil::kPi;

namespace {

// Independent oracle: explicit 3x3 rotation matrix plus translation.
Vec3 motion_oracle(const Vec3& p, double t, double h) {
    const double r[3][3] = {{std::cos(t), -std::sin(t), 0.0},
                            {std::sin(t), std::cos(t), 0.0},
                            {0.0, 0.0, 1.0}};
    Vec3 out{0.0, 0.0, h * t};
    const double in[3] = {p.x, p.y, p.z};
    double acc[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc[i] += r[i][j] * in[j];
    out.x += acc[0];
    out.y += acc[1];
    out.z += acc[2];
    return out;
}

// In-test analytic tangents, assembled independently of surface_jet.
Vec3 psi_s_ref(double x, double theta, double t) {
    (void)x;
    return {std::cos(theta) * std::cos(t), std::cos(theta) * std::sin(t), std::sin(theta)};
}
Vec3 psi_t_ref(double x, double h, double t) {
    return {-x * std::sin(t), x * std::cos(t), h};
}

}  // namespace

TEST_CASE("helicoidal motion: quarter turn plus lift") {
    const Vec3 out = helicoidal_motion({1.0, 0.0, 0.0}, kPi / 2, 1.0);
    CHECK(std::fabs(out.x) < 1e-15);
    CHECK(out.y == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(out.z == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("helicoidal motion: identity at t = 0") {
    const Vec3 p{0.3, -1.7, 2.2};
    const Vec3 out = helicoidal_motion(p, 0.0, 5.0);
    CHECK(out.x == p.x);
    CHECK(out.y == p.y);
    CHECK(out.z == p.z);
}

TEST_CASE("helicoidal motion matches the rotation-matrix oracle") {
    const Vec3 got = helicoidal_motion({1.0, 2.0, 3.0}, 1.0, 2.0);
    const Vec3 want = motion_oracle({1.0, 2.0, 3.0}, 1.0, 2.0);
    CHECK(got.x == doctest::Approx(want.x).epsilon(1e-15));
    CHECK(got.y == doctest::Approx(want.y).epsilon(1e-15));
    CHECK(got.z == want.z);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Vec3 p{testutil::uniform(rng, -3, 3), testutil::uniform(rng, -3, 3),
                     testutil::uniform(rng, -3, 3)};
        const double t = testutil::uniform(rng, -7, 7);
        const double h = testutil::uniform(rng, -2, 2);
        const Vec3 a = helicoidal_motion(p, t, h);
        const Vec3 b = motion_oracle(p, t, h);
        CHECK((a - b).norm() < 1e-14);
    }
}

TEST_CASE("helicoidal motion rejects non-finite input") {
    CHECK_THROWS_AS((void)helicoidal_motion({std::nan(""), 0, 0}, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)helicoidal_motion({0, 0, 0}, INFINITY, 0.0), std::invalid_argument);
}

TEST_CASE("parametrize on the cylinder") {
    const HelicoidalSurface surf(Profile::cylinder(1.0, 0.0, +1), 2.0);
    const Vec3 a = parametrize(surf, 0.0, 0.0);
    CHECK(a.x == 1.0);
    CHECK(a.y == 0.0);
    CHECK(a.z == 0.0);

    const Vec3 b = parametrize(surf, 1.0, kPi);
    CHECK(b.x == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::fabs(b.y) < 1e-15);
    CHECK(b.z == doctest::Approx(2.0 * kPi + 1.0).epsilon(1e-15));

    CHECK_THROWS_AS((void)parametrize(surf, 11.0, 0.0), DomainError);
}

TEST_CASE("parametrize composes the motion with the profile") {
    const HelicoidalSurface surf(Profile::line(0.0, 1.0, 0.0), 1.0);
    const Vec3 got = parametrize(surf, 0.3, 0.7);
    const Vec3 want = helicoidal_motion({1.3, 0.0, 0.0}, 0.7, 1.0);
    CHECK(got.x == want.x);
    CHECK(got.y == want.y);
    CHECK(got.z == want.z);
}

TEST_CASE("surface jet: rotation orbit speed and arc-length tangent") {
    const HelicoidalSurface cyl(Profile::cylinder(1.0, 0.0, +1), 0.0);
    for (double t : {0.0, 0.5, 2.0}) {
        const SurfaceJet jet = surface_jet(cyl, 0.3, t);
        CHECK(jet.dt.norm() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(jet.ds.dot(jet.ds) == doctest::Approx(1.0).epsilon(1e-15));
    }
    const HelicoidalSurface generic(Profile::line(0.3, 1.2, 0.1), 0.8);
    const SurfaceJet jet = surface_jet(generic, 0.4, 1.1);
    CHECK(jet.ds.dot(jet.ds) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("surface jet matches central differences of parametrize") {
    const HelicoidalSurface surf(Profile::line(kPi / 6, 2.0, 0.0), 1.0);
    const SurfaceJet a = surface_jet(surf, 0.1, 0.2);
    const SurfaceJet n = fd_jet(surf, 0.1, 0.2, {1e-5});
    CHECK((a.point - n.point).norm() < 1e-15);
    CHECK((a.ds - n.ds).norm() < 1e-6);
    CHECK((a.dt - n.dt).norm() < 1e-6);
    CHECK((a.dss - n.dss).norm() < 1e-6);
    CHECK((a.dst - n.dst).norm() < 1e-6);
    CHECK((a.dtt - n.dtt).norm() < 1e-6);
}

TEST_CASE("jet reproduces the first fundamental form") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const double theta0 = testutil::uniform(rng, -1.2, 1.2);
        const HelicoidalSurface surf(Profile::line(theta0, testutil::uniform(rng, 0.5, 2.0), 0.3),
                                     testutil::uniform(rng, -2.0, 2.0));
        const double s = testutil::uniform(rng, -0.5, 0.5);
        const double t = testutil::uniform(rng, -3.0, 3.0);
        const SurfaceJet jet = surface_jet(surf, s, t);
        const FundamentalForms ff = fundamental_forms(surf, s, t);
        CHECK(std::fabs(jet.ds.dot(jet.ds) - ff.E) < 1e-12);
        CHECK(std::fabs(jet.ds.dot(jet.dt) - ff.F) < 1e-12);
        CHECK(std::fabs(jet.dt.dot(jet.dt) - ff.G) < 1e-12);
    }
}

TEST_CASE("fundamental forms on the cylinder x0=1, h=2") {
    const HelicoidalSurface surf(Profile::cylinder(1.0, 0.0, +1), 2.0);
    const FundamentalForms ff = fundamental_forms(surf, 0.7, 1.3);
    CHECK(ff.E == 1.0);
    CHECK(ff.F == doctest::Approx(2.0).epsilon(1e-15));  // h z' with z' = +1
    CHECK(ff.G == 5.0);                                  // x^2 + h^2
}

TEST_CASE("helicoid has F = 0") {
    const HelicoidalSurface surf(Profile::line(0.0, 0.5, 0.0), 1.0);
    const FundamentalForms ff = fundamental_forms(surf, 0.0, 0.4);
    CHECK(ff.F == 0.0);
}

TEST_CASE("second-form coefficients match jet projections on the normal") {
    const HelicoidalSurface surf(Profile::line(kPi / 6, 2.0, 0.0), 1.0);
    const double s = 0.1;
    for (double t : {0.0, 0.9, 2.4}) {
        const SurfaceJet jet = surface_jet(surf, s, t);
        const ProfileState st = surf.profile().at(s);
        const UnitVec3 n = normal_general(st.x, std::cos(st.theta), std::sin(st.theta), 1.0, t);
        const FundamentalForms ff = fundamental_forms(surf, s, t);
        CHECK(std::fabs(jet.dss.dot(n.vec()) - ff.e) < 1e-12);
        CHECK(std::fabs(jet.dst.dot(n.vec()) - ff.f) < 1e-12);
        CHECK(std::fabs(jet.dtt.dot(n.vec()) - ff.g) < 1e-12);
    }
}

TEST_CASE("regularity values") {
    CHECK(regularity(ProfileState{0, 0.0, 0, kPi / 2, 0}, 3.0) < 1e-31);  // lost exactly at x=0, cos=0
    const HelicoidalSurface cyl(Profile::cylinder(3.0, 0.0, +1), 5.0);
    CHECK(regularity(cyl, 1.0) == 9.0);
    const HelicoidalSurface line(Profile::line(0.3, 1.1, 0.0), 0.7);
    const ProfileState st = line.profile().at(0.2);
    CHECK(regularity(line, 0.2) ==
          doctest::Approx(st.x * st.x + 0.49 * std::cos(0.3) * std::cos(0.3)).epsilon(1e-15));
}

TEST_CASE("fundamental forms reject degenerate samples") {
    // Line through the axis: x(1) = 0 with h = 0 kills EG - F^2.
    const HelicoidalSurface surf(Profile::line(0.0, -1.0, 0.0), 0.0);
    CHECK_THROWS_AS((void)fundamental_forms(surf, 1.0, 0.0), RegularityError);
}

TEST_CASE("normal: cylinder is radial") {
    const UnitVec3 n = normal_general(1.0, 0.0, 1.0, 2.0, 0.0);
    CHECK(n.x() == -1.0);
    CHECK(n.y() == 0.0);
    CHECK(n.z() == 0.0);

    const UnitVec3 nt = normal_theta(ProfileState{0, 1.0, 0.5, kPi / 2, 0.0}, 2.0, 0.0);
    CHECK(nt.x() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::fabs(nt.y()) < 1e-15);
    CHECK(std::fabs(nt.z()) < 1e-15);
}

TEST_CASE("normal is unit and orthogonal to both tangents") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const ProfileState st = testutil::random_regular_state(rng);
        const double h = testutil::uniform(rng, -3.0, 3.0);
        const double t = testutil::uniform(rng, -3.0, 3.0);
        const UnitVec3 n = normal_theta(st, h, t);
        CHECK(std::fabs(n.vec().norm() - 1.0) < 1e-12);
        CHECK(std::fabs(n.vec().dot(psi_s_ref(st.x, st.theta, t))) < 1e-12);
        CHECK(std::fabs(n.vec().dot(psi_t_ref(st.x, h, t))) < 1e-12);
    }
}

TEST_CASE("normal third component is x cos theta / sqrt(W)") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const ProfileState st = testutil::random_regular_state(rng);
        const double h = testutil::uniform(rng, -3.0, 3.0);
        const UnitVec3 n = normal_theta(st, h, testutil::uniform(rng, -3.0, 3.0));
        const double w = regularity(st, h);
        CHECK(n.z() == doctest::Approx(st.x * std::cos(st.theta) / std::sqrt(w)).epsilon(1e-14));
    }
}

TEST_CASE("theta-form normal equals the general form") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        const ProfileState st = testutil::random_regular_state(rng);
        const double h = testutil::uniform(rng, -3.0, 3.0);
        const double t = testutil::uniform(rng, -3.0, 3.0);
        const UnitVec3 a = normal_theta(st, h, t);
        const UnitVec3 b = normal_general(st.x, std::cos(st.theta), std::sin(st.theta), h, t);
        CHECK((a.vec() - b.vec()).norm() < 1e-14);
    }
}

TEST_CASE("normal equals the normalized cross product with one fixed sign") {
    std::mt19937_64 rng(9);
    int sign = 0;
    for (int i = 0; i < 1000; ++i) {
        const ProfileState st = testutil::random_regular_state(rng);
        const double h = testutil::uniform(rng, -3.0, 3.0);
        const double t = testutil::uniform(rng, -3.0, 3.0);
        const Vec3 cross = psi_s_ref(st.x, st.theta, t).cross(psi_t_ref(st.x, h, t));
        const Vec3 unit_cross = cross / cross.norm();
        const UnitVec3 n = normal_theta(st, h, t);
        const int this_sign = n.vec().dot(unit_cross) > 0 ? +1 : -1;
        if (i == 0) sign = this_sign;
        CHECK(this_sign == sign);
        CHECK((n.vec() * static_cast<double>(this_sign) - unit_cross).norm() < 1e-10);
    }
    CHECK(sign == +1);  // Eq.-form normal is exactly Psi_s x Psi_t normalized
}

TEST_CASE("mean curvature: unit cylinder gives the sum convention H = 1") {
    CHECK(mean_curvature_general(1.0, 0.0, 0.0, 1.0, 0.0, 7.0) == 1.0);
    CHECK(mean_curvature_theta(ProfileState{0, 1.0, 0, kPi / 2, 0.0}, 3.0) == 1.0);
    CHECK(mean_curvature_theta(ProfileState{0, 1.0, 0, -kPi / 2, 0.0}, 3.0) == -1.0);
}

TEST_CASE("mean curvature: helicoid is minimal") {
    CHECK(mean_curvature_general(2.0, 1.0, 0.0, 0.0, 0.0, 1.5) == 0.0);
    CHECK(mean_curvature_theta(ProfileState{0, 0.7, 0, 0.0, 0.0}, 1.0) == 0.0);
}

TEST_CASE("the two mean-curvature forms agree") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 1000; ++i) {
        const ProfileState st = testutil::random_regular_state(rng);
        const double h = testutil::uniform(rng, -3.0, 3.0);
        const double xp = std::cos(st.theta);
        const double zp = std::sin(st.theta);
        const double a = mean_curvature_theta(st, h);
        const double b = mean_curvature_general(st.x, xp, -st.theta_prime * zp, zp,
                                                st.theta_prime * xp, h);
        CHECK(std::fabs(a - b) < 1e-12);
    }
}

TEST_CASE("torsion-free substitution: x'z'' - z'x'' = theta'") {
    std::mt19937_64 rng(12);
    const HelicoidalSurface surf(Profile::integrate([](double s) { return 0.7 * std::cos(s); },
                                                    0.0, 1.0, 0.5, 0.1, 1e-3, 1000),
                                 0.9);
    for (int i = 0; i < 200; ++i) {
        const double s = testutil::uniform(rng, 0.0, 1.0);
        const SurfaceJet jet = surface_jet(surf, s, 0.3);
        const ProfileState st = surf.profile().at(s);
        // rotate the planar second derivatives back out of the jet
        const double c = std::cos(0.3), n = std::sin(0.3);
        const double xpp = jet.dss.x * c + jet.dss.y * n;
        const double zpp = jet.dss.z;
        const double xp = jet.ds.x * c + jet.ds.y * n;
        const double zp = jet.ds.z;
        CHECK(std::fabs(xp * zpp - zp * xpp - st.theta_prime) < 1e-12);
    }
}

TEST_CASE("curvature and forms are t-independent") {
    const HelicoidalSurface surf(Profile::line(0.4, 1.3, 0.2), 1.1);
    const ProfileState st = surf.profile().at(0.25);
    const double h_ref = mean_curvature_theta(st, 1.1);
    const FundamentalForms ff_ref = fundamental_forms(surf, 0.25, 0.0);
    for (double t : {-2.0, 0.5, 1.0, 4.0}) {
        CHECK(mean_curvature_theta(st, 1.1) == h_ref);
        const FundamentalForms ff = fundamental_forms(surf, 0.25, t);
        CHECK(ff.E == ff_ref.E);
        CHECK(ff.F == ff_ref.F);
        CHECK(ff.G == ff_ref.G);
        CHECK(ff.e == ff_ref.e);
        CHECK(ff.f == ff_ref.f);
        CHECK(ff.g == ff_ref.g);
    }
}

TEST_CASE("regularity identity EG - F^2 = x^2 + h^2 cos^2 theta") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const double theta0 = testutil::uniform(rng, -1.0, 1.0);
        const double h = testutil::uniform(rng, -2.0, 2.0);
        const HelicoidalSurface surf(Profile::line(theta0, testutil::uniform(rng, 0.5, 2.0), 0.0), h);
        const double s = testutil::uniform(rng, -0.3, 0.3);
        const FundamentalForms ff = fundamental_forms(surf, s, 0.0);
        CHECK(std::fabs(ff.E * ff.G - ff.F * ff.F - regularity(surf, s)) < 1e-12);
    }
}

TEST_CASE("closed-form H vs finite differences on random line surfaces") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
        const double theta0 = testutil::uniform(rng, -1.2, 1.2);
        const double x0 = (rng() & 1 ? 1.0 : -1.0) * testutil::uniform(rng, 0.6, 2.5);
        const double h = testutil::uniform(rng, -2.0, 2.0);
        const HelicoidalSurface surf(Profile::line(theta0, x0, 0.3), h);
        const double s = testutil::uniform(rng, -0.2, 0.2);
        const double t = testutil::uniform(rng, -3.0, 3.0);
        if (regularity(surf, s) < 0.05) continue;
        const double closed = mean_curvature_theta(surf.profile().at(s), h);
        const double fd = fd_mean_curvature(surf, s, t, {1e-5});
        CHECK(std::fabs(closed - fd) <= 1e-6 * std::max(1.0, std::fabs(closed)));
    }
}
