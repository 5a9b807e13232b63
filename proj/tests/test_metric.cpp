#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "contactlie/classify.hpp"
#include "contactlie/metric.hpp"
#include "contactlie/presets.hpp"

using namespace contactlie;

namespace {

StructureConstants canonical_constants(const char* name) {
    const auto& p = preset(name);
    return canonical_frame(p.constants, p.data).pattern_constants();
}

} // namespace

TEST_CASE("geodesic criterion: heisenberg and the solvable patterns") {
    const auto heis = canonical_constants("heisenberg");
    CHECK(geodesic_criterion(heis, 1).geodesic);

    const auto c1 = canonical_constants("case1"); // a=0, b=1, m1=1, m2=0
    const auto wrong = geodesic_criterion(c1, 1);
    CHECK_FALSE(wrong.geodesic);
    CHECK(wrong.residual.lpNorm<Eigen::Infinity>() == doctest::Approx(1.0));
    CHECK(geodesic_criterion(c1, 2).geodesic); // the proof's field X = v2
}

TEST_CASE("euler-arnold: zero input, consistency with the criterion, case1 residual") {
    const auto c1 = canonical_constants("case1");
    CHECK(euler_arnold_rhs(c1, Vec3::Zero()).norm() == 0.0);

    for (const char* name : {"heisenberg", "su2", "sl2", "case1", "case2"}) {
        CAPTURE(name);
        const auto cc = canonical_constants(name);
        for (int i = 0; i < 3; ++i) {
            const bool geo = geodesic_criterion(cc, i).geodesic;
            const double rhs = euler_arnold_rhs(cc, Vec3::Unit(i)).lpNorm<Eigen::Infinity>();
            CHECK(geo == (rhs <= 1e-12));
        }
    }

    // Residual vector and rhs agree in magnitude for the failing direction.
    const auto check = geodesic_criterion(c1, 1);
    const Vec3 rhs = euler_arnold_rhs(c1, Vec3::Unit(1));
    CHECK(rhs.lpNorm<Eigen::Infinity>() ==
          doctest::Approx(check.residual.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("integrate_geodesic: abelian constants give a constant trajectory") {
    const auto abelian = StructureConstants::from_brackets(Vec3::Zero(), Vec3::Zero(), Vec3::Zero());
    const Vec3 u0{0.3, -0.2, 0.9};
    const auto traj = integrate_geodesic(abelian, u0, 10.0, 1e-3);
    CHECK(traj.max_drift_from(u0) == 0.0);
}

TEST_CASE("integrate_geodesic: certified fields stay put, non-geodesic moves") {
    const auto heis = canonical_constants("heisenberg");
    const auto traj = integrate_geodesic(heis, Vec3::Unit(1), 10.0, 1e-3);
    CHECK(traj.max_drift_from(Vec3::Unit(1)) <= 1e-8);

    const auto c1 = canonical_constants("case1");
    const auto moving = integrate_geodesic(c1, Vec3::Unit(1), 1.0, 1e-3);
    CHECK(moving.max_drift_from(Vec3::Unit(1)) > 1e-3);
    CHECK(euler_arnold_rhs(c1, Vec3::Unit(1)).norm() > 0.5);
}

TEST_CASE("integrate_geodesic: energy conservation and step-size guard") {
    const Vec3 u0{0.4, -0.7, 0.5};
    for (const char* name : {"heisenberg", "su2", "sl2", "case1", "case2"}) {
        CAPTURE(name);
        const auto cc = canonical_constants(name);
        const auto traj = integrate_geodesic(cc, u0, 10.0, 1e-3);
        CHECK(traj.max_energy_drift() <= 1e-10);
    }
    CHECK_THROWS_AS(integrate_geodesic(canonical_constants("sl2"), u0, 10.0, 0.5), InputError);
}

TEST_CASE("normal exponential: heisenberg witness is unimodular") {
    const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
    const auto rep = normal_exponential(Model::Heisenberg, grid, grid, grid);
    CHECK(rep.sample_count == 125);
    CHECK(rep.min_abs_jacobian == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.min_pair_separation >= 1e-9);
}

TEST_CASE("normal exponential: z = 0 slice reduces to the subgroup chart") {
    const std::vector<double> grid{-1.0, 0.0, 1.0};
    const std::vector<double> z0{0.0};
    const auto rep = normal_exponential(Model::Heisenberg, grid, grid, z0);
    CHECK(rep.min_abs_jacobian == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("normal exponential: sl(2) witness matches the e^{-t} anchor") {
    const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
    const auto rep = normal_exponential(Model::Sl2, grid, grid, grid);
    // Left-trivialized determinant is -e^{-t}; the grid minimum sits at t = 1.
    CHECK(rep.min_abs_jacobian == doctest::Approx(std::exp(-1.0)).epsilon(1e-5));
    CHECK(rep.min_pair_separation >= 1e-9);
}

TEST_CASE("classification data passes the geodesic and orthogonality checks") {
    for (const char* name : {"heisenberg", "sl2", "case1", "case2"}) {
        CAPTURE(name);
        const auto& p = preset(name);
        const auto res = classify(canonical_frame(p.constants, p.data));
        REQUIRE(res.has_chart());
        // The chart's z-generator is a geodesic field tangent to xi ...
        Vec3 rhs = euler_arnold_rhs(res.constants, res.C);
        CHECK(rhs.lpNorm<Eigen::Infinity>() <= 1e-12);
        CHECK(std::abs(res.C[0]) <= 1e-12);
        // ... orthogonal to the chart generators of the subgroup factor.
        CHECK(std::abs(res.C.dot(res.A)) <= 1e-12);
        CHECK(std::abs(res.C.dot(res.B)) <= 1e-12);
    }
}
