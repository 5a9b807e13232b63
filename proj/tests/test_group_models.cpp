#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "contactlie/classify.hpp"
#include "contactlie/embedding.hpp"
#include "contactlie/group_models.hpp"
#include "contactlie/presets.hpp"
#include "helpers.hpp"

using namespace contactlie;

namespace {

Mat2 rotation(double t) {
    Mat2 r;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return r;
}

} // namespace

TEST_CASE("heisenberg algebra basis realizes the bracket table") {
    const auto b = heisenberg_algebra_basis();
    const Mat3 v1v2 = b[1] * b[2] - b[2] * b[1];
    CHECK((v1v2 + b[0]).lpNorm<Eigen::Infinity>() == 0.0); // [v1, v2] = -v0
    CHECK((b[0] * b[1] - b[1] * b[0]).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK((b[0] * b[2] - b[2] * b[0]).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("heis_factorize: identity, direct example, structural error") {
    const auto id = heis_factorize(Mat3::Identity());
    CHECK(id.t1 == 0.0);
    CHECK(id.t2 == 0.0);
    CHECK(id.t3 == 0.0);

    Mat3 g = Mat3::Identity();
    g(0, 1) = 1.0;
    g(0, 2) = 1.0;
    g(1, 2) = 1.0;
    const auto f = heis_factorize(g);
    CHECK((heis_compose(f) - g).lpNorm<Eigen::Infinity>() <= 1e-15);

    Mat3 bad = g;
    bad(2, 0) = 0.5;
    CHECK_THROWS_AS(heis_factorize(bad), StructuralError);
}

TEST_CASE("heis round trip: 1000 random unit upper-triangular elements") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        Mat3 g = Mat3::Identity();
        g(0, 1) = entry(rng);
        g(0, 2) = entry(rng);
        g(1, 2) = entry(rng);
        const auto f = heis_factorize(g);
        worst = std::max(worst, (heis_compose(f) - g).lpNorm<Eigen::Infinity>());
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("sl2_factorize: identity, triangular example, rotation") {
    const auto id = sl2_factorize(Mat2::Identity());
    CHECK(id.t1 == 0.0);
    CHECK(id.t2 == 0.0);
    CHECK(id.t3 == 0.0);

    Mat2 a;
    a << 2.0, 3.0, 0.0, 0.5;
    const auto f = sl2_factorize(a);
    CHECK(f.t1 == doctest::Approx(0.0));
    CHECK(f.t3 == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(f.t2 == doctest::Approx(6.0).epsilon(1e-15));

    const auto r = sl2_factorize(rotation(M_PI / 2.0));
    CHECK(r.t1 == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
    CHECK(r.t2 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.t3 == doctest::Approx(0.0).epsilon(1e-15));

    Mat2 notsl2;
    notsl2 << 2.0, 0.0, 0.0, 2.0;
    CHECK_THROWS_AS(sl2_factorize(notsl2), StructuralError);
}

TEST_CASE("sl2 round trip and positivity witness: 1000 random elements") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> par(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Mat2 g = sl2_compose({par(rng), par(rng), par(rng)});
        const auto f = sl2_factorize(g);
        worst = std::max(worst, (sl2_compose(f) - g).lpNorm<Eigen::Infinity>());
        // The normalization picks the rotation with e^u > 0.
        CHECK((rotation(-f.t1) * g)(0, 0) > 0.0);
        CHECK(std::abs((rotation(-f.t1) * g)(1, 0)) <= 1e-12);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("local injectivity: 1e-3 parameter nudges move the product by at least 1e-4") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> par(-2.0, 2.0);
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    const double delta = 1e-3;
    for (int k = 0; k < 200; ++k) {
        const Factorization f{par(rng), par(rng), par(rng)};
        const Mat2 g = sl2_compose(f);
        for (int which = 0; which < 3; ++which) {
            Factorization fp = f;
            (which == 0 ? fp.t1 : which == 1 ? fp.t2 : fp.t3) += delta;
            CHECK((sl2_compose(fp) - g).norm() >= 1e-4); // Frobenius
        }
        const Factorization h{entry(rng), entry(rng), entry(rng)};
        const Mat3 gh = heis_compose(h);
        for (int which = 0; which < 3; ++which) {
            Factorization hp = h;
            (which == 0 ? hp.t1 : which == 1 ? hp.t2 : hp.t3) += delta;
            CHECK((heis_compose(hp) - gh).norm() >= 1e-4);
        }
    }
}

TEST_CASE("sl2_tilde_lift: constant, single loop, double loop") {
    std::vector<Mat2> constant(10, rotation(0.3));
    const auto flat = sl2_tilde_lift(constant);
    for (double v : flat) CHECK(v == doctest::Approx(0.3).epsilon(1e-15));

    std::vector<Mat2> loop;
    for (int i = 0; i <= 100; ++i) loop.push_back(rotation(2.0 * M_PI * i / 100.0));
    const auto lifted = sl2_tilde_lift(loop);
    CHECK(lifted.front() == doctest::Approx(0.0));
    CHECK(lifted.back() == doctest::Approx(2.0 * M_PI).epsilon(1e-12));

    std::vector<Mat2> doubled;
    for (int i = 0; i <= 200; ++i) doubled.push_back(rotation(4.0 * M_PI * i / 200.0));
    CHECK(sl2_tilde_lift(doubled).back() == doctest::Approx(4.0 * M_PI).epsilon(1e-12));

    std::vector<Mat2> coarse{rotation(0.0), rotation(3.0)};
    CHECK_THROWS_AS(sl2_tilde_lift(coarse), InputError);
}

TEST_CASE("model beta oracle: heisenberg closed form (1, -z)") {
    const Vec3 A = Vec3::Unit(0), B = Vec3::Unit(1), C = Vec3::Unit(2);
    for (double y : {-2.0, 0.0, 1.5}) {
        for (double z : {-2.0, -0.1, 0.0, 2.0}) {
            const auto mb = model_beta_oracle(Model::Heisenberg, A, B, C, Covec3{1, 0, 0}, 0.3, y, z);
            CHECK(mb.bx == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(mb.by == doctest::Approx(-z).epsilon(1e-15));
        }
    }
}

TEST_CASE("model beta oracle: sl(2) at y = z = 0 reads theta0 of the generators") {
    const auto& p = preset("sl2");
    const auto res = classify(canonical_frame(p.constants, p.data));
    const auto mb =
        model_beta_oracle(Model::Sl2, res.A, res.B, res.C, Covec3{1, 0, 0}, 0.0, 0.0, 0.0);
    CHECK(mb.bx == doctest::Approx(res.A[0]).epsilon(1e-14));
    CHECK(mb.by == doctest::Approx(res.B[0]).epsilon(1e-14));
}

TEST_CASE("cross-oracle: the pullback kernel matches the matrix models on 4^3 grids") {
    const GridSpec spec{4, -2.0, 2.0};

    // Heisenberg: both the classification chart and the closed-form chart.
    const auto& h = preset("heisenberg");
    const auto hres = classify(canonical_frame(h.constants, h.data));
    std::vector<SecondKindChart> charts{hres.chart()};
    SecondKindChart oracle_chart;
    oracle_chart.constants = h.constants;
    oracle_chart.A = Vec3::Unit(0);
    oracle_chart.B = Vec3::Unit(1);
    oracle_chart.C = Vec3::Unit(2);
    charts.push_back(oracle_chart);
    for (const auto& chart : charts) {
        double worst = 0.0;
        for (double x : spec.axis())
            for (double y : spec.axis())
                for (double z : spec.axis()) {
                    const auto bv = beta_at(chart, x, y, z);
                    const auto mb = model_beta_oracle(Model::Heisenberg, chart.A, chart.B,
                                                      chart.C, chart.theta0, x, y, z);
                    worst = std::max({worst, std::abs(bv.bx - mb.bx), std::abs(bv.by - mb.by)});
                }
        CHECK(worst <= 1e-9);
    }

    // SL(2): classification chart against conjugation in the 2x2 model.
    const auto& s = preset("sl2");
    const auto sres = classify(canonical_frame(s.constants, s.data));
    const auto chart = sres.chart();
    double worst = 0.0;
    for (double x : spec.axis())
        for (double y : spec.axis())
            for (double z : spec.axis()) {
                const auto bv = beta_at(chart, x, y, z);
                const auto mb = model_beta_oracle(Model::Sl2, chart.A, chart.B, chart.C,
                                                  chart.theta0, x, y, z);
                worst = std::max({worst, std::abs(bv.bx - mb.bx), std::abs(bv.by - mb.by)});
            }
    CHECK(worst <= 1e-9);
}

TEST_CASE("su2 standard frame: brackets, Killing form, orthonormality") {
    const auto frame = su2_standard_frame();
    CHECK(frame.constants.bracket(1, 2)[0] == doctest::Approx(-1.0)); // [e1,e2] along e0
    CHECK((frame.constants.bracket(1, 0) - Vec3{0, 0, 1}).norm() == 0.0);  // [e1,e0] = e2
    CHECK((frame.constants.bracket(2, 0) + Vec3{0, 1, 0}).norm() == 0.0);  // [e2,e0] = -e1
    CHECK((frame.constants.bracket(2, 1) - Vec3{1, 0, 0}).norm() == 0.0);  // [e2,e1] = e0

    const auto kf = killing_form(frame.constants);
    CHECK((kf.K + 2.0 * Mat3::Identity()).lpNorm<Eigen::Infinity>() <= 1e-15);
    // Orthonormal under -K/2, the adjoint-picture form of -2 tr(xy).
    CHECK(((-0.5) * kf.K - Mat3::Identity()).lpNorm<Eigen::Infinity>() <= 1e-15);
}
