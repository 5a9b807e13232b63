#include "contactlie/group_models.hpp"

#include <cmath>

namespace contactlie {

namespace {

Mat3 elem3(int i, int j, double v) {
    Mat3 m = Mat3::Zero();
    m(i, j) = v;
    return m;
}

Mat2 rotation2(double theta) {
    Mat2 r;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

} // namespace

std::array<Mat3, 3> heisenberg_algebra_basis() {
    return {elem3(0, 2, -1.0), elem3(0, 1, 1.0), elem3(1, 2, 1.0)};
}

Mat3 heis_compose(const Factorization& f) {
    // (I + t1 v0)(I + t2 v1)(I + t3 v2); second order terms cancel except t2*t3.
    Mat3 g = Mat3::Identity();
    g(0, 1) = f.t2;
    g(1, 2) = f.t3;
    g(0, 2) = f.t2 * f.t3 - f.t1;
    return g;
}

Factorization heis_factorize(const Mat3& g, double tol) {
    Mat3 lower = g;
    lower(0, 1) = lower(0, 2) = lower(1, 2) = 0.0;
    if ((lower - Mat3::Identity()).lpNorm<Eigen::Infinity>() > tol) {
        throw StructuralError("matrix is not unit upper-triangular");
    }
    Factorization f;
    f.t2 = g(0, 1);
    f.t3 = g(1, 2);
    f.t1 = g(0, 1) * g(1, 2) - g(0, 2);
    return f;
}

std::array<Mat2, 3> sl2_algebra_basis() {
    Mat2 v0, v1, v2;
    v0 << 0.0, -0.5, 0.5, 0.0;
    v1 << 0.5, 0.0, 0.0, -0.5;
    v2 << 0.0, 0.5, 0.5, 0.0;
    return {v0, v1, v2};
}

Mat2 sl2_compose(const Factorization& f) {
    Mat2 unip;
    unip << 1.0, f.t2, 0.0, 1.0;
    Mat2 diag;
    diag << std::exp(f.t3), 0.0, 0.0, std::exp(-f.t3);
    return rotation2(f.t1) * unip * diag;
}

Factorization sl2_factorize(const Mat2& a, double tol) {
    if (std::abs(a.determinant() - 1.0) > tol) {
        throw StructuralError("matrix is not in SL(2)");
    }
    const double theta = std::atan2(a(1, 0), a(0, 0));
    const Mat2 upper = rotation2(-theta) * a; // [[e^u, b], [0, e^-u]], e^u > 0
    const double eu = upper(0, 0);
    Factorization f;
    f.t1 = theta;
    f.t3 = std::log(eu);
    f.t2 = upper(0, 1) * eu;
    return f;
}

std::vector<double> sl2_tilde_lift(const std::vector<Mat2>& path) {
    std::vector<double> out(path.size());
    if (path.empty()) return out;
    out[0] = std::atan2(path[0](1, 0), path[0](0, 0));
    for (std::size_t i = 1; i < path.size(); ++i) {
        if ((path[i] - path[i - 1]).lpNorm<Eigen::Infinity>() >= 0.5) {
            throw InputError("path step too large for a reliable lift; refine the path");
        }
        const double a = std::atan2(path[i](1, 0), path[i](0, 0));
        double d = a - std::atan2(path[i - 1](1, 0), path[i - 1](0, 0));
        while (d > M_PI) d -= 2.0 * M_PI;
        while (d <= -M_PI) d += 2.0 * M_PI;
        out[i] = out[i - 1] + d;
    }
    return out;
}

Mat2 sl2_exp(const Mat2& m) {
    // Traceless 2x2: m^2 = -det(m) I, so exp is a cos/cosh pair.
    const double d = m.determinant();
    if (d > 1e-14) {
        const double s = std::sqrt(d);
        return std::cos(s) * Mat2::Identity() + (std::sin(s) / s) * m;
    }
    if (d < -1e-14) {
        const double s = std::sqrt(-d);
        return std::cosh(s) * Mat2::Identity() + (std::sinh(s) / s) * m;
    }
    return Mat2::Identity() + m + 0.5 * (m * m);
}

Vec3 heis_algebra_coords(const Mat3& w) {
    return Vec3{-w(0, 2), w(0, 1), w(1, 2)};
}

Vec3 sl2_algebra_coords(const Mat2& w) {
    return Vec3{w(1, 0) - w(0, 1), 2.0 * w(0, 0), w(0, 1) + w(1, 0)};
}

namespace {

template <typename Mat, typename Basis, typename Coords>
ModelBeta beta_in_model(const Basis& basis, Coords coords, const Vec3& A, const Vec3& B,
                        const Vec3& C, const Covec3& theta0, double y, double z,
                        Mat (*exp_fn)(const Mat&)) {
    const Mat ma = A[0] * basis[0] + A[1] * basis[1] + A[2] * basis[2];
    const Mat mb = B[0] * basis[0] + B[1] * basis[1] + B[2] * basis[2];
    const Mat mc = C[0] * basis[0] + C[1] * basis[1] + C[2] * basis[2];

    const Mat ey = exp_fn(Mat(-y * mb));
    const Mat ez = exp_fn(Mat(-z * mc));
    const Mat ey_inv = exp_fn(Mat(y * mb));
    const Mat ez_inv = exp_fn(Mat(z * mc));

    // g^-1 dg/dx = Ad(e^{-zC}) Ad(e^{-yB}) A, as matrix conjugation.
    const Mat gx = ez * (ey * ma * ey_inv) * ez_inv;
    const Mat gy = ez * mb * ez_inv;

    ModelBeta out;
    out.bx = pairing(theta0, coords(gx));
    out.by = pairing(theta0, coords(gy));
    return out;
}

Mat3 heis_exp(const Mat3& m) {
    // Strictly upper triangular: the series terminates at second order.
    return Mat3::Identity() + m + 0.5 * (m * m);
}

} // namespace

ModelBeta model_beta_oracle(Model model, const Vec3& A, const Vec3& B, const Vec3& C,
                            const Covec3& theta0, double /*x*/, double y, double z) {
    if (model == Model::Heisenberg) {
        return beta_in_model<Mat3>(heisenberg_algebra_basis(), heis_algebra_coords, A, B, C,
                                   theta0, y, z, heis_exp);
    }
    return beta_in_model<Mat2>(sl2_algebra_basis(), sl2_algebra_coords, A, B, C, theta0, y, z,
                               sl2_exp);
}

Su2Frame su2_standard_frame() {
    Su2Frame f{StructureConstants::from_brackets(Vec3{0, 0, -1}, Vec3{0, 1, 0}, Vec3{-1, 0, 0},
                                                 {"e0", "e1", "e2"}),
               Mat3::Identity()};
    return f;
}

} // namespace contactlie
