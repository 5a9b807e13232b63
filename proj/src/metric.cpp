#include "contactlie/metric.hpp"

#include <cmath>
#include <limits>

namespace contactlie {

GeodesicCheck geodesic_criterion(const StructureConstants& c, int i, double tol) {
    GeodesicCheck out;
    for (int j = 0; j < 3; ++j) out.residual[j] = c.bracket(i, j)[i];
    out.geodesic = out.residual.lpNorm<Eigen::Infinity>() <= tol;
    return out;
}

Vec3 euler_arnold_rhs(const StructureConstants& c, const Vec3& u) {
    Vec3 rhs;
    for (int k = 0; k < 3; ++k) rhs[k] = u.dot(c.bracket(u, Vec3::Unit(k)));
    return rhs;
}

double GeodesicTrajectory::max_drift_from(const Vec3& ref) const {
    double worst = 0.0;
    for (const auto& v : u) worst = std::max(worst, (v - ref).lpNorm<Eigen::Infinity>());
    return worst;
}

double GeodesicTrajectory::max_energy_drift() const {
    if (u.empty()) return 0.0;
    const double e0 = u.front().norm();
    double worst = 0.0;
    for (const auto& v : u) worst = std::max(worst, std::abs(v.norm() - e0));
    return worst;
}

GeodesicTrajectory integrate_geodesic(const StructureConstants& c, const Vec3& u0, double T,
                                      double dt) {
    if (!(dt > 0.0) || dt > 1e-3 * T) {
        throw InputError("step size must satisfy 0 < dt <= 1e-3 * T");
    }
    const int steps = static_cast<int>(std::ceil(T / dt));
    GeodesicTrajectory traj;
    traj.t.reserve(steps + 1);
    traj.u.reserve(steps + 1);
    Vec3 u = u0;
    double t = 0.0;
    traj.t.push_back(t);
    traj.u.push_back(u);
    for (int s = 0; s < steps; ++s) {
        const double h = std::min(dt, T - t);
        const Vec3 k1 = euler_arnold_rhs(c, u);
        const Vec3 k2 = euler_arnold_rhs(c, u + 0.5 * h * k1);
        const Vec3 k3 = euler_arnold_rhs(c, u + 0.5 * h * k2);
        const Vec3 k4 = euler_arnold_rhs(c, u + h * k3);
        u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        traj.t.push_back(t);
        traj.u.push_back(u);
    }
    return traj;
}

namespace {

// Chart generators of the factored subgroups, in model algebra coordinates:
// h(s, t) = e^{sA} e^{tB}, transverse factor e^{zX}.
struct WitnessFrame {
    Vec3 A, B, X;
};

WitnessFrame witness_frame(Model model) {
    if (model == Model::Heisenberg) {
        // Subalgebra span{v0, v2}, geodesic transverse field v1.
        return {Vec3{1, 0, 0}, Vec3{0, 0, 1}, Vec3{0, 1, 0}};
    }
    // SL(2): upper-triangular subgroup (unipotent, diagonal), elliptic factor.
    return {Vec3{-1, 0, 1}, Vec3{0, 1, 0}, Vec3{1, 0, 0}};
}

template <typename Mat>
Mat model_element(const std::array<Mat, 3>& basis, const Vec3& coords) {
    return coords[0] * basis[0] + coords[1] * basis[1] + coords[2] * basis[2];
}

template <typename Mat, typename ExpFn, typename CoordsFn>
NormalExpReport witness_impl(const std::array<Mat, 3>& basis, ExpFn exp_fn, CoordsFn coords_fn,
                             const WitnessFrame& frame, const std::vector<double>& s_grid,
                             const std::vector<double>& t_grid, const std::vector<double>& z_grid,
                             double fd_step) {
    const Mat ma = model_element(basis, frame.A);
    const Mat mb = model_element(basis, frame.B);
    const Mat mx = model_element(basis, frame.X);

    const auto point = [&](double s, double t, double z) -> Mat {
        return exp_fn(Mat(s * ma)) * exp_fn(Mat(t * mb)) * exp_fn(Mat(z * mx));
    };

    NormalExpReport rep;
    rep.min_abs_jacobian = std::numeric_limits<double>::infinity();
    rep.min_pair_separation = std::numeric_limits<double>::infinity();

    std::vector<Mat> images;
    for (double s : s_grid) {
        for (double t : t_grid) {
            for (double z : z_grid) {
                const Mat g = point(s, t, z);
                images.push_back(g);

                // Left-trivialized differential: coords of g^-1 dg per parameter.
                const Mat ginv = g.inverse();
                Mat3 jac;
                const std::array<std::array<double, 3>, 3> offsets = {
                    {{fd_step, 0, 0}, {0, fd_step, 0}, {0, 0, fd_step}}};
                for (int col = 0; col < 3; ++col) {
                    const auto& o = offsets[col];
                    const Mat gp = point(s + o[0], t + o[1], z + o[2]);
                    const Mat gm = point(s - o[0], t - o[1], z - o[2]);
                    const Mat d = (gp - gm) / (2.0 * fd_step);
                    jac.col(col) = coords_fn(Mat(ginv * d));
                }
                rep.min_abs_jacobian = std::min(rep.min_abs_jacobian, std::abs(jac.determinant()));
            }
        }
    }
    rep.sample_count = images.size();
    for (std::size_t p = 0; p < images.size(); ++p) {
        for (std::size_t q = p + 1; q < images.size(); ++q) {
            rep.min_pair_separation = std::min(
                rep.min_pair_separation, (images[p] - images[q]).template lpNorm<Eigen::Infinity>());
        }
    }
    return rep;
}

} // namespace

NormalExpReport normal_exponential(Model model, const std::vector<double>& s_grid,
                                   const std::vector<double>& t_grid,
                                   const std::vector<double>& z_grid, double fd_step) {
    const WitnessFrame frame = witness_frame(model);
    if (model == Model::Heisenberg) {
        return witness_impl<Mat3>(
            heisenberg_algebra_basis(),
            [](const Mat3& m) { return Mat3(Mat3::Identity() + m + 0.5 * (m * m)); },
            heis_algebra_coords, frame, s_grid, t_grid, z_grid, fd_step);
    }
    return witness_impl<Mat2>(sl2_algebra_basis(), sl2_exp, sl2_algebra_coords, frame, s_grid,
                              t_grid, z_grid, fd_step);
}

} // namespace contactlie
