#pragma once

#include <vector>

#include "contactlie/algebra.hpp"
#include "contactlie/group_models.hpp"

namespace contactlie {

struct GeodesicCheck {
    bool geodesic = false;
    Vec3 residual = Vec3::Zero(); // components of [v_i, v_j] along v_i
};

/// Frame vector v_i is geodesic for the orthonormal-frame metric iff the
/// v_i component of [v_i, v_j] vanishes for every j.
GeodesicCheck geodesic_criterion(const StructureConstants& c, int i, double tol = kTol);

/// Euler-Arnold right-hand side in the orthonormal frame:
/// rhs_k = <u, [u, v_k]>. A constant solution certifies a geodesic field.
Vec3 euler_arnold_rhs(const StructureConstants& c, const Vec3& u);

struct GeodesicTrajectory {
    std::vector<double> t;
    std::vector<Vec3> u;

    double max_drift_from(const Vec3& ref) const;
    double max_energy_drift() const; // |u(t)| vs |u(0)|
};

/// Fixed-step 4th-order integration of the Euler-Arnold equation.
/// Requires dt <= 1e-3 * T.
GeodesicTrajectory integrate_geodesic(const StructureConstants& c, const Vec3& u0, double T,
                                      double dt);

struct NormalExpReport {
    double min_abs_jacobian = 0.0;  // left-trivialized Jacobian determinant
    double min_pair_separation = 0.0;
    std::size_t sample_count = 0;
};

/// Sampled witness for the normal exponential map (h, z) -> h exp(z X):
/// finite-difference Jacobian minimum (in the left-trivialized frame) and
/// pairwise image separation over a parameter grid. h = h(s, t) ranges over
/// the factored 2-dimensional subgroup of the model, X generates the
/// transverse subgroup. Flags determinants below 1e-10 via the report.
NormalExpReport normal_exponential(Model model, const std::vector<double>& s_grid,
                                   const std::vector<double>& t_grid,
                                   const std::vector<double>& z_grid, double fd_step = 1e-6);

} // namespace contactlie
