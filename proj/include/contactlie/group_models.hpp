#pragma once

#include <array>
#include <vector>

#include "contactlie/algebra.hpp"

namespace contactlie {

enum class Model { Heisenberg, Sl2 };

/// Parameters (t1, t2, t3) with g = psi1(t1) psi2(t2) psi3(t3).
struct Factorization {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
};

// ---------------------------------------------------------------------------
// Heisenberg model: unit upper-triangular 3x3 matrices. The algebra basis
// (v0, v1, v2) = (-E13, E12, E23) realizes [v1, v2] = -v0 with all other
// brackets zero; the chart order is (v0, v1, v2).
// ---------------------------------------------------------------------------

std::array<Mat3, 3> heisenberg_algebra_basis();

/// g = exp(t1 v0) exp(t2 v1) exp(t3 v2); nilpotent exponentials are exact.
Mat3 heis_compose(const Factorization& f);

/// Closed-form coordinates of a unit upper-triangular matrix.
/// Throws StructuralError if g is not unit upper-triangular.
Factorization heis_factorize(const Mat3& g, double tol = 1e-9);

// ---------------------------------------------------------------------------
// SL(2) model. The algebra basis (v0, v1, v2) are the half-scaled rotation,
// diagonal and symmetric generators; subgroups: rotations, unipotent upper
// triangular, positive diagonal.
// ---------------------------------------------------------------------------

std::array<Mat2, 3> sl2_algebra_basis();

/// g = R(theta) * [[1, v],[0, 1]] * diag(e^u, e^-u) with (theta, v, u) = (t1, t2, t3).
Mat2 sl2_compose(const Factorization& f);

/// Unique rotation / unipotent / diagonal factorization: theta is the
/// two-argument angle of the first column, the rotated matrix is upper
/// triangular with positive diagonal. Throws StructuralError when det != 1.
Factorization sl2_factorize(const Mat2& a, double tol = 1e-9);

/// Continuous lift of the SO(2)-angles along a path of SL(2) matrices.
/// Requires consecutive elements closer than 0.5 in max norm.
std::vector<double> sl2_tilde_lift(const std::vector<Mat2>& path);

/// Closed-form exp of a traceless 2x2 matrix (cos/cosh branches).
Mat2 sl2_exp(const Mat2& m);

/// Coordinates of an algebra element in the model basis.
Vec3 heis_algebra_coords(const Mat3& w);
Vec3 sl2_algebra_coords(const Mat2& w);

/// Independent pullback oracle: evaluates beta directly in the matrix model
/// as theta0 of g^-1 dg along the chart g(x,y,z) = e^{xA} e^{yB} e^{zC},
/// using closed-form exponentials and matrix conjugation only. A, B, C and
/// theta0 are given in the model's algebra coordinates.
struct ModelBeta {
    double bx = 0.0;
    double by = 0.0;
};
ModelBeta model_beta_oracle(Model model, const Vec3& A, const Vec3& B, const Vec3& C,
                            const Covec3& theta0, double x, double y, double z);

/// Standard su(2) frame: identity coordinate vectors plus the structure
/// constants [e1,e0] = e2, [e2,e0] = -e1, [e2,e1] = e0.
struct Su2Frame {
    StructureConstants constants;
    Mat3 vectors; // columns e0, e1, e2
};
Su2Frame su2_standard_frame();

} // namespace contactlie
