#pragma once

#include <array>
#include <string>

#include "contactlie/types.hpp"

namespace contactlie {

/// Structure constants of a 3-dimensional real Lie algebra in a fixed basis,
/// with the direct index convention [v_i, v_j] = sum_k C^k_ij v_k.
class StructureConstants {
  public:
    /// Build from the three independent brackets [v0,v1], [v0,v2], [v1,v2];
    /// the antisymmetric completion is implicit.
    static StructureConstants from_brackets(const Vec3& b01, const Vec3& b02, const Vec3& b12,
                                            std::array<std::string, 3> labels = {"v0", "v1", "v2"});

    /// Build from a full tensor c[i][j] = components of [v_i, v_j].
    /// Throws StructuralError if the tensor is not antisymmetric.
    static StructureConstants from_tensor(const std::array<std::array<Vec3, 3>, 3>& c,
                                          std::array<std::string, 3> labels = {"v0", "v1", "v2"},
                                          double tol = kTol);

    /// Components of [v_i, v_j].
    const Vec3& bracket(int i, int j) const { return table_[i][j]; }

    /// Bilinear extension: [x, y] for coordinate vectors x, y.
    Vec3 bracket(const Vec3& x, const Vec3& y) const;

    /// Adjoint matrix of x: ad(x) * y = [x, y].
    Mat3 ad(const Vec3& x) const;

    /// Largest |C^k_ij| (used for relative tolerances).
    double scale() const;

    const std::array<std::string, 3>& labels() const { return labels_; }

  private:
    std::array<std::array<Vec3, 3>, 3> table_{};
    std::array<std::string, 3> labels_{"v0", "v1", "v2"};
};

/// Contact plane xi = span{xi1, xi2} plus the defining covector alpha and a
/// coframe dual to a chosen frame.
struct ContactData {
    Vec3 xi1, xi2;
    Covec3 alpha;
    std::array<Covec3, 3> coframe;

    /// alpha(xi) = 0 and the coframe dual to (t, xi1, xi2), t = alpha^T/|alpha|^2.
    static ContactData make(const Vec3& xi1, const Vec3& xi2, const Covec3& alpha);
};

struct JacobiReport {
    double max_residual = 0.0;
    bool pass = false;
};

/// Max Jacobi residual over all index combinations; pass iff <= tol.
JacobiReport validate_jacobi(const StructureConstants& c, double tol = kTol);

struct ContactCheck {
    bool contact = false;
    double scalar = 0.0; // alpha([u1, u2])
};

/// Left-invariant contact condition: alpha([u1, u2]) != 0 for u1, u2 spanning xi.
/// Throws StructuralError if the xi vectors are dependent.
ContactCheck is_contact(const StructureConstants& c, const ContactData& data);

/// Reeb vector: the unique R with alpha(R) = 1 and alpha([R, u_i]) = 0.
/// Throws ContactViolation if the system is singular.
Vec3 reeb_vector(const StructureConstants& c, const ContactData& data);

struct KillingForm {
    Mat3 K;

    /// Invariance residual max |K([z,x],y) + K(x,[z,y])| over basis triples.
    double invariance_residual(const StructureConstants& c) const;
};

/// K_ij = trace(ad_i ad_j).
KillingForm killing_form(const StructureConstants& c);

/// Transform to the basis whose vectors are the columns of P (new = old * P):
/// C'^r_pq = sum (P^-1)_rk P_ip P_jq C^k_ij. Throws InputError if P is singular.
StructureConstants change_basis(const StructureConstants& c, const Mat3& P);

/// Transport contact data to the new basis: coordinates by P^-1, covectors by P.
ContactData change_basis(const ContactData& data, const Mat3& P);

} // namespace contactlie
