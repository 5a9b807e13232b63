#include "contactlie/algebra.hpp"

#include <cmath>

namespace contactlie {

StructureConstants StructureConstants::from_brackets(const Vec3& b01, const Vec3& b02,
                                                     const Vec3& b12,
                                                     std::array<std::string, 3> labels) {
    StructureConstants c;
    c.labels_ = std::move(labels);
    c.table_[0][1] = b01;
    c.table_[1][0] = -b01;
    c.table_[0][2] = b02;
    c.table_[2][0] = -b02;
    c.table_[1][2] = b12;
    c.table_[2][1] = -b12;
    for (int i = 0; i < 3; ++i) c.table_[i][i] = Vec3::Zero();
    return c;
}

StructureConstants StructureConstants::from_tensor(const std::array<std::array<Vec3, 3>, 3>& c,
                                                   std::array<std::string, 3> labels, double tol) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j <= i; ++j) {
            if ((c[i][j] + c[j][i]).lpNorm<Eigen::Infinity>() > tol) {
                throw StructuralError("structure constants are not antisymmetric in the lower indices");
            }
        }
    }
    return from_brackets(c[0][1], c[0][2], c[1][2], std::move(labels));
}

Vec3 StructureConstants::bracket(const Vec3& x, const Vec3& y) const {
    Vec3 out = Vec3::Zero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out += x[i] * y[j] * table_[i][j];
        }
    }
    return out;
}

Mat3 StructureConstants::ad(const Vec3& x) const {
    Mat3 m;
    for (int j = 0; j < 3; ++j) {
        Vec3 col = Vec3::Zero();
        for (int i = 0; i < 3; ++i) col += x[i] * table_[i][j];
        m.col(j) = col;
    }
    return m;
}

double StructureConstants::scale() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = std::max(s, table_[i][j].lpNorm<Eigen::Infinity>());
    return s;
}

ContactData ContactData::make(const Vec3& xi1, const Vec3& xi2, const Covec3& alpha) {
    ContactData d;
    d.xi1 = xi1;
    d.xi2 = xi2;
    d.alpha = alpha;
    const double a2 = alpha.squaredNorm();
    if (a2 <= 0.0) throw StructuralError("alpha must be a nonzero covector");
    Vec3 t = alpha.transpose() / a2; // alpha(t) = 1
    Mat3 frame;
    frame.col(0) = t;
    frame.col(1) = xi1;
    frame.col(2) = xi2;
    if (std::abs(frame.determinant()) < kTol) {
        throw StructuralError("xi vectors and alpha do not form a frame");
    }
    Mat3 dual = frame.inverse();
    for (int i = 0; i < 3; ++i) d.coframe[i] = dual.row(i);
    return d;
}

JacobiReport validate_jacobi(const StructureConstants& c, double tol) {
    // J^m_ijl = sum_k (C^k_ij C^m_kl + C^k_jl C^m_ki + C^k_li C^m_kj); one
    // vector equation per triple, evaluated for all index combinations.
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int l = 0; l < 3; ++l) {
                Vec3 jac = Vec3::Zero();
                for (int k = 0; k < 3; ++k) {
                    jac += c.bracket(i, j)[k] * c.bracket(k, l);
                    jac += c.bracket(j, l)[k] * c.bracket(k, i);
                    jac += c.bracket(l, i)[k] * c.bracket(k, j);
                }
                worst = std::max(worst, jac.lpNorm<Eigen::Infinity>());
            }
        }
    }
    return {worst, worst <= tol};
}

ContactCheck is_contact(const StructureConstants& c, const ContactData& data) {
    if (data.xi1.cross(data.xi2).norm() <= kTol * std::max(1.0, data.xi1.norm() * data.xi2.norm())) {
        throw StructuralError("xi vectors are linearly dependent");
    }
    const double s = data.alpha * c.bracket(data.xi1, data.xi2);
    return {s != 0.0, s};
}

Vec3 reeb_vector(const StructureConstants& c, const ContactData& data) {
    // Rows: alpha(R) = 1, alpha([R, xi1]) = 0, alpha([R, xi2]) = 0.
    Mat3 sys;
    Vec3 rhs{1.0, 0.0, 0.0};
    sys.row(0) = data.alpha;
    for (int r = 0; r < 2; ++r) {
        const Vec3& u = (r == 0) ? data.xi1 : data.xi2;
        Covec3 row;
        for (int i = 0; i < 3; ++i) row[i] = data.alpha * c.bracket(Vec3::Unit(i), u);
        sys.row(r + 1) = row;
    }
    Eigen::FullPivLU<Mat3> lu(sys);
    if (!lu.isInvertible()) {
        throw ContactViolation("Reeb system is singular; contact condition violated");
    }
    return lu.solve(rhs);
}

double KillingForm::invariance_residual(const StructureConstants& c) const {
    double worst = 0.0;
    for (int z = 0; z < 3; ++z) {
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) {
                const Vec3 zx = c.bracket(z, x);
                const Vec3 zy = c.bracket(z, y);
                const double r = zx.dot(K * Vec3::Unit(y)) + Vec3::Unit(x).dot(K * zy);
                worst = std::max(worst, std::abs(r));
            }
        }
    }
    return worst;
}

KillingForm killing_form(const StructureConstants& c) {
    std::array<Mat3, 3> ads;
    for (int i = 0; i < 3; ++i) ads[i] = c.ad(Vec3::Unit(i));
    Mat3 k;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j <= i; ++j) {
            k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
        }
    }
    return {k};
}

StructureConstants change_basis(const StructureConstants& c, const Mat3& P) {
    if (std::abs(P.determinant()) <= kTol) {
        throw InputError("change of basis matrix is singular");
    }
    const Mat3 Pinv = P.inverse();
    const Vec3 b01 = Pinv * c.bracket(Vec3(P.col(0)), Vec3(P.col(1)));
    const Vec3 b02 = Pinv * c.bracket(Vec3(P.col(0)), Vec3(P.col(2)));
    const Vec3 b12 = Pinv * c.bracket(Vec3(P.col(1)), Vec3(P.col(2)));
    return StructureConstants::from_brackets(b01, b02, b12, c.labels());
}

ContactData change_basis(const ContactData& data, const Mat3& P) {
    if (std::abs(P.determinant()) <= kTol) {
        throw InputError("change of basis matrix is singular");
    }
    const Mat3 Pinv = P.inverse();
    ContactData out;
    out.xi1 = Pinv * data.xi1;
    out.xi2 = Pinv * data.xi2;
    out.alpha = data.alpha * P;
    for (int i = 0; i < 3; ++i) out.coframe[i] = data.coframe[i] * P;
    return out;
}

} // namespace contactlie
