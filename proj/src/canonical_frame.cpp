#include "contactlie/canonical_frame.hpp"

#include <cmath>

namespace contactlie {

namespace {

// Coordinates of x in the frame (w0, w1, w2).
Vec3 coords_in(const Mat3& frame_inv, const Vec3& x) { return frame_inv * x; }

// Unit eigenvector of the traceless 2x2 [[p,q],[r,-p]] for eigenvalue lambda,
// with a deterministic sign (largest component positive).
Vec2 eigenvector2(double p, double q, double r, double lambda) {
    Vec2 cand1{q, lambda - p};  // from row 1 of (M - lambda I)
    Vec2 cand2{lambda + p, r};  // from row 2
    Vec2 v = (cand1.norm() >= cand2.norm()) ? cand1 : cand2;
    v.normalize();
    const int lead = (std::abs(v[0]) >= std::abs(v[1])) ? 0 : 1;
    if (v[lead] < 0.0) v = -v;
    return v;
}

} // namespace

StructureConstants CanonicalFrame::pattern_constants() const {
    const Vec3 b01{0.0, 0.0, a};
    const Vec3 b02{0.0, b, 0.0};
    const Vec3 b12{-1.0, m1, m2};
    return StructureConstants::from_brackets(b01, b02, b12);
}

double CanonicalFrame::off_pattern_residual(const StructureConstants& c) const {
    const StructureConstants cc = change_basis(c, P);
    double worst = 0.0;
    // [v0,v1]: only the v2 slot belongs to the pattern.
    worst = std::max(worst, std::abs(cc.bracket(0, 1)[0]));
    worst = std::max(worst, std::abs(cc.bracket(0, 1)[1]));
    // [v0,v2]: only the v1 slot.
    worst = std::max(worst, std::abs(cc.bracket(0, 2)[0]));
    worst = std::max(worst, std::abs(cc.bracket(0, 2)[2]));
    // [v1,v2]: v0 slot pinned to -1, v1/v2 slots are m1/m2.
    worst = std::max(worst, std::abs(cc.bracket(1, 2)[0] + 1.0));
    return worst;
}

CanonicalFrame canonical_frame(const StructureConstants& c, const ContactData& data, double tol) {
    const ContactCheck check = is_contact(c, data);
    if (!check.contact) throw ContactViolation("input data is not contact");

    const Vec3 w0 = reeb_vector(c, data);
    const Vec3 w1 = data.xi1.normalized();
    const Vec3 w2 = data.xi2.normalized();

    Mat3 frame;
    frame.col(0) = w0;
    frame.col(1) = w1;
    frame.col(2) = w2;
    const Mat3 frame_inv = frame.inverse();

    const double cscale = std::max(1.0, c.scale());

    // ad_w0 restricted to xi, expressed in the (w1, w2) basis. The Reeb
    // property forces the w0 component of [w0, w_i] to vanish.
    Eigen::Matrix2d M;
    for (int i = 0; i < 2; ++i) {
        const Vec3 img = coords_in(frame_inv, c.bracket(w0, (i == 0) ? w1 : w2));
        if (std::abs(img[0]) > 1e-9 * cscale) {
            throw NumericalInconsistency("[R, xi] leaves the contact plane; data corrupt");
        }
        M(0, i) = img[1];
        M(1, i) = img[2];
    }
    if (std::abs(M.trace()) > std::max(tol, tol * M.lpNorm<Eigen::Infinity>())) {
        throw NumericalInconsistency("ad_R on xi is not traceless; contact data corrupt");
    }

    CanonicalFrame out;
    const double mscale = M.lpNorm<Eigen::Infinity>();

    Vec2 f1, f2; // xi basis in (w1, w2) coordinates

    if (mscale <= tol * cscale) {
        // Degenerate branch: [w0, xi] = 0. Eliminate the v1 component of
        // [v1, v2] by the explicit substitution.
        out.heisenberg_branch = true;
        const Vec3 q = coords_in(frame_inv, c.bracket(w1, w2)); // (q0, q1, q2)
        if (std::abs(q[0]) <= tol * cscale) {
            throw ContactViolation("[v1, v2] lies in xi; contact condition violated");
        }
        Vec3 v1c, v2c; // in (w0,w1,w2) coordinates
        double v0_scale;
        if (std::abs(q[1]) <= tol * cscale && std::abs(q[2]) <= tol * cscale) {
            v1c = Vec3{0, 1, 0};
            v2c = Vec3{0, 0, 1};
            v0_scale = -q[0];
        } else if (std::abs(q[2]) >= std::abs(q[1])) {
            // v1 = w1 / q2, v2 = q1 w1 + q2 w2  =>  [v1,v2] = v2 - v0
            v1c = Vec3{0, 1.0 / q[2], 0};
            v2c = Vec3{0, q[1], q[2]};
            v0_scale = -q[0];
        } else {
            // Same substitution after swapping the roles of w1 and w2.
            v1c = Vec3{0, 0, -1.0 / q[1]};
            v2c = Vec3{0, -q[1], -q[2]};
            v0_scale = q[0];
        }
        Mat3 P;
        P.col(0) = v0_scale * w0;
        P.col(1) = frame * v1c;
        P.col(2) = frame * v2c;
        out.P = P;
    } else {
        // Hollowing: make the traceless M zero on the diagonal.
        const double p = (M(0, 0) - M(1, 1)) / 2.0;
        const double q = M(0, 1);
        const double r = M(1, 0);
        const double disc = p * p + q * r; // eigenvalues +-sqrt(disc)
        const double branch_tol = 1e-10 * mscale * mscale;

        if (disc > branch_tol) {
            const double s = std::sqrt(disc);
            const Vec2 xp = eigenvector2(p, q, r, s);
            const Vec2 xm = eigenvector2(p, q, r, -s);
            f1 = xp + xm;
            f2 = xp - xm;
        } else if (disc < -branch_tol) {
            // M(u + iv) = i w (u + iv) with u = (q, -p), v = (0, w).
            const double w = std::sqrt(-disc);
            f1 = Vec2{q, -p}.normalized();
            f2 = Vec2{0.0, w}.normalized();
        } else {
            // Nilpotent: image direction first, then a preimage, so that
            // [v0, v2] lands on v1 and the degenerate slot is a.
            const Vec2 e1{1, 0}, e2{0, 1};
            const Vec2 g = ((M * e1).norm() >= (M * e2).norm()) ? e1 : e2;
            f1 = (M * g).normalized();
            f2 = g;
        }

        Vec3 v1 = frame * Vec3{0, f1[0], f1[1]};
        Vec3 v2 = frame * Vec3{0, f2[0], f2[1]};
        const double t0 = pairing(data.alpha, c.bracket(v1, v2)) / pairing(data.alpha, w0);
        if (std::abs(t0) <= tol * cscale) {
            throw ContactViolation("theta0([v1, v2]) vanished; contact condition violated");
        }
        Mat3 P;
        P.col(0) = -t0 * w0;
        P.col(1) = v1;
        P.col(2) = v2;
        out.P = P;
    }

    // Read the pattern constants off the transported tensor.
    const StructureConstants cc = change_basis(c, out.P);
    out.a = cc.bracket(0, 1)[2];
    out.b = cc.bracket(0, 2)[1];
    out.m1 = cc.bracket(1, 2)[1];
    out.m2 = cc.bracket(1, 2)[2];
    if (out.heisenberg_branch) {
        out.a = 0.0;
        out.b = 0.0;
        out.m1 = 0.0;
    }
    return out;
}

} // namespace contactlie
