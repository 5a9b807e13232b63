#include "contactlie/classify.hpp"

#include <cmath>

namespace contactlie {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Su2: return "Su2";
        case CaseTag::Sl2Tilde: return "Sl2Tilde";
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::Case3Heis: return "Case3Heis";
    }
    return "?";
}

SecondKindChart ClassificationResult::chart() const {
    if (!has_chart()) {
        throw UnsupportedCase("no factorization chart: the algebra is isomorphic to su(2), "
                              "which admits no three-subgroup factorization");
    }
    SecondKindChart chart;
    chart.constants = constants;
    chart.A = A;
    chart.B = B;
    chart.C = C;
    chart.theta0 = Covec3{1.0, 0.0, 0.0};
    chart.validate();
    return chart;
}

namespace {

Vec3 sign_fixed(Vec3 v) {
    int lead = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
    }
    if (v[lead] < 0.0) v = -v;
    return v;
}

} // namespace

ClassificationResult classify(const CanonicalFrame& cf) {
    ClassificationResult res;
    res.a = cf.a;
    res.b = cf.b;
    res.m1 = cf.m1;
    res.m2 = cf.m2;
    res.constants = cf.pattern_constants();

    const double scale = std::max({1.0, std::abs(cf.a), std::abs(cf.b), std::abs(cf.m1),
                                   std::abs(cf.m2)});
    const double eps = kTol * scale;
    const auto zero = [&](double x) { return std::abs(x) <= eps; };

    if (std::abs(cf.a * cf.m1) > eps * scale || std::abs(cf.b * cf.m2) > eps * scale) {
        throw NumericalInconsistency("a*m1 or b*m2 nonzero: not a contact Lie algebra datum");
    }

    const Vec3 v0 = Vec3::Unit(0), v1 = Vec3::Unit(1), v2 = Vec3::Unit(2);

    if (zero(cf.a) && zero(cf.b)) {
        res.tag = CaseTag::Case3Heis;
        res.A = v0;
        res.B = v2;
        res.C = v1;
        res.h_span = {res.A, res.B};
        return res;
    }
    if (zero(cf.a) && zero(cf.m2)) {
        res.tag = CaseTag::Case1;
        res.A = v0;
        res.B = v1;
        res.C = v2;
        res.h_span = {res.A, res.B};
        return res;
    }
    if (zero(cf.b) && zero(cf.m1)) {
        res.tag = CaseTag::Case2;
        res.A = v0;
        res.B = v2;
        res.C = v1;
        res.h_span = {res.A, res.B};
        return res;
    }
    if (!(zero(cf.m1) && zero(cf.m2))) {
        throw NumericalInconsistency("constants do not match any classification case");
    }

    // Semisimple pair, split by the Killing signature (basis independent).
    const KillingForm kf = killing_form(res.constants);
    Eigen::SelfAdjointEigenSolver<Mat3> eig(kf.K);
    const Vec3 ev = eig.eigenvalues();
    const double kscale = ev.cwiseAbs().maxCoeff();
    int negatives = 0;
    for (int i = 0; i < 3; ++i) {
        if (ev[i] < -kTol * kscale) ++negatives;
    }
    if (negatives == 3) {
        res.tag = CaseTag::Su2;
        return res;
    }
    if (negatives != 1) {
        throw NumericalInconsistency("Killing form is degenerate in the semisimple case");
    }

    res.tag = CaseTag::Sl2Tilde;
    const Sl2StandardBasis std_basis =
        sl2_standardize(res.constants, std::array<Vec3, 2>{v1, v2});
    const Vec3 u0 = std_basis.Q.col(0);
    const Vec3 u1 = std_basis.Q.col(1);
    const Vec3 u2 = std_basis.Q.col(2);
    // Triple (elliptic, unipotent, hyperbolic): g = e^{xA} e^{yB} e^{zC} is
    // the rotation/upper-triangular factorization on the universal cover.
    res.A = u0;
    res.B = u2 - u0;
    res.C = u1;
    res.h_span = {res.B, res.C}; // the 2-dim subgroup is the upper-triangular one
    return res;
}

Sl2StandardBasis sl2_standardize(const StructureConstants& c,
                                 std::optional<std::array<Vec3, 2>> xi_plane) {
    const KillingForm kf = killing_form(c);
    Eigen::SelfAdjointEigenSolver<Mat3> eig(kf.K);
    const Vec3 ev = eig.eigenvalues(); // ascending
    const double kscale = ev.cwiseAbs().maxCoeff();
    if (!(ev[0] < -kTol * kscale && ev[1] > kTol * kscale && ev[2] > kTol * kscale)) {
        throw UnsupportedCase("Killing signature is not (2,1): not an sl(2)-type algebra");
    }

    // Elliptic generator: timelike eigendirection, normalized to K(u0,u0) = -2.
    Vec3 u0 = sign_fixed(eig.eigenvectors().col(0));
    u0 *= std::sqrt(2.0 / -(u0.dot(kf.K * u0)));

    // Spacelike partner. With a plane given, intersect it with the K-orthogonal
    // complement of u0; otherwise K-project the coordinate axes off u0 and
    // keep the strongest candidate (deterministic even when the positive
    // eigenvalues coincide).
    Vec3 u1;
    if (xi_plane) {
        const Vec3& p1 = (*xi_plane)[0];
        const Vec3& p2 = (*xi_plane)[1];
        const double r1 = u0.dot(kf.K * p1);
        const double r2 = u0.dot(kf.K * p2);
        const double rnorm = std::hypot(r1, r2);
        Vec3 w = (rnorm <= kTol * kscale) ? p1 : Vec3(r2 * p1 - r1 * p2);
        if (w.norm() <= kTol) {
            throw NumericalInconsistency("plane degenerates against the elliptic direction");
        }
        u1 = sign_fixed(w);
    } else {
        const double ku0 = u0.dot(kf.K * u0);
        Vec3 best = Vec3::Zero();
        double best_k = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Vec3 axis = Vec3::Unit(i);
            const Vec3 cand = axis - (u0.dot(kf.K * axis) / ku0) * u0;
            const double kn = cand.dot(kf.K * cand);
            if (kn > best_k * (1.0 + 1e-9)) {
                best_k = kn;
                best = cand;
            }
        }
        u1 = sign_fixed(best);
    }
    const double ku1 = u1.dot(kf.K * u1);
    if (ku1 <= kTol * kscale) {
        throw NumericalInconsistency("candidate v1 direction is not spacelike");
    }
    u1 *= std::sqrt(2.0 / ku1);

    // v2 = [v0, v1]; invariance of K makes the remaining brackets automatic.
    const Vec3 u2 = c.bracket(u0, u1);

    Sl2StandardBasis out;
    out.Q.col(0) = u0;
    out.Q.col(1) = u1;
    out.Q.col(2) = u2;
    return out;
}

Mat3 su2_normalize(const Vec3& u, const Vec3& w) {
    // Killing form of the standard frame is -2 * identity, so Killing-unit
    // normals are Euclidean unit normals in these coordinates.
    Vec3 n = u.cross(w);
    if (n.norm() <= kTol * std::max(1.0, u.norm() * w.norm())) {
        throw StructuralError("plane vectors are linearly dependent");
    }
    n.normalize();
    n = sign_fixed(n); // the plane determines n only up to sign
    const Vec3 e0 = Vec3::Unit(0);

    const double cos_angle = n.dot(e0);
    if (cos_angle > 1.0 - kTol) return Mat3::Identity();

    Vec3 axis = n.cross(e0);
    if (axis.norm() <= kTol) {
        // n = -e0: half turn about e1.
        axis = Vec3::Unit(1);
        return Eigen::AngleAxisd(M_PI, axis).toRotationMatrix();
    }
    axis.normalize();
    const double angle = std::acos(std::clamp(cos_angle, -1.0, 1.0));
    return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

} // namespace contactlie
