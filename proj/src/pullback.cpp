#include "contactlie/pullback.hpp"

#include <cmath>

#include "contactlie/expm.hpp"

namespace contactlie {

void SecondKindChart::validate(double tol) const {
    if (std::abs(pairing(theta0, C)) > tol * std::max(1.0, C.norm())) {
        throw StructuralError("chart generator C is not tangent to the contact plane");
    }
    Mat3 gens;
    gens.col(0) = A;
    gens.col(1) = B;
    gens.col(2) = C;
    if (std::abs(gens.determinant()) <= tol) {
        throw StructuralError("chart generators are linearly dependent");
    }
}

BetaValue beta_at(const SecondKindChart& chart, double /*x*/, double y, double z) {
    const Mat3 ad_b = chart.constants.ad(chart.B);
    const Mat3 ad_c = chart.constants.ad(chart.C);
    const Mat3 ez = expm3(ad_c, -z);
    const Mat3 ey = expm3(ad_b, -y);

    const Vec3 wa = ez * (ey * chart.A);
    const Vec3 wb = ez * chart.B;

    BetaValue out;
    out.bx = pairing(chart.theta0, wa);
    out.by = pairing(chart.theta0, wb);
    out.dbx_dz = -pairing(chart.theta0, ad_c * wa);
    out.dby_dz = -pairing(chart.theta0, ad_c * wb);
    return out;
}

double contact_volume(const SecondKindChart& chart, double x, double y, double z) {
    const BetaValue b = beta_at(chart, x, y, z);
    return b.bx * b.dby_dz - b.by * b.dbx_dz;
}

double beta_z_component(const SecondKindChart& chart, double z) {
    const Mat3 ez = expm3(chart.constants.ad(chart.C), -z);
    return pairing(chart.theta0, ez * chart.C);
}

} // namespace contactlie
