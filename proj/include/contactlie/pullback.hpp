#pragma once

#include "contactlie/algebra.hpp"

namespace contactlie {

/// Chart of the second kind (x,y,z) -> exp(xA) exp(yB) exp(zC), together
/// with the covector theta0 whose kernel is the contact plane. Everything is
/// expressed in the same coordinates as the structure constants.
struct SecondKindChart {
    StructureConstants constants;
    Vec3 A, B, C;
    Covec3 theta0{1.0, 0.0, 0.0};

    /// theta0(C) = 0 and A, B, C independent.
    void validate(double tol = kTol) const;
};

/// Components of the pulled-back contact form at a chart point, with the
/// analytic z-derivatives. beta(dz) vanishes identically because theta0(C)=0.
struct BetaValue {
    double bx = 0.0;
    double by = 0.0;
    double dbx_dz = 0.0;
    double dby_dz = 0.0;
};

/// beta(dx) = theta0(exp(-z ad_C) exp(-y ad_B) A), beta(dy) = theta0(exp(-z ad_C) B).
BetaValue beta_at(const SecondKindChart& chart, double x, double y, double z);

/// V = bx * dby_dz - by * dbx_dz = (bx^2 + by^2) dz f; nonzero on genuine
/// contact charts.
double contact_volume(const SecondKindChart& chart, double x, double y, double z);

/// z-component of the pulled-back form (identically zero up to roundoff;
/// exposed so the verification suite can measure it honestly).
double beta_z_component(const SecondKindChart& chart, double z);

} // namespace contactlie
