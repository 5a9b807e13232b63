#pragma once

#include <vector>

#include "contactlie/pullback.hpp"

namespace contactlie {

/// One chart point with its pulled-back form, lifted angle and image.
struct EmbeddingSample {
    double x = 0, y = 0, z = 0;
    double bx = 0, by = 0;
    double f = 0;
    double u = 0, v = 0, w = 0;
    double V = 0;
    double residual = 0; // |bx sin f - by cos f| / |beta|
};

/// Uniform grid [lo, hi]^3 with n points per axis.
struct GridSpec {
    int n = 10;
    double lo = -2.0;
    double hi = 2.0;

    std::vector<double> axis() const;
};

/// Continuous lift of the angle of (bx, by) along a z-line. The first value
/// is the principal two-argument angle; each step stays on the same branch
/// (per-step increment < pi/2, refined adaptively). Throws InputError when
/// the grid is not strictly increasing, NumericalInconsistency when
/// refinement exceeds max_depth.
std::vector<double> angle_lift(const SecondKindChart& chart, double x, double y,
                               const std::vector<double>& z_grid, int max_depth = 40);

/// Normalization map: (x, y, z) -> (x, y, f), with f lifted continuously
/// from the principal angle at z = 0.
Vec3 phi(const SecondKindChart& chart, const Vec3& point, int max_depth = 40);

} // namespace contactlie
