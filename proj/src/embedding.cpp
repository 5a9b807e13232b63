#include "contactlie/embedding.hpp"

#include <cmath>
#include <limits>

namespace contactlie {

std::vector<double> GridSpec::axis() const {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = (lo + hi) / 2.0;
        return out;
    }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = lo + i * step;
    return out;
}

namespace {

double principal_angle(const SecondKindChart& chart, double x, double y, double z) {
    const BetaValue b = beta_at(chart, x, y, z);
    return std::atan2(b.by, b.bx);
}

// d(angle)/dz = V / (bx^2 + by^2); used to bound how far the angle can move
// across a step, so that whole turns cannot alias away.
double angle_rate(const SecondKindChart& chart, double x, double y, double z) {
    const BetaValue b = beta_at(chart, x, y, z);
    const double n2 = b.bx * b.bx + b.by * b.by;
    if (n2 <= 0.0) return std::numeric_limits<double>::infinity();
    return (b.bx * b.dby_dz - b.by * b.dbx_dz) / n2;
}

// Continuous angle change between z0 and z1, by bisection until the wrapped
// endpoint difference is below pi/2 and the endpoint rates certify that no
// full turn fits inside the step.
double lift_delta(const SecondKindChart& chart, double x, double y, double z0, double a0,
                  double z1, int depth, int max_depth) {
    const double a1 = principal_angle(chart, x, y, z1);
    double d = a1 - a0;
    while (d > M_PI) d -= 2.0 * M_PI;
    while (d <= -M_PI) d += 2.0 * M_PI;
    const double rate =
        std::max(std::abs(angle_rate(chart, x, y, z0)), std::abs(angle_rate(chart, x, y, z1)));
    if (std::abs(d) < M_PI / 2.0 && rate * (z1 - z0) < M_PI / 2.0) return d;
    if (depth >= max_depth) {
        throw NumericalInconsistency("angle lift step resolution exhausted; refine the z grid");
    }
    const double zm = (z0 + z1) / 2.0;
    const double dm = lift_delta(chart, x, y, z0, a0, zm, depth + 1, max_depth);
    const double am = principal_angle(chart, x, y, zm);
    return dm + lift_delta(chart, x, y, zm, am, z1, depth + 1, max_depth);
}

} // namespace

std::vector<double> angle_lift(const SecondKindChart& chart, double x, double y,
                               const std::vector<double>& z_grid, int max_depth) {
    if (z_grid.empty()) return {};
    for (std::size_t k = 1; k < z_grid.size(); ++k) {
        if (!(z_grid[k] > z_grid[k - 1])) {
            throw InputError("z grid must be strictly increasing");
        }
    }
    std::vector<double> out(z_grid.size());
    double a_prev = principal_angle(chart, x, y, z_grid[0]);
    // Track the branch as an integer winding count so each output value is
    // exactly atan2 + 2*pi*k.
    long winding = 0;
    out[0] = a_prev;
    double lifted = a_prev;
    for (std::size_t k = 1; k < z_grid.size(); ++k) {
        const double d = lift_delta(chart, x, y, z_grid[k - 1], a_prev, z_grid[k], 0, max_depth);
        lifted += d;
        const double a_here = principal_angle(chart, x, y, z_grid[k]);
        winding = std::lround((lifted - a_here) / (2.0 * M_PI));
        out[k] = a_here + 2.0 * M_PI * static_cast<double>(winding);
        lifted = out[k];
        a_prev = a_here;
    }
    return out;
}

Vec3 phi(const SecondKindChart& chart, const Vec3& point, int max_depth) {
    const double x = point[0], y = point[1], z = point[2];
    const double a0 = principal_angle(chart, x, y, 0.0);
    double f = a0;
    if (z != 0.0) {
        const double lo = std::min(0.0, z);
        const double hi = std::max(0.0, z);
        const double a_lo = principal_angle(chart, x, y, lo);
        const double d = lift_delta(chart, x, y, lo, a_lo, hi, 0, max_depth);
        f = (z > 0.0) ? a0 + d : a0 - d;
    }
    return Vec3{x, y, f};
}

} // namespace contactlie
