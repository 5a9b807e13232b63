#pragma once

#include <vector>

#include "contactlie/embedding.hpp"

namespace contactlie {

/// Evaluate beta, the lifted angle and the image over the grid. Samples are
/// ordered by (x, y) line with z ascending; each line's lift is sequential
/// (branch continuity is order dependent) while distinct lines are
/// independent. The parallel kernel distributes lines over OpenMP threads
/// and writes disjoint slots, so its output is bit-identical to the serial
/// reference.
std::vector<EmbeddingSample> evaluate_chart_grid(const SecondKindChart& chart,
                                                 const GridSpec& spec, bool parallel);

/// Aggregate checks over a sampled chart.
struct ChartVerification {
    double max_alignment_residual = 0.0;
    double max_abs_beta_z = 0.0;
    double min_abs_v = 0.0;
    bool v_sign_constant = false;
    int v_sign = 0;
    double min_beta_norm2 = 0.0;
    double max_derivative_mismatch = 0.0; // analytic vs central differences
    double min_pair_separation = 0.0;
    bool monotone = false;

    std::size_t sample_count = 0;

    bool pass(double alignment_tol = 1e-9, double v_floor = 1e-6,
              double derivative_tol = 1e-6, double separation_floor = 1e-9) const;
};

/// Run the full verification over a grid: alignment residuals, volume sign,
/// beta(dz), finite-difference cross-check of the analytic z-derivatives,
/// monotonicity of the lift and pairwise image separation.
ChartVerification verify_chart(const SecondKindChart& chart, const GridSpec& spec,
                               bool parallel, double fd_step = 1e-5,
                               bool check_injectivity = true);

/// Recompute alignment residuals for externally modified samples (used to
/// show the check detects misaligned angles).
double max_alignment_residual(const std::vector<EmbeddingSample>& samples);

} // namespace contactlie
