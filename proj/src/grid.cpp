#include "contactlie/grid.hpp"

#include <cmath>
#include <limits>

namespace contactlie {

namespace {

struct LineResult {
    std::vector<EmbeddingSample> samples;
    double max_fd_mismatch = 0.0;
    double max_abs_bz = 0.0;
    bool monotone = true;
};

LineResult evaluate_line(const SecondKindChart& chart, double x, double y,
                         const std::vector<double>& zs, bool with_fd, double fd_step) {
    LineResult line;
    line.samples.resize(zs.size());
    const std::vector<double> fs = angle_lift(chart, x, y, zs);
    for (std::size_t k = 0; k < zs.size(); ++k) {
        const double z = zs[k];
        const BetaValue b = beta_at(chart, x, y, z);
        EmbeddingSample s;
        s.x = x;
        s.y = y;
        s.z = z;
        s.bx = b.bx;
        s.by = b.by;
        s.f = fs[k];
        s.u = x;
        s.v = y;
        s.w = fs[k];
        s.V = b.bx * b.dby_dz - b.by * b.dbx_dz;
        const double norm = std::sqrt(b.bx * b.bx + b.by * b.by);
        s.residual = (norm > 0.0) ? std::abs(b.bx * std::sin(s.f) - b.by * std::cos(s.f)) / norm
                                  : std::numeric_limits<double>::infinity();
        line.samples[k] = s;

        line.max_abs_bz = std::max(line.max_abs_bz, std::abs(beta_z_component(chart, z)));
        if (with_fd) {
            const BetaValue bp = beta_at(chart, x, y, z + fd_step);
            const BetaValue bm = beta_at(chart, x, y, z - fd_step);
            const double fdx = (bp.bx - bm.bx) / (2.0 * fd_step);
            const double fdy = (bp.by - bm.by) / (2.0 * fd_step);
            const double ex = std::abs(b.dbx_dz - fdx) / std::max(1.0, std::abs(b.dbx_dz));
            const double ey = std::abs(b.dby_dz - fdy) / std::max(1.0, std::abs(b.dby_dz));
            line.max_fd_mismatch = std::max({line.max_fd_mismatch, ex, ey});
        }
    }
    // Strict monotonicity of the lift, oriented by the volume sign.
    for (std::size_t k = 1; k < zs.size(); ++k) {
        const double df = line.samples[k].f - line.samples[k - 1].f;
        const double vsign = (line.samples[k].V > 0.0) ? 1.0 : -1.0;
        if (df * vsign <= 0.0) line.monotone = false;
    }
    return line;
}

std::vector<LineResult> evaluate_lines(const SecondKindChart& chart, const GridSpec& spec,
                                       bool parallel, bool with_fd, double fd_step) {
    const std::vector<double> xs = spec.axis();
    const int n = spec.n;
    std::vector<LineResult> lines(static_cast<std::size_t>(n) * n);

#pragma omp parallel for collapse(2) schedule(static) if (parallel)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lines[static_cast<std::size_t>(i) * n + j] =
                evaluate_line(chart, xs[i], xs[j], xs, with_fd, fd_step);
        }
    }
    return lines;
}

} // namespace

std::vector<EmbeddingSample> evaluate_chart_grid(const SecondKindChart& chart,
                                                 const GridSpec& spec, bool parallel) {
    const auto lines = evaluate_lines(chart, spec, parallel, false, 0.0);
    std::vector<EmbeddingSample> samples;
    samples.reserve(lines.size() * spec.n);
    for (const auto& line : lines) {
        samples.insert(samples.end(), line.samples.begin(), line.samples.end());
    }
    return samples;
}

bool ChartVerification::pass(double alignment_tol, double v_floor, double derivative_tol,
                             double separation_floor) const {
    return sample_count > 0 && max_alignment_residual <= alignment_tol &&
           max_abs_beta_z <= 1e-12 && min_abs_v >= v_floor && v_sign_constant &&
           min_beta_norm2 >= 1e-12 && max_derivative_mismatch <= derivative_tol &&
           min_pair_separation >= separation_floor && monotone;
}

ChartVerification verify_chart(const SecondKindChart& chart, const GridSpec& spec, bool parallel,
                               double fd_step, bool check_injectivity) {
    chart.validate();
    const auto lines = evaluate_lines(chart, spec, parallel, true, fd_step);

    ChartVerification out;
    out.min_abs_v = std::numeric_limits<double>::infinity();
    out.min_beta_norm2 = std::numeric_limits<double>::infinity();
    out.min_pair_separation = std::numeric_limits<double>::infinity();
    out.v_sign_constant = true;
    out.monotone = true;

    std::vector<EmbeddingSample> samples;
    for (const auto& line : lines) {
        out.max_derivative_mismatch = std::max(out.max_derivative_mismatch, line.max_fd_mismatch);
        out.max_abs_beta_z = std::max(out.max_abs_beta_z, line.max_abs_bz);
        if (!line.monotone) out.monotone = false;
        for (const auto& s : line.samples) {
            out.max_alignment_residual = std::max(out.max_alignment_residual, s.residual);
            out.min_abs_v = std::min(out.min_abs_v, std::abs(s.V));
            out.min_beta_norm2 = std::min(out.min_beta_norm2, s.bx * s.bx + s.by * s.by);
            const int sign = (s.V > 0.0) ? 1 : ((s.V < 0.0) ? -1 : 0);
            if (out.v_sign == 0) out.v_sign = sign;
            if (sign == 0 || sign != out.v_sign) out.v_sign_constant = false;
            samples.push_back(s);
        }
    }
    out.sample_count = samples.size();

    if (check_injectivity) {
        for (std::size_t p = 0; p < samples.size(); ++p) {
            for (std::size_t q = p + 1; q < samples.size(); ++q) {
                const double du = samples[p].u - samples[q].u;
                const double dv = samples[p].v - samples[q].v;
                const double dw = samples[p].w - samples[q].w;
                out.min_pair_separation =
                    std::min(out.min_pair_separation, std::sqrt(du * du + dv * dv + dw * dw));
            }
        }
    }
    return out;
}

double max_alignment_residual(const std::vector<EmbeddingSample>& samples) {
    double worst = 0.0;
    for (const auto& s : samples) {
        const double norm = std::sqrt(s.bx * s.bx + s.by * s.by);
        if (norm <= 0.0) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, std::abs(s.bx * std::sin(s.f) - s.by * std::cos(s.f)) / norm);
    }
    return worst;
}

} // namespace contactlie
