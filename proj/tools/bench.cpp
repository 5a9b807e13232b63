// Benchmark: OpenMP grid kernels against the serial reference. Checks that
// both paths produce identical samples before timing them.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "contactlie/group_models.hpp"
#include "contactlie/pipeline.hpp"
#include "contactlie/presets.hpp"

namespace cl = contactlie;

namespace {

template <typename F>
double time_run(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool identical(const std::vector<cl::EmbeddingSample>& a,
               const std::vector<cl::EmbeddingSample>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(cl::EmbeddingSample)) == 0;
}

void bench_grid(const std::string& name, int n) {
    const auto& p = cl::preset(name);
    const auto chart = cl::classify(cl::canonical_frame(p.constants, p.data)).chart();
    const cl::GridSpec spec{n, -2.0, 2.0};

    std::vector<cl::EmbeddingSample> serial, parallel;
    const double ts = time_run([&] { serial = cl::evaluate_chart_grid(chart, spec, false); });
    const double tp = time_run([&] { parallel = cl::evaluate_chart_grid(chart, spec, true); });
    std::printf("grid %-10s n=%3d^3  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  %s\n",
                name.c_str(), n, ts * 1e3, tp * 1e3, ts / tp,
                identical(serial, parallel) ? "identical" : "MISMATCH");
}

void bench_factorization(std::size_t count) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> par(-2.0, 2.0);
    std::vector<cl::Mat2> elems(count);
    for (auto& g : elems) g = cl::sl2_compose({par(rng), par(rng), par(rng)});

    double worst_serial = 0.0, worst_parallel = 0.0;
    const double ts = time_run([&] {
        double w = 0.0;
        for (const auto& g : elems) {
            const auto f = cl::sl2_factorize(g);
            w = std::max(w, (cl::sl2_compose(f) - g).lpNorm<Eigen::Infinity>());
        }
        worst_serial = w;
    });
    const double tp = time_run([&] {
        double w = 0.0;
#pragma omp parallel for schedule(static) reduction(max : w)
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const auto f = cl::sl2_factorize(elems[i]);
            w = std::max(w, (cl::sl2_compose(f) - elems[i]).lpNorm<Eigen::Infinity>());
        }
        worst_parallel = w;
    });
    std::printf("sl2 factorization x%zu  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  "
                "residual %.2e / %.2e\n",
                count, ts * 1e3, tp * 1e3, ts / tp, worst_serial, worst_parallel);
}

} // namespace

int main(int argc, char** argv) {
    int n = 48;
    std::size_t batch = 2'000'000;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) batch = static_cast<std::size_t>(std::atoll(argv[2]));

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel paths run serially\n");
#endif
    for (const char* name : {"heisenberg", "sl2", "case1"}) bench_grid(name, n);
    bench_factorization(batch);
    return 0;
}
