// Timing comparison of the serial reference kernels against the OpenMP
// production paths.  Not part of the test suite; run manually:
//   ./build/bench/bench_kernels [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "curvecodes/ag_codes.hpp"
#include "curvecodes/curve_catalog.hpp"
#include "curvecodes/gf_matrix.hpp"
#include "curvecodes/point_enum.hpp"
#include "curvecodes/reference.hpp"

using namespace curvecodes;

namespace {

template <typename F>
double time_ms(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double par_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %7.2fx\n", name, serial_ms, par_ms,
                par_ms > 0 ? serial_ms / par_ms : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : 0;
#ifdef _OPENMP
    std::printf("hardware threads available: %d, using: %d\n", omp_get_max_threads(),
                threads > 0 ? threads : omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns are serial\n");
#endif
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    const Field& F = Field::gf4096();
    const auto spec = make_curve(CurveFamily::SuzukiCover, 1);

    // enumeration: solver-based serial vs parallel, plus the naive scan
    const double enum_serial = time_ms([&] { enumerate_points(spec, F, 1); });
    const double enum_par = time_ms([&] { enumerate_points(spec, F, threads); });
    row("point enumeration", enum_serial, enum_par);
    const double enum_naive = time_ms([&] { reference::enumerate_naive(spec, F); });
    std::printf("%-34s %10.1f ms   (exhaustive y/t scan, single source of truth for tests)\n",
                "  reference scan", enum_naive);

    const PointSet pts = enumerate_points(spec, F, threads);
    const OnePointCodes codes(F, pts, spec);

    const double pm_serial = time_ms([&] { verify_plane_model(pts, spec, F, 1); });
    const double pm_par = time_ms([&] { verify_plane_model(pts, spec, F, threads); });
    row("plane-model sweep", pm_serial, pm_par);

    const double ca_serial = time_ms([&] { codes.castle_duality_check(1, 1); });
    const double ca_par = time_ms([&] { codes.castle_duality_check(1, threads); });
    row("duality power-sum sweep", ca_serial, ca_par);

    // rank r = 392, full width: dense reference vs bit-sliced
    {
        const auto b = basis(codes.semigroup(), codes.solver(), 392, codes.genus());
        std::vector<std::vector<uint32_t>> dense(b.dimension(),
                                                 std::vector<uint32_t>(pts.size(), 0));
        for (size_t r = 0; r < b.dimension(); ++r)
            for (size_t j = 0; j < pts.size(); ++j)
                dense[r][j] = evaluate(F, b.monomials[r], pts[j]).code;
        const double dense_ms = time_ms([&] { reference::rank_dense(F, dense); });
        const double slice_ms = time_ms([&] {
            GfBitMatrix M = evaluation_matrix(F, pts, b, {}, threads);
            M.rank_destructive(F, threads);
        });
        row("rank r=392 (dense ref vs sliced)", dense_ms, slice_ms);
    }

    // rank r = 5000 on the leading-columns certificate, serial vs parallel
    {
        const double r5_serial = time_ms([&] { codes.rank_check(5000, false, 1); });
        const double r5_par = time_ms([&] { codes.rank_check(5000, false, threads); });
        row("rank r=5000 (bit-sliced)", r5_serial, r5_par);
    }
    return 0;
}
