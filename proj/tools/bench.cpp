// Throughput comparison of the serial reference kernels against the OpenMP
// kernels, plus the component-parallel frame operator. Results must agree
// bit-for-bit; the benchmark asserts that while timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gff/gfusion.hpp"
#include "gff/io.hpp"
#include "gff/kernels.hpp"
#include "gff/matrix.hpp"
#include "gff/rng.hpp"

using gff::ComplexMatrix;
using gff::cplx;

namespace {

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void bench_matmul(std::size_t n, int reps) {
    gff::GaussianRng rng(7);
    const ComplexMatrix a = rng.normal_matrix(n, n);
    const ComplexMatrix b = rng.normal_matrix(n, n);
    ComplexMatrix c_serial(n, n), c_parallel(n, n);

    const double ts = time_best_of(reps, [&] {
        gff::kernels::matmul_serial(a.data(), n, n, b.data(), n,
                                    c_serial.data());
    });
    const double tp = time_best_of(reps, [&] {
        gff::kernels::matmul_parallel(a.data(), n, n, b.data(), n,
                                      c_parallel.data());
    });
    if (!(c_serial == c_parallel)) {
        std::fprintf(stderr, "matmul kernels disagree at n=%zu\n", n);
        std::exit(1);
    }
    std::printf("matmul  %4zux%-4zu  serial %8.3f ms  parallel %8.3f ms  speedup %.2fx\n",
                n, n, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_kron(std::size_t na, std::size_t nb, int reps) {
    gff::GaussianRng rng(11);
    const ComplexMatrix a = rng.normal_matrix(na, na);
    const ComplexMatrix b = rng.normal_matrix(nb, nb);
    ComplexMatrix c_serial(na * nb, na * nb), c_parallel(na * nb, na * nb);

    const double ts = time_best_of(reps, [&] {
        gff::kernels::kron_serial(a.data(), na, na, b.data(), nb, nb,
                                  c_serial.data());
    });
    const double tp = time_best_of(reps, [&] {
        gff::kernels::kron_parallel(a.data(), na, na, b.data(), nb, nb,
                                    c_parallel.data());
    });
    if (!(c_serial == c_parallel)) {
        std::fprintf(stderr, "kron kernels disagree at %zu kron %zu\n", na, nb);
        std::exit(1);
    }
    std::printf("kron    %4zux%-4zu  serial %8.3f ms  parallel %8.3f ms  speedup %.2fx\n",
                na, nb, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_frame_operator(std::size_t n, std::size_t comps, int reps) {
    gff::io::RandomSystemParams params;
    params.seed = 3;
    params.ambient_dim = n;
    params.n_components = comps;
    params.local_dims.assign(comps, n / 2);
    const gff::GFusionSystem sys = gff::io::random_system(params);

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    ComplexMatrix s1;
    const double ts =
        time_best_of(reps, [&] { s1 = gff::frame_operator(sys); });
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    ComplexMatrix sp;
    const double tp =
        time_best_of(reps, [&] { sp = gff::frame_operator(sys); });
    if (!(s1 == sp)) {
        std::fprintf(stderr, "frame_operator thread counts disagree\n");
        std::exit(1);
    }
    std::printf("frameop %4zu comps %-3zu serial %8.3f ms  parallel %8.3f ms  speedup %.2fx\n",
                n, comps, ts * 1e3, tp * 1e3, ts / tp);
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc > 1) reps = std::atoi(argv[1]);
    if (reps < 1) reps = 1;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n");
#endif

    bench_matmul(128, reps);
    bench_matmul(256, reps);
    bench_matmul(384, reps);
    bench_kron(48, 8, reps);
    bench_kron(64, 8, reps);
    bench_frame_operator(96, 24, reps);
    return 0;
}
