// Timing comparison of the OpenMP bulk kernels against the serial reference
// implementations.  Not part of the test suite; run manually, e.g.
//   OMP_NUM_THREADS=8 ./bench_kernels [h2|h3]

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jeft/reference.hpp"
#include "jeft/verify.hpp"

using namespace jeft;

static double now_s() {
    using clk = std::chrono::steady_clock;
    return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

template <class F>
static double time_once(F&& fn) {
    double t0 = now_s();
    fn();
    return now_s() - t0;
}

int main(int argc, char** argv) {
    ModelParams model =
        (argc > 1 && std::string(argv[1]) == "h3") ? ModelParams::h3()
                                                   : ModelParams::h2();
    GridSizes sizes = model.dim == 2 ? GridSizes{96, 256, 16}
                                     : GridSizes{64, 24, 16};
    QuadratureGrid grid = build_grids(model, sizes);
    InteriorFunction f = suite(model)[3];

    std::vector<complex_t> lambdas(grid.spectral_nodes.begin(),
                                   grid.spectral_nodes.end());
    auto points = interior_sample(model, 6, 4, 0.2, 1.2);
    SphericalEvaluator phi(model);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("model H%d, %d thread(s), %zu lambda x %zu boundary nodes\n",
                model.dim, threads, lambdas.size(), grid.boundary_nodes.size());

    HelgasonGrid Fp, Fs;
    double tp = time_once([&] {
        Fp = helgason_grid(f, lambdas, grid.spectral_weights, grid);
    });
    double ts = time_once([&] {
        Fs = reference::helgason_grid_serial(f, lambdas, grid.spectral_weights,
                                             grid);
    });
    bool same = Fp.values == Fs.values;
    std::printf("helgason_grid      parallel %8.3fs  serial %8.3fs  x%.2f  %s\n",
                tp, ts, ts / tp, same ? "bitwise-equal" : "MISMATCH");

    JeftGrid Jp, Js;
    double jp = time_once(
        [&] { Jp = jeft_direct_grid(f, lambdas, points, grid, phi); });
    double js = time_once([&] {
        Js = reference::jeft_direct_grid_serial(f, lambdas, points, grid, phi);
    });
    same = Jp.values == Js.values;
    std::printf("jeft_direct_grid   parallel %8.3fs  serial %8.3fs  x%.2f  %s\n",
                jp, js, js / jp, same ? "bitwise-equal" : "MISMATCH");

    std::vector<complex_t> Ip, Is;
    double ip = time_once([&] { Ip = inverse_helgason_field(Fp, points); });
    double is = time_once(
        [&] { Is = reference::inverse_helgason_field_serial(Fs, points); });
    same = Ip == Is;
    std::printf("inverse_field      parallel %8.3fs  serial %8.3fs  x%.2f  %s\n",
                ip, is, is / ip, same ? "bitwise-equal" : "MISMATCH");
    return 0;
}
