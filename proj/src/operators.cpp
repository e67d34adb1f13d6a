#include "jeft/operators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jeft {

complex_t laplace_beltrami(const ScalarField& u, const Point& x,
                           const ModelParams& model) {
    double h = u.stencil_step;
    if (h < 1e-4 || h > 1e-1)
        throw std::invalid_argument("laplace_beltrami: step must be in [1e-4, 1e-1]");
    int n = model.dim;
    if (x.norm() + h * std::sqrt(static_cast<double>(n)) >= 1.0)
        throw std::domain_error("laplace_beltrami: stencil leaves the ball");

    complex_t u0 = u.eval(x);
    complex_t lap_e{};
    complex_t radial{};
    for (int k = 0; k < n; ++k) {
        Point xp = x, xm = x;
        xp.v[k] += h;
        xm.v[k] -= h;
        complex_t up = u.eval(xp), um = u.eval(xm);
        lap_e += (up - 2.0 * u0 + um) / (h * h);
        radial += x.v[k] * (up - um) / (2.0 * h);
    }
    double q = 1.0 - x.norm2();
    return 0.25 * q * q * lap_e + (n - 2) * 0.5 * q * radial;
}

double eigen_residual(const ScalarField& u, SpectralParam lambda,
                      std::span<const Point> sample, const ModelParams& model) {
    complex_t lam = lambda.value;
    complex_t ev = -(lam * lam + model.rho * model.rho);
    std::vector<double> res(sample.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(sample.size()); ++i) {
        complex_t u0 = u.eval(sample[i]);
        complex_t d = laplace_beltrami(u, sample[i], model);
        res[i] = std::abs(d - ev * u0) / (1.0 + std::abs(u0));
    }
    double out = 0.0;
    for (double r : res) out = std::max(out, r);  // deterministic reduction
    return out;
}

}  // namespace jeft
