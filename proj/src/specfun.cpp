#include "jeft/specfun.hpp"

#include <algorithm>

#include "jeft/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jeft {

double plancherel_density(double lambda, const ModelParams& model) {
    if (lambda < 0.0 || !std::isfinite(lambda))
        throw std::domain_error("plancherel_density: lambda must be >= 0");
    if (model.dim == 2) return kKappaH2 * lambda * std::tanh(kPi * lambda);
    return kKappaH3 * lambda * lambda;
}

// sin(z)/z with the removable singularity expanded.
static complex_t sinc_c(complex_t z) {
    if (std::abs(z) < 1e-4) {
        complex_t z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
    }
    return std::sin(z) / z;
}

// r/sinh(r), removable at r = 0.
static double r_over_sinh(double r) {
    if (r < 1e-4) {
        double r2 = r * r;
        return 1.0 - r2 / 6.0 + 7.0 * r2 * r2 / 360.0 -
               31.0 * r2 * r2 * r2 / 15120.0;
    }
    return r / std::sinh(r);
}

int SphericalEvaluator::node_count(complex_t lambda, double r) const {
    double t = euclidean_radius(r);
    int n = resolution;
    if (t > 0.0) {
        double strip = -std::log(t);  // Fourier coefficients decay like t^k
        n = std::max(n, static_cast<int>(std::ceil(50.0 / strip)));
    }
    n = std::max(n, static_cast<int>(std::ceil(4.0 * std::abs(lambda) * t)) + 32);
    return std::min(n, 1 << 14);
}

complex_t SphericalEvaluator::operator()(complex_t lambda, double r) const {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::domain_error("spherical_fn: r must be finite and >= 0");
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
        throw std::domain_error("spherical_fn: lambda must be finite");
    if (r == 0.0) return 1.0;

    if (model.dim == 3)
        return sinc_c(lambda * r) * r_over_sinh(r);

    // n = 2: phi_lambda(r) = (1/N) sum_j ((1-t^2)/(1+t^2-2t cos th_j))^{1/2+i lambda}
    double t = euclidean_radius(r);
    double log1mt2 = std::log1p(-t * t);
    // exponent i*lambda + rho = (1/2 - Im lambda) + i Re lambda
    int n = node_count(lambda, r);
    complex_t out = kernels::phi_h2_sum(n, t, log1mt2, 0.5 - lambda.imag(),
                                        lambda.real()) /
                    static_cast<double>(n);
    if (lambda.imag() == 0.0) out = complex_t(out.real(), 0.0);
    return out;
}

complex_t spherical_fn(SpectralParam lambda, double r, const ModelParams& model) {
    return SphericalEvaluator(model)(lambda.value, r);
}

SphericalProfile::SphericalProfile(const SphericalEvaluator& eval,
                                   complex_t lambda, double r_max, double step)
    : lambda_(lambda), r_max_(r_max), step_(step) {
    if (!(r_max > 0.0) || !(step > 0.0))
        throw std::invalid_argument("SphericalProfile: bad range");
    size_t n = static_cast<size_t>(std::ceil(r_max / step)) + 4;
    samples_.resize(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        samples_[i] = eval(lambda, i * step_);
}

complex_t SphericalProfile::operator()(double r) const {
    if (r < 0.0) r = -r;  // phi is even in r
    double u = r / step_;
    long long i = static_cast<long long>(u);
    if (i < 1) i = 1;
    if (i > static_cast<long long>(samples_.size()) - 3)
        throw std::domain_error("SphericalProfile: radius beyond table");
    double s = u - i;
    // 4-point Lagrange on samples i-1 .. i+2
    double c0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
    double c1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    double c2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
    double c3 = (s + 1.0) * s * (s - 1.0) / 6.0;
    return c0 * samples_[i - 1] + c1 * samples_[i] + c2 * samples_[i + 1] +
           c3 * samples_[i + 2];
}

complex_t SphericalProfile::weighted_sum(std::size_t n, const double* d,
                                         const double* wf) const {
    double re = 0.0, im = 0.0;
    double inv_step = 1.0 / step_;
    long long last = static_cast<long long>(samples_.size()) - 3;
    const complex_t* p = samples_.data();
    for (std::size_t k = 0; k < n; ++k) {
        double r = d[k] < 0.0 ? -d[k] : d[k];
        double u = r * inv_step;
        long long i = static_cast<long long>(u);
        if (i < 1) i = 1;
        if (i > last)
            throw std::domain_error("SphericalProfile: radius beyond table");
        double s = u - i;
        double c0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
        double c1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
        double c2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
        double c3 = (s + 1.0) * s * (s - 1.0) / 6.0;
        double w = wf[k];
        re += w * (c0 * p[i - 1].real() + c1 * p[i].real() +
                   c2 * p[i + 1].real() + c3 * p[i + 2].real());
        im += w * (c0 * p[i - 1].imag() + c1 * p[i].imag() +
                   c2 * p[i + 1].imag() + c3 * p[i + 2].imag());
    }
    return {re, im};
}

}  // namespace jeft
