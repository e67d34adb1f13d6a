#pragma once

#include "jeft/geometry.hpp"

namespace jeft {

// Plancherel density normalization constants, fixed once by the round-trip
// calibration fixture (tests/test_specfun.cpp) and hard-coded here:
//   f(0) = kappa_n * int_0^inf  fhat(lambda) phi_lambda(0) dens(lambda) dlambda
inline constexpr double kKappaH2 = 1.0 / (2.0 * kPi);        // density lambda*tanh(pi*lambda)
inline constexpr double kKappaH3 = 1.0 / (2.0 * kPi * kPi);  // density lambda^2

// |c(lambda)|^-2 spectral weight, kappa included.
double plancherel_density(double lambda, const ModelParams& model);

// Spherical function phi_lambda at geodesic radius r.
//   n = 2: normalized boundary integral of exp((i*lambda + rho) <x_r, b>)
//          over an adaptive uniform trapezoid rule on the circle.
//   n = 3: closed form sin(lambda r) / (lambda sinh r).
// phi is 1 at r = 0 exactly, real for real lambda, and even in lambda.
struct SphericalEvaluator {
    ModelParams model;
    int resolution = 256;  // base boundary node count for the n=2 integral

    SphericalEvaluator(const ModelParams& m, int res = 256)
        : model(m), resolution(res) {
        if (resolution < 64)
            throw std::invalid_argument(
                "SphericalEvaluator: resolution must be >= 64");
    }

    complex_t operator()(complex_t lambda, double r) const;

    // Trapezoid node count actually used at (lambda, r); grows with the
    // Euclidean radius (analyticity strip shrinks) and with |lambda|.
    int node_count(complex_t lambda, double r) const;
};

complex_t spherical_fn(SpectralParam lambda, double r, const ModelParams& model);

// Dense samples of r -> phi_lambda(r) on [0, r_max] with local cubic
// (4-point Lagrange) interpolation; used by the bulk transform kernels so a
// single boundary-integral pass serves many radii.
class SphericalProfile {
  public:
    SphericalProfile() = default;
    SphericalProfile(const SphericalEvaluator& eval, complex_t lambda,
                     double r_max, double step = 5e-4);

    complex_t operator()(double r) const;
    complex_t lambda() const { return lambda_; }

    // sum_k wf[k] * phi(d[k]) in fixed order (hot loop of the direct JEFT).
    complex_t weighted_sum(std::size_t n, const double* d,
                           const double* wf) const;

  private:
    complex_t lambda_{0.0, 0.0};
    double r_max_ = 0.0, step_ = 0.0;
    std::vector<complex_t> samples_;
};

}  // namespace jeft
