#pragma once

#include <functional>
#include <span>

#include "jeft/geometry.hpp"

namespace jeft {

// Complex-valued field on the ball together with the finite-difference
// stencil step used to differentiate it.
struct ScalarField {
    std::function<complex_t(const Point&)> eval;
    double stencil_step = 1e-3;
};

// Laplace-Beltrami operator of the ball model (curvature -1),
//   Delta u = ((1-|x|^2)^2/4) Delta_euc u + (n-2)((1-|x|^2)/2) x . grad u,
// via central differences of step h; truncation error O(h^2).
complex_t laplace_beltrami(const ScalarField& u, const Point& x,
                           const ModelParams& model);

// max over the sample of |Delta u + (lambda^2 + rho^2) u| / (1 + |u|);
// zero for members of the joint eigenspace E_lambda(X).
double eigen_residual(const ScalarField& u, SpectralParam lambda,
                      std::span<const Point> sample, const ModelParams& model);

}  // namespace jeft
