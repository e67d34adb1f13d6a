#pragma once

#include <span>

#include "jeft/specfun.hpp"
#include "jeft/testfns.hpp"

namespace jeft {

// Sampled Helgason transform F(lambda_i, b_j) together with everything an
// inversion needs.  lambda_weights stays empty for grids not meant to be
// integrated over (e.g. complex-lambda growth scans).
struct HelgasonGrid {
    ModelParams model;
    std::vector<complex_t> lambdas;
    std::vector<double> lambda_weights;
    std::vector<BoundaryPoint> boundary_nodes;
    std::vector<double> boundary_weights;
    std::vector<complex_t> values;  // [l * nb + j]

    size_t nb() const { return boundary_nodes.size(); }
    complex_t at(size_t l, size_t j) const { return values[l * nb() + j]; }
};

// Sampled JEFT F(lambda_i, x_j).
struct JeftGrid {
    ModelParams model;
    std::vector<complex_t> lambdas;
    std::vector<Point> points;
    std::vector<complex_t> values;  // [l * np + j]

    size_t np() const { return points.size(); }
    complex_t at(size_t l, size_t j) const { return values[l * np() + j]; }
};

// Interior quadrature pass over the polar grid truncated at the integrand's
// support radius; fn(y, weight, r, dir_index) is called in fixed node order.
// weight carries sinh^{n-1}(r) and the full sphere measure.
template <class F>
void for_each_interior_node(const QuadratureGrid& grid, double r_max, F&& fn) {
    double rmax = std::min(r_max, grid.model.support_radius);
    std::vector<double> rn, rw;
    grid.radial_rule(rmax, rn, rw);
    double area = grid.model.sphere_area();
    int nm1 = grid.model.dim - 1;
    for (size_t i = 0; i < rn.size(); ++i) {
        double sh = std::sinh(rn[i]);
        double wr = rw[i] * (nm1 == 1 ? sh : sh * sh) * area;
        double t = euclidean_radius(rn[i]);
        for (size_t j = 0; j < grid.boundary_nodes.size(); ++j) {
            const BoundaryPoint& w = grid.boundary_nodes[j];
            Point y{{t * w.v[0], t * w.v[1], t * w.v[2]}, grid.model.dim};
            fn(y, wr * grid.boundary_weights[j], rn[i], j);
        }
    }
}

// Structure-of-arrays cache of the nonzero interior samples of f together
// with the per-node quantities the bulk kernels reuse.
struct NodeCache {
    std::array<std::vector<double>, 3> yv;  // node coordinates
    std::vector<double> wf;                 // quadrature weight * f(y)
    std::vector<double> la;                 // log(1 - |y|^2)
    std::vector<double> qy;                 // 1 - |y|^2

    size_t size() const { return wf.size(); }
    void build(const InteriorFunction& f, const QuadratureGrid& grid);
    // d2[k] = |y_k - b|^2
    void dist2_to_boundary(const BoundaryPoint& b, double* d2) const;
    // d[k] = geodesic distance from y_k to p
    void dist_to_point(const Point& p, double* d) const;
};

// Harish-Chandra spherical transform  fhat(lambda) = omega_{n-1}
// int_0^R f(r) phi_lambda(r) sinh^{n-1}(r) dr;  throws unless f is radial.
complex_t spherical_transform(const InteriorFunction& f, SpectralParam lambda,
                              const QuadratureGrid& grid,
                              const SphericalEvaluator& phi);

// Helgason Fourier transform  int_X f(x) exp((-i lambda + rho)<x,b>) dmu(x).
complex_t helgason_transform(const InteriorFunction& f, SpectralParam lambda,
                             const BoundaryPoint& b, const QuadratureGrid& grid);

// Bulk fill over (lambda, b); OpenMP-parallel over boundary columns with
// per-entry sums in fixed order (bitwise reproducible at any thread count).
HelgasonGrid helgason_grid(const InteriorFunction& f,
                           std::span<const complex_t> lambdas,
                           std::span<const double> lambda_weights,
                           const QuadratureGrid& grid);

// True when f's support comes within two radial nodes of the truncation
// radius R; quadrature results are then suspect.
bool support_near_edge(const InteriorFunction& f, const QuadratureGrid& grid);

// Poisson transform  (P_lambda F)(x) = int_B exp((i lambda + rho)<x,b>) F(b) db.
complex_t poisson_transform(const BoundaryFunction& F, SpectralParam lambda,
                            const Point& x, const QuadratureGrid& grid);

// JEFT, closed-convolution form  int_X f(y) phi_lambda(d(x,y)) dmu(y).
complex_t jeft_direct(const InteriorFunction& f, SpectralParam lambda,
                      const Point& x, const QuadratureGrid& grid,
                      const SphericalEvaluator& phi);
complex_t jeft_direct(const InteriorFunction& f, const SphericalProfile& phi,
                      const Point& x, const QuadratureGrid& grid);

// JEFT as the Poisson transform of the Helgason transform.  Both routes are
// first-class; their agreement is the central identity under test.
complex_t jeft_composed(const InteriorFunction& f, SpectralParam lambda,
                        const Point& x, const QuadratureGrid& grid);

JeftGrid jeft_direct_grid(const InteriorFunction& f,
                          std::span<const complex_t> lambdas,
                          std::span<const Point> points,
                          const QuadratureGrid& grid,
                          const SphericalEvaluator& phi);
JeftGrid jeft_composed_grid(const InteriorFunction& f,
                            std::span<const complex_t> lambdas,
                            std::span<const Point> points,
                            const QuadratureGrid& grid);

// Poisson value of one Helgason row:  P_lambda( F(lambda_l, .) )(x).
complex_t poisson_of_row(const HelgasonGrid& F, size_t l, const Point& x);

// Plancherel inversion
//   int_0^Lambda int_B F(lambda,b) exp((i lambda + rho)<x,b>) |c|^-2 db dlambda.
complex_t inverse_helgason(const HelgasonGrid& F, const Point& x);
std::vector<complex_t> inverse_helgason_field(const HelgasonGrid& F,
                                              std::span<const Point> points);

// max_b |F(lambda_max, b)| / max_{l,b} |F|; a value above 1e-8 means the
// spectral cutoff truncates a visible tail.
double spectral_tail_ratio(const HelgasonGrid& F);

// Convolution against a radial kernel: int_X f(y) g(d(x,y)) dmu(y).
complex_t convolve_radial(const InteriorFunction& f, const InteriorFunction& g,
                          const Point& x, const QuadratureGrid& grid);

}  // namespace jeft
