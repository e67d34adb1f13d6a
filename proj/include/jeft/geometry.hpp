#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Ball-model realization of the rank-one hyperbolic spaces H^2 and H^3
// (curvature -1, metric 2|dx|/(1-|x|^2)).  The base point o = eK is the
// origin; the boundary B is the unit circle/sphere.

namespace jeft {

using complex_t = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct ModelParams {
    int dim = 2;                  // n in {2, 3}
    double rho = 0.5;             // (n-1)/2
    double support_radius = 4.0;  // R, geodesic units
    double spectral_cutoff = 12.0;  // Lambda

    static ModelParams h2(double R = 4.0, double Lambda = 12.0);
    static ModelParams h3(double R = 4.0, double Lambda = 12.0);

    // Area of the unit sphere S^{n-1}: 2*pi (n=2) or 4*pi (n=3).
    double sphere_area() const { return dim == 2 ? 2.0 * kPi : 4.0 * kPi; }

    void validate() const;
};

struct Point {
    std::array<double, 3> v{0.0, 0.0, 0.0};
    int dim = 2;

    double norm2() const { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }
    double norm() const { return std::sqrt(norm2()); }

    static Point origin(int dim) { return Point{{0.0, 0.0, 0.0}, dim}; }
};

struct BoundaryPoint {
    std::array<double, 3> v{1.0, 0.0, 0.0};
    int dim = 2;

    double norm() const {
        return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    }
};

struct SpectralParam {
    complex_t value{0.0, 0.0};

    SpectralParam() = default;
    SpectralParam(double re) : value(re, 0.0) {}
    SpectralParam(complex_t z) : value(z) {}
};

// Geodesic distance, cosh d = 1 + 2|x-y|^2 / ((1-|x|^2)(1-|y|^2)).
double geodesic_distance(const Point& x, const Point& y);

// Horocycle bracket <x,b> = log((1-|x|^2)/|x-b|^2); the paper's A(x,b).
double horocycle_bracket(const Point& x, const BoundaryPoint& b);

// Moebius translation moving o to a; disk map (z+a)/(1+conj(a) z) for n=2,
// Moebius addition a (+) z on the unit ball for n=3.  Isometry of the model.
Point translate(const Point& a, const Point& z);

// Euclidean radius of the sphere at geodesic radius r.
inline double euclidean_radius(double r) { return std::tanh(0.5 * r); }

// Point at geodesic radius r in direction w (|w| = 1).
Point point_at(double r, const BoundaryPoint& w);

struct GridSizes {
    int radial = 96;
    int boundary = 256;  // nodes on B for n=2; polar count for n=3
                         // (azimuth count is 2x polar)
    int spectral = 128;
};

// Gauss-Legendre rule on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

struct QuadratureGrid {
    ModelParams model;
    GridSizes sizes;

    // Gauss-Legendre on [0, R].
    std::vector<double> radial_nodes, radial_weights;
    // Boundary nodes with weights normalized to total mass 1.
    std::vector<BoundaryPoint> boundary_nodes;
    std::vector<double> boundary_weights;
    // Gauss-Legendre on [0, Lambda].
    std::vector<double> spectral_nodes, spectral_weights;

    // Radial rule rescaled to [0, r_max] (interior integrals truncate at the
    // integrand's declared support radius rather than at R).
    void radial_rule(double r_max, std::vector<double>& nodes,
                     std::vector<double>& weights) const;
};

QuadratureGrid build_grids(const ModelParams& params, const GridSizes& sizes);

// Compensated (Kahan) accumulators; all quadrature sums run in fixed node
// order so results are reproducible across thread counts.
struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct KahanComplex {
    KahanSum re, im;
    void add(complex_t z) {
        re.add(z.real());
        im.add(z.imag());
    }
    complex_t value() const { return {re.value(), im.value()}; }
};

}  // namespace jeft
