#include "jeft/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace jeft {

ModelParams ModelParams::h2(double R, double Lambda) {
    ModelParams p{2, 0.5, R, Lambda};
    p.validate();
    return p;
}

ModelParams ModelParams::h3(double R, double Lambda) {
    ModelParams p{3, 1.0, R, Lambda};
    p.validate();
    return p;
}

void ModelParams::validate() const {
    if (dim != 2 && dim != 3)
        throw std::domain_error("ModelParams: dimension must be 2 or 3");
    if (rho != 0.5 * (dim - 1))
        throw std::domain_error("ModelParams: rho must equal (n-1)/2");
    if (!(support_radius > 0.0) || !std::isfinite(support_radius))
        throw std::domain_error("ModelParams: support radius must be positive");
    if (!(spectral_cutoff > 0.0) || !std::isfinite(spectral_cutoff))
        throw std::domain_error("ModelParams: spectral cutoff must be positive");
}

static void check_interior(const Point& x, const char* what) {
    if (!(x.norm2() < 1.0))
        throw std::domain_error(std::string(what) +
                                ": point must lie in the open unit ball");
}

double geodesic_distance(const Point& x, const Point& y) {
    check_interior(x, "geodesic_distance");
    check_interior(y, "geodesic_distance");
    double dx = x.v[0] - y.v[0];
    double dy = x.v[1] - y.v[1];
    double dz = x.v[2] - y.v[2];
    double d2 = dx * dx + dy * dy + dz * dz;
    double denom = (1.0 - x.norm2()) * (1.0 - y.norm2());
    // cosh d = 1 + 2 d2/denom, written via asinh to stay exact near d = 0.
    return 2.0 * std::asinh(std::sqrt(d2 / denom));
}

double horocycle_bracket(const Point& x, const BoundaryPoint& b) {
    check_interior(x, "horocycle_bracket");
    if (std::abs(b.norm() - 1.0) > 1e-12)
        throw std::domain_error("horocycle_bracket: |b| must equal 1");
    double dx = x.v[0] - b.v[0];
    double dy = x.v[1] - b.v[1];
    double dz = x.v[2] - b.v[2];
    double d2 = dx * dx + dy * dy + dz * dz;
    return std::log1p(-x.norm2()) - std::log(d2);
}

Point translate(const Point& a, const Point& z) {
    check_interior(a, "translate");
    check_interior(z, "translate");
    if (a.dim != z.dim)
        throw std::domain_error("translate: dimension mismatch");
    if (a.dim == 2) {
        complex_t za(z.v[0], z.v[1]);
        complex_t aa(a.v[0], a.v[1]);
        complex_t w = (za + aa) / (1.0 + std::conj(aa) * za);
        return Point{{w.real(), w.imag(), 0.0}, 2};
    }
    // Moebius addition on the unit ball:
    //   a (+) z = ((1 + 2<a,z> + |z|^2) a + (1 - |a|^2) z) / (1 + 2<a,z> + |a|^2 |z|^2)
    double az = a.v[0] * z.v[0] + a.v[1] * z.v[1] + a.v[2] * z.v[2];
    double a2 = a.norm2(), z2 = z.norm2();
    double ca = 1.0 + 2.0 * az + z2;
    double cz = 1.0 - a2;
    double denom = 1.0 + 2.0 * az + a2 * z2;
    Point out{{}, 3};
    for (int k = 0; k < 3; ++k) out.v[k] = (ca * a.v[k] + cz * z.v[k]) / denom;
    return out;
}

Point point_at(double r, const BoundaryPoint& w) {
    double t = euclidean_radius(r);
    return Point{{t * w.v[0], t * w.v[1], t * w.v[2]}, w.dim};
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on P_n, Chebyshev-based initial guesses.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        nodes[i] = mid + half * nodes[i];
        weights[i] *= half;
    }
}

void QuadratureGrid::radial_rule(double r_max, std::vector<double>& nodes,
                                 std::vector<double>& weights) const {
    gauss_legendre(sizes.radial, 0.0, r_max, nodes, weights);
}

QuadratureGrid build_grids(const ModelParams& params, const GridSizes& sizes) {
    params.validate();
    if (sizes.radial < 4 || sizes.boundary < 4 || sizes.spectral < 4)
        throw std::invalid_argument("build_grids: all sizes must be >= 4");

    QuadratureGrid g;
    g.model = params;
    g.sizes = sizes;
    gauss_legendre(sizes.radial, 0.0, params.support_radius, g.radial_nodes,
                   g.radial_weights);
    gauss_legendre(sizes.spectral, 0.0, params.spectral_cutoff,
                   g.spectral_nodes, g.spectral_weights);

    if (params.dim == 2) {
        int nb = sizes.boundary;
        g.boundary_nodes.reserve(nb);
        g.boundary_weights.assign(nb, 1.0 / nb);
        for (int j = 0; j < nb; ++j) {
            double th = 2.0 * kPi * j / nb;
            g.boundary_nodes.push_back(
                BoundaryPoint{{std::cos(th), std::sin(th), 0.0}, 2});
        }
    } else {
        // Product rule on S^2: Gauss-Legendre in cos(theta), uniform azimuth.
        int np = sizes.boundary;
        int na = 2 * sizes.boundary;
        std::vector<double> u, wu;
        gauss_legendre(np, -1.0, 1.0, u, wu);
        g.boundary_nodes.reserve(static_cast<size_t>(np) * na);
        g.boundary_weights.reserve(static_cast<size_t>(np) * na);
        for (int i = 0; i < np; ++i) {
            double su = std::sqrt(std::max(0.0, 1.0 - u[i] * u[i]));
            double w = 0.5 * wu[i] / na;  // normalized: sum = 1
            for (int j = 0; j < na; ++j) {
                double ph = 2.0 * kPi * j / na;
                g.boundary_nodes.push_back(BoundaryPoint{
                    {su * std::cos(ph), su * std::sin(ph), u[i]}, 3});
                g.boundary_weights.push_back(w);
            }
        }
    }
    return g;
}

}  // namespace jeft
