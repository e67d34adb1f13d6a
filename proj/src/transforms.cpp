#include "jeft/transforms.hpp"

#include "detail.hpp"
#include "jeft/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jeft {

// Structure-of-arrays cache of the nonzero interior samples of f; the bulk
// kernels build it once and reuse it across boundary columns / points.
void NodeCache::build(const InteriorFunction& f, const QuadratureGrid& grid) {
    for_each_interior_node(grid, f.support_radius,
                           [&](const Point& y, double w, double, size_t) {
                               double fv = f.eval(y);
                               if (fv == 0.0) return;
                               for (int k = 0; k < 3; ++k) yv[k].push_back(y.v[k]);
                               wf.push_back(w * fv);
                               la.push_back(std::log1p(-y.norm2()));
                               qy.push_back(1.0 - y.norm2());
                           });
}

void NodeCache::dist2_to_boundary(const BoundaryPoint& b, double* d2) const {
    size_t n = size();
    const double* x = yv[0].data();
    const double* y = yv[1].data();
    const double* z = yv[2].data();
    for (size_t k = 0; k < n; ++k) {
        double dx = x[k] - b.v[0], dy = y[k] - b.v[1], dz = z[k] - b.v[2];
        d2[k] = dx * dx + dy * dy + dz * dz;
    }
}

void NodeCache::dist_to_point(const Point& p, double* d) const {
    size_t n = size();
    const double* x = yv[0].data();
    const double* y = yv[1].data();
    const double* z = yv[2].data();
    double q = 1.0 - p.norm2();
    for (size_t k = 0; k < n; ++k) {
        double dx = x[k] - p.v[0], dy = y[k] - p.v[1], dz = z[k] - p.v[2];
        double d2 = dx * dx + dy * dy + dz * dz;
        // cosh d = 1 + 2 d2 / ((1-|p|^2)(1-|y|^2))
        d[k] = 2.0 * std::asinh(std::sqrt(d2 / (q * qy[k])));
    }
}

complex_t spherical_transform(const InteriorFunction& f, SpectralParam lambda,
                              const QuadratureGrid& grid,
                              const SphericalEvaluator& phi) {
    if (!f.is_radial || !f.radial)
        throw std::invalid_argument(
            "spherical_transform: function must be radial");
    double rmax = std::min(f.support_radius, grid.model.support_radius);
    std::vector<double> rn, rw;
    grid.radial_rule(rmax, rn, rw);
    double area = grid.model.sphere_area();
    int nm1 = grid.model.dim - 1;
    KahanComplex acc;
    for (size_t i = 0; i < rn.size(); ++i) {
        double fv = f.radial(rn[i]);
        if (fv == 0.0) continue;
        double sh = std::sinh(rn[i]);
        double w = rw[i] * (nm1 == 1 ? sh : sh * sh) * area;
        acc.add(w * fv * phi(lambda.value, rn[i]));
    }
    return acc.value();
}

complex_t helgason_transform(const InteriorFunction& f, SpectralParam lambda,
                             const BoundaryPoint& b, const QuadratureGrid& grid) {
    // exponent (-i lambda + rho) A
    complex_t s(lambda.value.imag() + grid.model.rho, -lambda.value.real());
    KahanComplex acc;
    for_each_interior_node(grid, f.support_radius,
                           [&](const Point& y, double w, double, size_t) {
                               double fv = f.eval(y);
                               if (fv == 0.0) return;
                               double a = horocycle_bracket(y, b);
                               acc.add(w * fv * std::exp(s * a));
                           });
    return acc.value();
}

bool support_near_edge(const InteriorFunction& f, const QuadratureGrid& grid) {
    double R = grid.model.support_radius;
    return f.support_radius > R - 2.0 * R / grid.sizes.radial;
}

namespace detail {

std::optional<HelgasonGrid> helgason_grid_h3_product(
    const InteriorFunction& f, std::span<const complex_t> lambdas,
    std::span<const double> lambda_weights, const QuadratureGrid& grid,
    bool parallel) {
    if (grid.model.dim != 3 || lambdas.empty()) return std::nullopt;
    size_t np = static_cast<size_t>(grid.sizes.boundary);
    size_t na = 2 * np;
    size_t nb = np * na;
    if (grid.boundary_nodes.size() != nb) return std::nullopt;
    for (const complex_t& lam : lambdas)
        if (lam.imag() != lambdas[0].imag()) return std::nullopt;
    // confirm the polar x azimuth layout build_grids produces
    for (size_t p = 0; p < np; ++p)
        for (size_t q = 0; q < na; ++q)
            if (grid.boundary_nodes[p * na + q].v[2] !=
                grid.boundary_nodes[p * na].v[2])
                return std::nullopt;

    HelgasonGrid out;
    out.model = grid.model;
    out.lambdas.assign(lambdas.begin(), lambdas.end());
    out.lambda_weights.assign(lambda_weights.begin(), lambda_weights.end());
    out.boundary_nodes = grid.boundary_nodes;
    out.boundary_weights = grid.boundary_weights;
    size_t nl = lambdas.size();
    out.values.assign(nl * nb, complex_t{});

    double g = lambdas[0].imag() + grid.model.rho;
    std::vector<double> s_im(nl);
    for (size_t l = 0; l < nl; ++l) s_im[l] = -lambdas[l].real();

    // dense (radius, direction) lattice of quadrature weight * f
    std::vector<double> rn, wfd;
    for_each_interior_node(grid, f.support_radius,
                           [&](const Point& y, double w, double r, size_t j) {
                               if (j == 0) rn.push_back(r);
                               wfd.push_back(w * f.eval(y));
                           });
    size_t nr = rn.size();
    std::vector<unsigned char> rownz(nr * np, 0);
    for (size_t i = 0; i < nr; ++i)
        for (size_t pp = 0; pp < np; ++pp)
            for (size_t q = 0; q < na; ++q)
                if (wfd[i * nb + pp * na + q] != 0.0) {
                    rownz[i * np + pp] = 1;
                    break;
                }

    std::vector<double> u(np), su(np);
    for (size_t p = 0; p < np; ++p) {
        u[p] = grid.boundary_nodes[p * na].v[2];
        su[p] = std::sqrt(std::max(0.0, 1.0 - u[p] * u[p]));
    }
    std::vector<double> cd(na);
    for (size_t q = 0; q < na; ++q) cd[q] = std::cos(2.0 * kPi * q / na);
    std::vector<double> t(nr), l1(nr);
    for (size_t i = 0; i < nr; ++i) {
        t[i] = euclidean_radius(rn[i]);
        l1[i] = std::log1p(-t[i] * t[i]);
    }

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long p = 0; p < static_cast<long long>(np); ++p) {
        std::vector<double> acc_re(nl * na, 0.0), acc_im(nl * na, 0.0);
        std::vector<double> d2(na);
        for (size_t i = 0; i < nr; ++i) {
            double c0 = 1.0 + t[i] * t[i];
            for (size_t pp = 0; pp < np; ++pp) {
                if (!rownz[i * np + pp]) continue;
                double A = 2.0 * t[i] * u[pp] * u[p];
                double B = 2.0 * t[i] * su[pp] * su[p];
                for (size_t q = 0; q < na; ++q) d2[q] = c0 - A - B * cd[q];
                kernels::azim_corr(na, d2.data(), l1[i], g, nl, s_im.data(),
                                   wfd.data() + i * nb + pp * na,
                                   acc_re.data(), acc_im.data());
            }
        }
        for (size_t l = 0; l < nl; ++l)
            for (size_t q = 0; q < na; ++q)
                out.values[l * nb + p * na + q] = {acc_re[l * na + q],
                                                  acc_im[l * na + q]};
    }
    return out;
}

}  // namespace detail

HelgasonGrid helgason_grid(const InteriorFunction& f,
                           std::span<const complex_t> lambdas,
                           std::span<const double> lambda_weights,
                           const QuadratureGrid& grid) {
    if (auto fast = detail::helgason_grid_h3_product(f, lambdas, lambda_weights,
                                                     grid, /*parallel=*/true))
        return std::move(*fast);
    HelgasonGrid out;
    out.model = grid.model;
    out.lambdas.assign(lambdas.begin(), lambdas.end());
    out.lambda_weights.assign(lambda_weights.begin(), lambda_weights.end());
    out.boundary_nodes = grid.boundary_nodes;
    out.boundary_weights = grid.boundary_weights;
    size_t nl = lambdas.size(), nb = grid.boundary_nodes.size();
    out.values.assign(nl * nb, complex_t{});

    NodeCache nodes;
    nodes.build(f, grid);
    size_t nn = nodes.size();

    // Real spectral grids share the growth factor exp(rho * a); the blocked
    // multi-frequency kernel then reads the bracket array once per column.
    bool shared_growth = true;
    for (const complex_t& lam : lambdas)
        shared_growth = shared_growth && lam.imag() == lambdas[0].imag();
    std::vector<double> s_im(nl);
    for (size_t l = 0; l < nl; ++l) s_im[l] = -lambdas[l].real();

#pragma omp parallel for schedule(dynamic, 4)
    for (long long j = 0; j < static_cast<long long>(nb); ++j) {
        std::vector<double> d2(nn), a(nn);
        std::vector<complex_t> col(nl);
        nodes.dist2_to_boundary(grid.boundary_nodes[j], d2.data());
        kernels::bracket_from_logs(nn, nodes.la.data(), d2.data(), a.data());
        if (shared_growth) {
            kernels::exp_sum_multi(nn, a.data(), nodes.wf.data(),
                                   lambdas[0].imag() + grid.model.rho, nl,
                                   s_im.data(), col.data());
        } else {
            for (size_t l = 0; l < nl; ++l)
                col[l] = kernels::exp_sum(nn, a.data(), nodes.wf.data(),
                                          lambdas[l].imag() + grid.model.rho,
                                          s_im[l]);
        }
        for (size_t l = 0; l < nl; ++l) out.values[l * nb + j] = col[l];
    }
    return out;
}

complex_t poisson_transform(const BoundaryFunction& F, SpectralParam lambda,
                            const Point& x, const QuadratureGrid& grid) {
    complex_t s(-lambda.value.imag() + grid.model.rho, lambda.value.real());
    KahanComplex acc;
    for (size_t j = 0; j < grid.boundary_nodes.size(); ++j) {
        double a = horocycle_bracket(x, grid.boundary_nodes[j]);
        acc.add(grid.boundary_weights[j] * F.eval(grid.boundary_nodes[j]) *
                std::exp(s * a));
    }
    return acc.value();
}

complex_t jeft_direct(const InteriorFunction& f, SpectralParam lambda,
                      const Point& x, const QuadratureGrid& grid,
                      const SphericalEvaluator& phi) {
    KahanComplex acc;
    for_each_interior_node(grid, f.support_radius,
                           [&](const Point& y, double w, double, size_t) {
                               double fv = f.eval(y);
                               if (fv == 0.0) return;
                               acc.add(w * fv *
                                       phi(lambda.value, geodesic_distance(x, y)));
                           });
    return acc.value();
}

complex_t jeft_direct(const InteriorFunction& f, const SphericalProfile& phi,
                      const Point& x, const QuadratureGrid& grid) {
    KahanComplex acc;
    for_each_interior_node(grid, f.support_radius,
                           [&](const Point& y, double w, double, size_t) {
                               double fv = f.eval(y);
                               if (fv == 0.0) return;
                               acc.add(w * fv * phi(geodesic_distance(x, y)));
                           });
    return acc.value();
}

complex_t poisson_of_row(const HelgasonGrid& F, size_t l, const Point& x) {
    complex_t s(-F.lambdas[l].imag() + F.model.rho, F.lambdas[l].real());
    KahanComplex acc;
    for (size_t j = 0; j < F.nb(); ++j) {
        double a = horocycle_bracket(x, F.boundary_nodes[j]);
        acc.add(F.boundary_weights[j] * F.at(l, j) * std::exp(s * a));
    }
    return acc.value();
}

complex_t jeft_composed(const InteriorFunction& f, SpectralParam lambda,
                        const Point& x, const QuadratureGrid& grid) {
    complex_t lam = lambda.value;
    HelgasonGrid F = helgason_grid(f, std::span(&lam, 1), {}, grid);
    return poisson_of_row(F, 0, x);
}

JeftGrid jeft_direct_grid(const InteriorFunction& f,
                          std::span<const complex_t> lambdas,
                          std::span<const Point> points,
                          const QuadratureGrid& grid,
                          const SphericalEvaluator& phi) {
    JeftGrid out;
    out.model = grid.model;
    out.lambdas.assign(lambdas.begin(), lambdas.end());
    out.points.assign(points.begin(), points.end());
    size_t nl = lambdas.size(), np = points.size();
    out.values.assign(nl * np, complex_t{});

    Point o = Point::origin(grid.model.dim);
    double r_far = 0.0;
    for (const Point& p : points)
        r_far = std::max(r_far, geodesic_distance(o, p));
    double r_max = r_far + std::min(f.support_radius, grid.model.support_radius) +
                   0.5;

    // Geodesic distances to every interior node are lambda-independent;
    // compute them once per point.
    NodeCache nodes;
    nodes.build(f, grid);
    size_t nn = nodes.size();
    std::vector<std::vector<double>> dist(np, std::vector<double>(nn));
#pragma omp parallel for schedule(dynamic)
    for (long long j = 0; j < static_cast<long long>(np); ++j)
        nodes.dist_to_point(points[j], dist[j].data());

    for (size_t l = 0; l < nl; ++l) {
        SphericalProfile prof(phi, lambdas[l], r_max);
#pragma omp parallel for schedule(dynamic)
        for (long long j = 0; j < static_cast<long long>(np); ++j)
            out.values[l * np + j] =
                prof.weighted_sum(nn, dist[j].data(), nodes.wf.data());
    }
    return out;
}

JeftGrid jeft_composed_grid(const InteriorFunction& f,
                            std::span<const complex_t> lambdas,
                            std::span<const Point> points,
                            const QuadratureGrid& grid) {
    HelgasonGrid F = helgason_grid(f, lambdas, {}, grid);
    JeftGrid out;
    out.model = grid.model;
    out.lambdas.assign(lambdas.begin(), lambdas.end());
    out.points.assign(points.begin(), points.end());
    size_t nl = lambdas.size(), np = points.size();
    out.values.assign(nl * np, complex_t{});
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long long l = 0; l < static_cast<long long>(nl); ++l)
        for (long long j = 0; j < static_cast<long long>(np); ++j)
            out.values[l * np + j] = poisson_of_row(F, l, points[j]);
    return out;
}

namespace {

// Density-weighted row table for Plancherel inversion; built once per grid
// and shared by every evaluation point.
struct InversionTable {
    size_t nl = 0, nb = 0;
    std::vector<double> s_im;    // +lambda_l
    std::vector<double> wr, wi;  // [l*nb + j] = w_l dens_l w_j F(l,j)

    explicit InversionTable(const HelgasonGrid& F) : nl(F.lambdas.size()), nb(F.nb()) {
        if (F.lambda_weights.size() != F.lambdas.size())
            throw std::invalid_argument(
                "inverse_helgason: grid has no spectral weights");
        s_im.resize(nl);
        wr.resize(nl * nb);
        wi.resize(nl * nb);
        for (size_t l = 0; l < nl; ++l) {
            if (F.lambdas[l].imag() != 0.0)
                throw std::domain_error(
                    "inverse_helgason: spectral nodes must be real");
            s_im[l] = F.lambdas[l].real();
            double c = F.lambda_weights[l] *
                       plancherel_density(F.lambdas[l].real(), F.model);
            for (size_t j = 0; j < nb; ++j) {
                complex_t v = F.at(l, j);
                wr[l * nb + j] = c * F.boundary_weights[j] * v.real();
                wi[l * nb + j] = c * F.boundary_weights[j] * v.imag();
            }
        }
    }

    complex_t eval(const HelgasonGrid& F, const Point& x) const {
        std::vector<double> d2(nb), a(nb);
        std::vector<complex_t> rows(nl);
        for (size_t j = 0; j < nb; ++j) {
            const BoundaryPoint& b = F.boundary_nodes[j];
            double dx = x.v[0] - b.v[0], dy = x.v[1] - b.v[1],
                   dz = x.v[2] - b.v[2];
            d2[j] = dx * dx + dy * dy + dz * dz;
        }
        kernels::bracket_from_logs_const(nb, std::log1p(-x.norm2()), d2.data(),
                                         a.data());
        kernels::exp_sum_c_multi(nb, a.data(), F.model.rho, nl, s_im.data(),
                                 wr.data(), wi.data(), rows.data());
        KahanComplex acc;  // spectral sum in fixed node order
        for (size_t l = 0; l < nl; ++l) acc.add(rows[l]);
        return acc.value();
    }
};

}  // namespace

complex_t inverse_helgason(const HelgasonGrid& F, const Point& x) {
    return InversionTable(F).eval(F, x);
}

std::vector<complex_t> inverse_helgason_field(const HelgasonGrid& F,
                                              std::span<const Point> points) {
    InversionTable table(F);
    std::vector<complex_t> out(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long long j = 0; j < static_cast<long long>(points.size()); ++j)
        out[j] = table.eval(F, points[j]);
    return out;
}

double spectral_tail_ratio(const HelgasonGrid& F) {
    size_t nl = F.lambdas.size(), nb = F.nb();
    if (nl == 0 || nb == 0) return 0.0;
    double peak = 0.0, tail = 0.0;
    for (size_t l = 0; l < nl; ++l)
        for (size_t j = 0; j < nb; ++j)
            peak = std::max(peak, std::abs(F.at(l, j)));
    for (size_t j = 0; j < nb; ++j)
        tail = std::max(tail, std::abs(F.at(nl - 1, j)));
    return peak > 0.0 ? tail / peak : 0.0;
}

complex_t convolve_radial(const InteriorFunction& f, const InteriorFunction& g,
                          const Point& x, const QuadratureGrid& grid) {
    if (!g.is_radial || !g.radial)
        throw std::invalid_argument("convolve_radial: g must be radial");
    KahanComplex acc;
    for_each_interior_node(grid, f.support_radius,
                           [&](const Point& y, double w, double, size_t) {
                               double fv = f.eval(y);
                               if (fv == 0.0) return;
                               double d = geodesic_distance(x, y);
                               if (d >= g.support_radius) return;
                               acc.add(w * fv * g.radial(d));
                           });
    return acc.value();
}

}  // namespace jeft
