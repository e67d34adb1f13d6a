#include "jeft/reference.hpp"

#include "detail.hpp"
#include "jeft/kernels.hpp"

namespace jeft::reference {

HelgasonGrid helgason_grid_serial(const InteriorFunction& f,
                                  std::span<const complex_t> lambdas,
                                  std::span<const double> lambda_weights,
                                  const QuadratureGrid& grid) {
    if (auto fast = detail::helgason_grid_h3_product(f, lambdas, lambda_weights,
                                                     grid, /*parallel=*/false))
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

    bool shared_growth = true;
    for (const complex_t& lam : lambdas)
        shared_growth = shared_growth && lam.imag() == lambdas[0].imag();
    std::vector<double> s_im(nl);
    for (size_t l = 0; l < nl; ++l) s_im[l] = -lambdas[l].real();

    std::vector<double> d2(nn), a(nn);
    std::vector<complex_t> col(nl);
    for (size_t j = 0; j < nb; ++j) {
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

JeftGrid jeft_direct_grid_serial(const InteriorFunction& f,
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
    double r_max = r_far +
                   std::min(f.support_radius, grid.model.support_radius) + 0.5;

    NodeCache nodes;
    nodes.build(f, grid);
    size_t nn = nodes.size();
    std::vector<std::vector<double>> dist(np, std::vector<double>(nn));
    for (size_t j = 0; j < np; ++j)
        nodes.dist_to_point(points[j], dist[j].data());

    for (size_t l = 0; l < nl; ++l) {
        SphericalProfile prof(phi, lambdas[l], r_max);
        for (size_t j = 0; j < np; ++j)
            out.values[l * np + j] =
                prof.weighted_sum(nn, dist[j].data(), nodes.wf.data());
    }
    return out;
}

std::vector<complex_t> inverse_helgason_field_serial(
    const HelgasonGrid& F, std::span<const Point> points) {
    std::vector<complex_t> out(points.size());
    for (size_t j = 0; j < points.size(); ++j)
        out[j] = inverse_helgason(F, points[j]);
    return out;
}

}  // namespace jeft::reference
