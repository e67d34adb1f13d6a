#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jeft/reference.hpp"

using namespace jeft;

namespace {

QuadratureGrid h2_grid(double Lambda = 12.0, int nl = 16) {
    return build_grids(ModelParams::h2(4.0, Lambda), GridSizes{64, 128, nl});
}

QuadratureGrid h3_grid() {
    // 24 polar x 48 azimuth resolves boundary harmonics through degree 47:
    // enough for test integrands reaching Euclidean radius ~0.64 at the
    // 1e-6..1e-8 tolerances used here.
    return build_grids(ModelParams::h3(), GridSizes{48, 24, 8});
}

InteriorFunction zero_fn(int dim) {
    InteriorFunction f;
    f.support_radius = 1.0;
    f.is_radial = true;
    f.eval = [](const Point&) { return 0.0; };
    f.radial = [](double) { return 0.0; };
    (void)dim;
    return f;
}

BoundaryPoint dir2(double th) {
    return BoundaryPoint{{std::cos(th), std::sin(th), 0.0}, 2};
}

}  // namespace

TEST_CASE("interior quadrature recovers hyperbolic volume") {
    QuadratureGrid g = h2_grid();
    double vol = 0.0;
    for_each_interior_node(g, 3.0, [&](const Point&, double w, double, size_t) {
        vol += w;
    });
    CHECK(vol == doctest::Approx(2.0 * kPi * (std::cosh(3.0) - 1.0))
                     .epsilon(1e-10));

    QuadratureGrid g3 = h3_grid();
    double vol3 = 0.0;
    for_each_interior_node(g3, 2.0, [&](const Point&, double w, double, size_t) {
        vol3 += w;
    });
    // vol(B_r) in H^3 = pi (sinh 2r - 2r)
    CHECK(vol3 == doctest::Approx(kPi * (std::sinh(4.0) - 4.0)).epsilon(1e-10));
}

TEST_CASE("all transforms vanish on the zero function") {
    QuadratureGrid g = h2_grid();
    SphericalEvaluator phi(g.model);
    InteriorFunction f = zero_fn(2);
    CHECK(spherical_transform(f, 1.0, g, phi) == complex_t{});
    CHECK(helgason_transform(f, 1.0, dir2(0.4), g) == complex_t{});
    CHECK(jeft_direct(f, 1.0, point_at(0.5, dir2(1.0)), g, phi) == complex_t{});
}

TEST_CASE("radial functions: b-independence and spherical equality") {
    for (int dim : {2, 3}) {
        QuadratureGrid g = dim == 2 ? h2_grid() : h3_grid();
        SphericalEvaluator phi(g.model);
        InteriorFunction f = suite(g.model)[1];
        for (double lam : {0.5, 2.0, 7.0}) {
            complex_t fhat = spherical_transform(f, lam, g, phi);
            for (size_t j = 0; j < g.boundary_nodes.size(); j += 17) {
                complex_t v = helgason_transform(f, lam, g.boundary_nodes[j], g);
                CHECK(std::abs(v - fhat) <= 1e-8 * (1.0 + std::abs(fhat)));
            }
            // closed-convolution form at the base point
            complex_t at_o =
                jeft_direct(f, lam, Point::origin(dim), g, phi);
            CHECK(std::abs(at_o - fhat) <= 1e-10 * (1.0 + std::abs(fhat)));
        }
    }
}

TEST_CASE("translated bump: transform picks up the plane-wave factor") {
    // For radial f0 and f = f0 translated to c:
    //   f~(lambda, b) = exp((-i lambda + rho) <c,b>) f0^(lambda)
    for (int dim : {2, 3}) {
        QuadratureGrid g = dim == 2 ? h2_grid() : h3_grid();
        SphericalEvaluator phi(g.model);
        Point c = point_at(0.6, BoundaryPoint{{1, 0, 0}, dim});
        InteriorFunction f0 = bump({0.9, Point::origin(dim), 1.0}, g.model);
        InteriorFunction f = bump({0.9, c, 1.0}, g.model);
        for (double lam : {0.8, 3.0}) {
            complex_t f0hat = spherical_transform(f0, lam, g, phi);
            for (double th : {0.3, 2.0, 4.4}) {
                BoundaryPoint b = dim == 2
                                      ? dir2(th)
                                      : BoundaryPoint{{std::cos(th), 0.0,
                                                       std::sin(th)},
                                                      3};
                complex_t lhs = helgason_transform(f, lam, b, g);
                complex_t rhs =
                    std::exp(complex_t(g.model.rho, -lam) *
                             horocycle_bracket(c, b)) *
                    f0hat;
                CHECK(std::abs(lhs - rhs) <= 1e-6 * (1.0 + std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("Poisson transform of the constant is the spherical function") {
    for (int dim : {2, 3}) {
        QuadratureGrid g = dim == 2 ? h2_grid() : h3_grid();
        SphericalEvaluator phi(g.model);
        BoundaryFunction ones{[](const BoundaryPoint&) { return complex_t(1.0); }};
        for (double lam : {0.5, 2.5})
            for (double r : {0.0, 0.4, 1.1}) {
                Point x = point_at(r, BoundaryPoint{{0.6, 0.8, 0.0}, dim});
                complex_t v = poisson_transform(ones, lam, x, g);
                CHECK(std::abs(v - phi(lam, r)) <= 1e-8);
            }
    }
}

TEST_CASE("helgason transform is linear") {
    // members with the same support radius so all three transforms run on
    // the same truncated radial rule
    QuadratureGrid g = h2_grid();
    auto fns = suite(g.model);
    REQUIRE(fns[0].support_radius == fns[4].support_radius);
    InteriorFunction combo;
    combo.support_radius = fns[0].support_radius;
    combo.eval = [&](const Point& x) {
        return 0.3 * fns[0].eval(x) - 1.7 * fns[4].eval(x);
    };
    BoundaryPoint b = dir2(1.1);
    for (double lam : {0.7, 4.0}) {
        complex_t lhs = helgason_transform(combo, lam, b, g);
        complex_t rhs = 0.3 * helgason_transform(fns[0], lam, b, g) -
                        1.7 * helgason_transform(fns[4], lam, b, g);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("Weyl symmetry of the spherical transform") {
    for (int dim : {2, 3}) {
        QuadratureGrid g = dim == 2 ? h2_grid() : h3_grid();
        SphericalEvaluator phi(g.model);
        InteriorFunction f = suite(g.model)[0];
        for (double lam : {0.3, 1.8, 6.0})
            CHECK(std::abs(spherical_transform(f, lam, g, phi) -
                           spherical_transform(f, -lam, g, phi)) <= 1e-12);
    }
}

TEST_CASE("helgason transform is entire in lambda (Cauchy-Riemann)") {
    QuadratureGrid g = h2_grid();
    InteriorFunction f = suite(g.model)[2];
    BoundaryPoint b = dir2(0.9);
    double h = 1e-4;
    for (complex_t lam : {complex_t(1.5, 0.3), complex_t(4.0, -1.0)}) {
        complex_t dre = (helgason_transform(f, lam + h, b, g) -
                         helgason_transform(f, lam - h, b, g)) /
                        (2.0 * h);
        complex_t dim_ = (helgason_transform(f, lam + complex_t(0, h), b, g) -
                          helgason_transform(f, lam - complex_t(0, h), b, g)) /
                         complex_t(0, 2.0 * h);
        CHECK(std::abs(dre - dim_) <= 1e-6 * (1.0 + std::abs(dre)));
    }
}

TEST_CASE("direct and composed JEFT agree") {
    QuadratureGrid g = build_grids(ModelParams::h2(), GridSizes{64, 192, 8});
    SphericalEvaluator phi(g.model);
    InteriorFunction f = suite(g.model)[3];
    for (double lam : {0.6, 2.2}) {
        for (double r : {0.3, 1.0}) {
            Point x = point_at(r, dir2(2.0));
            complex_t d = jeft_direct(f, lam, x, g, phi);
            complex_t c = jeft_composed(f, lam, x, g);
            CHECK(std::abs(d - c) <= 1e-6 * (1.0 + std::abs(d)));
        }
    }
}

TEST_CASE("profile-based JEFT matches the exact evaluator") {
    QuadratureGrid g = h2_grid();
    SphericalEvaluator phi(g.model);
    InteriorFunction f = suite(g.model)[0];
    SphericalProfile prof(phi, complex_t(1.3, 0.0), 4.0);
    Point x = point_at(0.8, dir2(0.5));
    CHECK(std::abs(jeft_direct(f, prof, x, g) -
                   jeft_direct(f, 1.3, x, g, phi)) <= 1e-10);
}

TEST_CASE("Plancherel inversion round trip (radial, H^2)") {
    QuadratureGrid g = h2_grid(48.0, 96);
    InteriorFunction f = suite(g.model)[1];
    std::vector<complex_t> lambdas(g.spectral_nodes.begin(),
                                   g.spectral_nodes.end());
    HelgasonGrid F = helgason_grid(f, lambdas, g.spectral_weights, g);
    std::vector<Point> pts;
    for (double r : {0.0, 0.2, 0.5, 0.8})
        pts.push_back(point_at(r, dir2(1.7)));
    auto vals = inverse_helgason_field(F, pts);
    for (size_t i = 0; i < pts.size(); ++i) {
        CHECK(std::abs(vals[i].imag()) <= 1e-10);
        CHECK(std::abs(vals[i].real() - f.eval(pts[i])) <= 1e-3);
    }
}

TEST_CASE("narrow mollifier convolution approximates the identity") {
    QuadratureGrid g = h2_grid();
    InteriorFunction f = suite(g.model)[0];
    InteriorFunction gm = bump({0.25, Point::origin(2), 1.0}, g.model);
    // normalize the mollifier to unit mass
    double mass = 0.0;
    for_each_interior_node(g, gm.support_radius,
                           [&](const Point& y, double w, double, size_t) {
                               mass += w * gm.eval(y);
                           });
    for (double r : {0.2, 0.9}) {
        Point x = point_at(r, dir2(0.3));
        complex_t conv = convolve_radial(f, gm, x, g) / mass;
        CHECK(std::abs(conv.imag()) <= 1e-14);
        CHECK(std::abs(conv.real() - f.eval(x)) <= 0.05);
    }
}

TEST_CASE("spectral tail shrinks as the cutoff grows") {
    InteriorFunction f = suite(ModelParams::h2())[0];
    auto tail_at = [&](double Lambda) {
        QuadratureGrid g = h2_grid(Lambda, 32);
        std::vector<complex_t> lambdas(g.spectral_nodes.begin(),
                                       g.spectral_nodes.end());
        return spectral_tail_ratio(
            helgason_grid(f, lambdas, g.spectral_weights, g));
    };
    double t12 = tail_at(12.0), t32 = tail_at(32.0);
    CHECK(t32 < t12);
    CHECK(t12 < 1e-2);
}

TEST_CASE("serial reference implementations agree bitwise") {
    for (int dim : {2, 3}) {
        QuadratureGrid g =
            dim == 2 ? build_grids(ModelParams::h2(), GridSizes{48, 64, 8})
                     : build_grids(ModelParams::h3(), GridSizes{32, 8, 8});
        SphericalEvaluator phi(g.model);
        InteriorFunction f = suite(g.model)[3];
        std::vector<complex_t> lambdas(g.spectral_nodes.begin(),
                                       g.spectral_nodes.end());
        std::vector<Point> pts;
        for (double r : {0.2, 0.7, 1.1})
            pts.push_back(point_at(r, BoundaryPoint{{0.8, 0.6, 0.0}, dim}));

        HelgasonGrid Fp = helgason_grid(f, lambdas, g.spectral_weights, g);
        HelgasonGrid Fs = reference::helgason_grid_serial(
            f, lambdas, g.spectral_weights, g);
        CHECK(Fp.values == Fs.values);

        JeftGrid Jp = jeft_direct_grid(f, lambdas, pts, g, phi);
        JeftGrid Js =
            reference::jeft_direct_grid_serial(f, lambdas, pts, g, phi);
        CHECK(Jp.values == Js.values);

        CHECK(inverse_helgason_field(Fp, pts) ==
              reference::inverse_helgason_field_serial(Fs, pts));
    }
}

TEST_CASE("argument validation") {
    QuadratureGrid g = h2_grid();
    SphericalEvaluator phi(g.model);
    InteriorFunction off = suite(g.model)[2];
    CHECK_THROWS_AS(spherical_transform(off, 1.0, g, phi),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolve_radial(suite(g.model)[0], off,
                                    Point::origin(2), g),
                    std::invalid_argument);

    std::vector<complex_t> lambdas{complex_t(1.0, 0.0)};
    HelgasonGrid F = helgason_grid(suite(g.model)[1], lambdas, {}, g);
    CHECK_THROWS_AS(inverse_helgason(F, Point::origin(2)),
                    std::invalid_argument);  // no spectral weights

    std::vector<complex_t> cplx{complex_t(1.0, 0.5)};
    std::vector<double> w{1.0};
    HelgasonGrid Fc = helgason_grid(suite(g.model)[1], cplx, w, g);
    CHECK_THROWS_AS(inverse_helgason(Fc, Point::origin(2)), std::domain_error);

    InteriorFunction wide = bump({3.99, Point::origin(2), 1.0}, g.model);
    CHECK(support_near_edge(wide, g));
    CHECK(!support_near_edge(suite(g.model)[0], g));
}
