#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jeft/testfns.hpp"

using namespace jeft;

TEST_CASE("bump profile values") {
    CHECK(bump_profile(0.0, 1.0, 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(bump_profile(0.5, 1.0, 2.0) ==
          doctest::Approx(2.0 * std::exp(-1.0 / 0.75)).epsilon(1e-14));
    CHECK(bump_profile(1.0, 1.0, 1.0) == 0.0);  // exact vanish at the edge
    CHECK(bump_profile(7.3, 1.0, 1.0) == 0.0);
}

TEST_CASE("centered bump") {
    ModelParams m = ModelParams::h2();
    InteriorFunction f = bump({1.5, Point::origin(2), 2.0}, m);
    CHECK(f.is_radial);
    CHECK(f.support_radius == 1.5);
    CHECK(f.eval(Point::origin(2)) ==
          doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
    Point outside = point_at(1.5 + 1e-9, BoundaryPoint{{0.0, 1.0, 0.0}, 2});
    CHECK(f.eval(outside) == 0.0);
    CHECK(f.radial(0.7) == f.eval(point_at(0.7, BoundaryPoint{{1, 0, 0}, 2})));
}

TEST_CASE("off-center bump is flagged non-radial and must fit inside B_R") {
    ModelParams m = ModelParams::h3();
    Point c = point_at(0.8, BoundaryPoint{{1, 0, 0}, 3});
    InteriorFunction f = bump({1.0, c, 1.0}, m);
    CHECK(!f.is_radial);
    CHECK(f.support_radius == doctest::Approx(1.8).epsilon(1e-12));
    CHECK(f.eval(c) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    CHECK_THROWS_AS(bump({4.0, c, 1.0}, m), std::invalid_argument);
    CHECK_THROWS_AS(bump({-1.0, c, 1.0}, m), std::invalid_argument);
    CHECK_THROWS_AS(bump({1.0, Point::origin(2), 1.0}, m),
                    std::invalid_argument);  // dimension mismatch
}

TEST_CASE("suite shape and determinism") {
    for (int dim : {2, 3}) {
        ModelParams m = dim == 2 ? ModelParams::h2() : ModelParams::h3();
        auto fns = suite(m);
        REQUIRE(fns.size() == 5);
        CHECK(fns[0].is_radial);
        CHECK(fns[1].is_radial);
        CHECK(!fns[2].is_radial);
        CHECK(!fns[3].is_radial);
        CHECK(fns[4].is_radial);
        for (const auto& f : fns) {
            CHECK(f.support_radius <= m.support_radius);
            if (f.is_radial) CHECK(static_cast<bool>(f.radial));
        }
        // two calls produce bitwise-identical samples
        auto fns2 = suite(m);
        for (double r : {0.1, 0.9, 1.7}) {
            Point x = point_at(r, BoundaryPoint{{0.6, 0.8, 0.0},
                                                dim});
            for (size_t i = 0; i < fns.size(); ++i)
                CHECK(fns[i].eval(x) == fns2[i].eval(x));
        }
    }
}

TEST_CASE("non-radial members actually vary over directions") {
    ModelParams m = ModelParams::h2();
    auto fns = suite(m);
    double r = 0.8;
    auto spread = [&](const InteriorFunction& f) {
        double lo = 1e300, hi = -1e300;
        for (int k = 0; k < 16; ++k) {
            double th = 2.0 * kPi * k / 16.0;
            Point x = point_at(
                r, BoundaryPoint{{std::cos(th), std::sin(th), 0.0}, 2});
            double v = f.eval(x);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return hi - lo;
    };
    CHECK(spread(fns[0]) <= 1e-13);
    CHECK(spread(fns[2]) >= 1e-2);
    CHECK(spread(fns[3]) >= 1e-2);
}

TEST_CASE("sign-changing member") {
    ModelParams m = ModelParams::h2();
    auto fns = suite(m);
    // fns[4] = fns[0] - 1.5 fns[1]: negative at the origin, positive past
    // the narrow bump's support
    CHECK(fns[4].radial(0.0) < 0.0);
    CHECK(fns[4].radial(1.2) > 0.0);
    CHECK(fns[4].radial(0.0) ==
          doctest::Approx(fns[0].radial(0.0) - 1.5 * fns[1].radial(0.0))
              .epsilon(1e-15));
}
