#pragma once

#include <functional>

#include "jeft/geometry.hpp"

namespace jeft {

// One translated radial component: coeff * profile(d(x, center)).
struct RadialAtom {
    double coeff = 1.0;
    Point center = Point::origin(2);
    std::function<double(double)> profile;
    double support = 0.0;  // profile vanishes at geodesic radius >= support
};

// Compactly supported functions on X that the transforms consume.  eval
// returns 0 outside the declared support radius; radial is set iff the
// function is K-invariant about o.  atoms, when non-empty, give an exact
// decomposition f = sum_i coeff_i * profile_i(d(x, center_i)); translation
// covariance of the Helgason transform then reduces boundary integrals of
// f-transforms to closed forms in the spherical transforms of the profiles.
struct InteriorFunction {
    std::function<double(const Point&)> eval;
    double support_radius = 0.0;
    bool is_radial = false;
    std::function<double(double)> radial;  // profile, set when is_radial
    std::vector<RadialAtom> atoms;
};

struct BoundaryFunction {
    std::function<complex_t(const BoundaryPoint&)> eval;
};

struct BumpSpec {
    double support = 1.0;  // rho_s
    Point center = Point::origin(2);
    double amplitude = 1.0;
};

// Flat bump amplitude * exp(-1/(1 - (d/rho_s)^2)) of geodesic radius rho_s
// about center; exactly zero outside, C-infinity across the edge.
InteriorFunction bump(const BumpSpec& spec, const ModelParams& model);

// Profile value at geodesic distance d from the center.
double bump_profile(double d, double support, double amplitude);

// Fixed deterministic five-member suite: radial bumps of support R/2 and
// R/4, an off-center bump, a two-bump superposition, and a sign-changing
// radial combination.
std::vector<InteriorFunction> suite(const ModelParams& model);

}  // namespace jeft
