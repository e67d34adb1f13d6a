#include "jeft/testfns.hpp"

namespace jeft {

double bump_profile(double d, double support, double amplitude) {
    double u = d / support;
    if (u >= 1.0) return 0.0;
    return amplitude * std::exp(-1.0 / (1.0 - u * u));
}

InteriorFunction bump(const BumpSpec& spec, const ModelParams& model) {
    if (!(spec.support > 0.0))
        throw std::invalid_argument("bump: support must be positive");
    if (spec.center.dim != model.dim)
        throw std::invalid_argument("bump: center dimension mismatch");
    Point o = Point::origin(model.dim);
    double dc = geodesic_distance(o, spec.center);
    if (dc + spec.support > model.support_radius + 1e-12)
        throw std::invalid_argument(
            "bump: support ball must stay inside B_R(o)");

    InteriorFunction f;
    f.support_radius = dc + spec.support;
    f.is_radial = (dc == 0.0);
    Point center = spec.center;
    double supp = spec.support, amp = spec.amplitude;
    f.eval = [center, supp, amp](const Point& x) {
        return bump_profile(geodesic_distance(center, x), supp, amp);
    };
    if (f.is_radial)
        f.radial = [supp, amp](double r) { return bump_profile(r, supp, amp); };
    f.atoms.push_back(RadialAtom{
        1.0, center,
        [supp, amp](double r) { return bump_profile(r, supp, amp); }, supp});
    return f;
}

static InteriorFunction combine(const InteriorFunction& a, double ca,
                                const InteriorFunction& b, double cb) {
    InteriorFunction f;
    f.support_radius = std::max(a.support_radius, b.support_radius);
    f.is_radial = a.is_radial && b.is_radial;
    f.eval = [a, b, ca, cb](const Point& x) {
        return ca * a.eval(x) + cb * b.eval(x);
    };
    if (f.is_radial) {
        auto ra = a.radial, rb = b.radial;
        f.radial = [ra, rb, ca, cb](double r) { return ca * ra(r) + cb * rb(r); };
    }
    for (RadialAtom atom : a.atoms) {
        atom.coeff *= ca;
        f.atoms.push_back(std::move(atom));
    }
    for (RadialAtom atom : b.atoms) {
        atom.coeff *= cb;
        f.atoms.push_back(std::move(atom));
    }
    return f;
}

std::vector<InteriorFunction> suite(const ModelParams& model) {
    double R = model.support_radius;
    Point o = Point::origin(model.dim);

    Point c1 = o, c2 = o;
    c1.v[0] = euclidean_radius(0.8);   // geodesic distance 0.8 from o
    c2.v[0] = -euclidean_radius(0.7);

    std::vector<InteriorFunction> fns;
    fns.push_back(bump({R / 2.0, o, 1.0}, model));
    fns.push_back(bump({R / 4.0, o, 1.0}, model));
    fns.push_back(bump({R / 4.0, c1, 1.0}, model));
    fns.push_back(combine(fns[0], 0.6, bump({0.8, c2, 1.0}, model), 0.8));
    fns.push_back(combine(fns[0], 1.0, fns[1], -1.5));
    return fns;
}

}  // namespace jeft
