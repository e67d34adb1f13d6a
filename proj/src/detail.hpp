#pragma once

#include <optional>

#include "jeft/transforms.hpp"

// Internal fast path shared by the parallel transforms and the serial
// reference implementation; not part of the public API.

namespace jeft::detail {

// Helgason grid fill specialized to the H^3 product boundary rule
// (Gauss-Legendre polar x uniform azimuth).  The horocycle bracket between
// an interior node and a boundary node depends on azimuth only through the
// difference, so each boundary column is a cyclic azimuthal correlation and
// the kernel rows are shared across a whole ring of columns.  Returns
// nullopt when the grid is not the standard product rule or the spectral
// rows do not share a common growth exponent; callers then take the generic
// per-column path.
std::optional<HelgasonGrid> helgason_grid_h3_product(
    const InteriorFunction& f, std::span<const complex_t> lambdas,
    std::span<const double> lambda_weights, const QuadratureGrid& grid,
    bool parallel);

}  // namespace jeft::detail
