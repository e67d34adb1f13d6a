#pragma once

#include "jeft/transforms.hpp"

// Serial reference implementations of the parallel bulk kernels.  Every
// per-entry sum runs in the same fixed node order as the OpenMP versions, so
// the two must agree bitwise; tests and the benchmark hold them side by side.

namespace jeft::reference {

HelgasonGrid helgason_grid_serial(const InteriorFunction& f,
                                  std::span<const complex_t> lambdas,
                                  std::span<const double> lambda_weights,
                                  const QuadratureGrid& grid);

JeftGrid jeft_direct_grid_serial(const InteriorFunction& f,
                                 std::span<const complex_t> lambdas,
                                 std::span<const Point> points,
                                 const QuadratureGrid& grid,
                                 const SphericalEvaluator& phi);

std::vector<complex_t> inverse_helgason_field_serial(
    const HelgasonGrid& F, std::span<const Point> points);

}  // namespace jeft::reference
