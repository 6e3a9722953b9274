#pragma once

#include <vector>

#include "gcs/fock.hpp"
#include "gcs/qubit.hpp"

namespace gcs {

/// A weight function is just a Grassmann polynomial in the integration
/// variables.
using WeightFunction = GrassmannElement;

/// Per-ket Berezin integral of w * amplitude. The measure must exhaust
/// every generator of the product; leftover Grassmann content throws
/// std::invalid_argument.
QubitState integrate_with_weight(const WeightFunction& w, const GrassmannState& s,
                                 const MeasureList& m);

struct WeightSolution {
  WeightFunction particular;
  std::vector<WeightFunction> null_space;
  double residual = 0.0;
};

/// Inverts the integration map over the full monomial basis of the modes
/// appearing in the state and measure: least-squares minimum-norm
/// particular weight, an orthonormal null-space basis, and the residual
/// |A x - target|. Unreachable targets show up as residual > tolerance,
/// never as an error.
WeightSolution solve_weight(const GrassmannState& s, const QubitState& target,
                            const MeasureList& m);

}  // namespace gcs
