#pragma once

#include <vector>

namespace polygossip {

struct QuadratureRule {
  std::vector<double> nodes;  // ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [lo, hi]; nodes by Newton iteration
/// on the Legendre recurrence.
QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

}  // namespace polygossip
