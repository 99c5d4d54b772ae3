#pragma once

#include <cstddef>
#include <vector>

namespace phasefact {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule. Rules are computed once per n and cached.
const GaussLegendreRule& gauss_legendre(std::size_t n);

}  // namespace phasefact
