#pragma once

#include <cstddef>
#include <vector>

namespace slg {

/// Gauss-Legendre rule on a finite interval [a, b].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = -1.0;
  double b = 1.0;

  std::size_t size() const { return nodes.size(); }
};

/// m equal panels on [0,1], each carrying an r-point Gauss-Legendre rule.
/// Weights already include the 1/m panel-length factor.
struct CompositeRule {
  int m = 0;
  int r = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// r-point Gauss-Legendre rule on [-1,1]; 1 <= r <= 64.
/// Nodes are the Legendre roots found by Newton iteration on the three-term
/// recurrence.
QuadRule gauss_legendre(int r);

/// Affine image of `rule` on [a,b].
QuadRule map_rule(const QuadRule& rule, double a, double b);

CompositeRule composite_rule(int m, int r);

template <class Rule, class F>
auto integrate(const Rule& rule, F&& f) -> decltype(f(0.0) * 1.0) {
  using R = decltype(f(0.0) * 1.0);
  R sum{};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(rule.nodes[k]);
  return sum;
}

}  // namespace slg
