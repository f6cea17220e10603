#include "slg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slg {

namespace {

// P_r(x) and P_r'(x) by the three-term recurrence.
void legendre(int r, double x, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = x;
  if (r == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= r; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = r * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadRule gauss_legendre(int r) {
  if (r < 1 || r > 64) throw std::invalid_argument("gauss_legendre: order must lie in [1, 64]");

  QuadRule rule;
  rule.nodes.resize(r);
  rule.weights.resize(r);
  const int half = (r + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (r + 0.5));
    double p = 0.0, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre(r, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(r, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // ascending order: negative roots first
    rule.nodes[i] = -x;
    rule.nodes[r - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[r - 1 - i] = w;
  }
  if (r % 2 == 1) rule.nodes[r / 2] = 0.0;
  return rule;
}

QuadRule map_rule(const QuadRule& rule, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("map_rule: need a < b");
  QuadRule out;
  out.a = a;
  out.b = b;
  out.nodes.resize(rule.size());
  out.weights.resize(rule.size());
  const double scale = (b - a) / (rule.b - rule.a);
  for (std::size_t k = 0; k < rule.size(); ++k) {
    out.nodes[k] = a + (rule.nodes[k] - rule.a) * scale;
    out.weights[k] = rule.weights[k] * scale;
  }
  return out;
}

CompositeRule composite_rule(int m, int r) {
  if (m < 1) throw std::invalid_argument("composite_rule: need at least one panel");
  const QuadRule base = gauss_legendre(r);
  CompositeRule out;
  out.m = m;
  out.r = r;
  out.nodes.reserve(static_cast<std::size_t>(m) * r);
  out.weights.reserve(static_cast<std::size_t>(m) * r);
  for (int l = 0; l < m; ++l) {
    const double a = static_cast<double>(l) / m;
    const double b = static_cast<double>(l + 1) / m;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    for (int p = 0; p < r; ++p) {
      out.nodes.push_back(c + h * base.nodes[p]);
      out.weights.push_back(h * base.weights[p]);
    }
  }
  return out;
}

}  // namespace slg
