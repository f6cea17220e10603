#include "slg/slop.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slg {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

cplx diagonal_L(const ContourPoint& t) {
  return 2.0 * I * std::imag(t.d2 / (2.0 * t.d1));
}

double periodic_distance(double a, double b) {
  double d = std::abs(wrap01(a) - wrap01(b));
  return std::min(d, 1.0 - d);
}

}  // namespace

cplx kernel_L(const ContourPoint& zeta, const ContourPoint& t, bool near_diag) {
  if (near_diag) return diagonal_L(t);
  return 2.0 * I * std::imag(zeta.d1 / (zeta.z - t.z));
}

cplx kernel_K(const ContourPoint& zeta, const ContourPoint& t, bool near_diag,
              KernelOrientation orientation) {
  if (near_diag) {
    const cplx ratio = t.d1 / std::conj(t.d1);
    return orientation == KernelOrientation::printed ? ratio * diagonal_L(t)
                                                     : -diagonal_L(t) / ratio;
  }
  const cplx delta = zeta.z - t.z;
  const cplx num = 2.0 * I * std::imag(zeta.d1 * std::conj(delta));
  if (orientation == KernelOrientation::printed) {
    const cplx cd = std::conj(delta);
    return num / (cd * cd);
  }
  return -num / (delta * delta);
}

bool near_diagonal(const Contour& contour, double s_zeta, double s_t) {
  if (periodic_distance(s_zeta, s_t) >= kDiagonalBand) return false;
  double a = s_zeta, b = s_t;
  if (a > b) std::swap(a, b);
  if (b - a > 0.5) {
    std::swap(a, b);
    b += 1.0;
  }
  return !contour.corner_between(a, b);
}

cplx kernel_L(const Contour& contour, double s_zeta, double s_t) {
  const bool diag = near_diagonal(contour, s_zeta, s_t);
  const ContourPoint t = contour.eval(s_t, diag ? Side::two_sided : Side::right);
  const ContourPoint zeta = contour.eval(s_zeta, Side::right);
  return kernel_L(zeta, t, diag);
}

cplx kernel_K(const Contour& contour, double s_zeta, double s_t, KernelOrientation orientation) {
  const bool diag = near_diagonal(contour, s_zeta, s_t);
  const ContourPoint t = contour.eval(s_t, diag ? Side::two_sided : Side::right);
  const ContourPoint zeta = contour.eval(s_zeta, Side::right);
  return kernel_K(zeta, t, diag, orientation);
}

int winding_number(const Contour& contour, cplx z, const CompositeRule& rule) {
  cplx sum{};
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const ContourPoint g = contour.eval(rule.nodes[p], Side::right);
    sum += rule.weights[p] * g.d1 / (g.z - z);
  }
  return static_cast<int>(std::lround(std::real(sum / (2.0 * pi * I))));
}

Correction default_correction(const Contour& contour) {
  const CompositeRule rule = composite_rule(40, 24);
  cplx mean{};
  for (std::size_t p = 0; p < rule.size(); ++p) mean += rule.weights[p] * contour.point(rule.nodes[p]);
  if (winding_number(contour, mean, rule) != 1) {
    throw std::domain_error("default_correction: parameter mean is not inside the contour");
  }
  return {mean};
}

ShermanLauricella::ShermanLauricella(const Contour& contour, std::optional<Correction> correction,
                                     Options options)
    : contour_(contour),
      options_(std::move(options)),
      correction_(correction ? *correction : default_correction(contour)) {
  if (correction && winding_number(contour_, correction->a, options_.inner) != 1) {
    throw std::domain_error("ShermanLauricella: correction point is not inside the contour");
  }
  const auto& rule = options_.inner;
  inner_s_ = rule.nodes;
  inner_w_ = rule.weights;
  inner_pts_.reserve(rule.size());
  for (double s : rule.nodes) inner_pts_.push_back(contour_.eval(s, Side::right));
}

cplx ShermanLauricella::correction_factor(cplx t) const {
  return 1.0 / (2.0 * pi * I * std::conj(t - correction_.a));
}

cplx ShermanLauricella::correction_moment(std::span<const cplx> omega_inner) const {
  cplx sum{};
  for (std::size_t p = 0; p < inner_pts_.size(); ++p) {
    const cplx d = inner_pts_[p].z - correction_.a;
    sum += inner_w_[p] * omega_inner[p] * inner_pts_[p].d1 / (d * d);
  }
  return sum;
}

cplx ShermanLauricella::correction_term(std::span<const cplx> omega_inner, cplx t) const {
  const cplx moment = correction_moment(omega_inner);
  return correction_factor(t) * (moment + std::conj(moment));
}

cplx ShermanLauricella::apply(std::span<const cplx> omega_inner, cplx omega_t, double s_t) const {
  if (omega_inner.size() != inner_pts_.size()) {
    throw std::invalid_argument("ShermanLauricella::apply: density sample count mismatch");
  }
  bool any_diag = false;
  for (double s : inner_s_) any_diag = any_diag || near_diagonal(contour_, s, s_t);
  const ContourPoint t = contour_.eval(s_t, any_diag ? Side::two_sided : Side::right);

  cplx lin{}, conj_part{};
  for (std::size_t p = 0; p < inner_pts_.size(); ++p) {
    const bool diag = any_diag && near_diagonal(contour_, inner_s_[p], s_t);
    lin += inner_w_[p] * kernel_L(inner_pts_[p], t, diag) * omega_inner[p];
    conj_part += inner_w_[p] * kernel_K(inner_pts_[p], t, diag, options_.orientation) *
                 std::conj(omega_inner[p]);
  }
  cplx value = omega_t + (lin - conj_part) / (2.0 * pi * I);
  if (options_.with_correction) value += correction_term(omega_inner, t.z);
  return value;
}

cplx apply_B(const SplineSpace& space, std::span<const cplx> coeffs, double sigma,
             const ShermanLauricella& op) {
  if (space.contour().is_corner(sigma)) {
    throw AmbiguousDerivative("apply_B: evaluation at a corner parameter");
  }
  std::vector<cplx> samples(op.inner_size());
  for (std::size_t p = 0; p < samples.size(); ++p) samples[p] = synth(space, coeffs, op.inner_node(p));
  return op.apply(samples, synth(space, coeffs, sigma), sigma);
}

cplx rhs_f1(cplx z) {
  const double x = z.real(), y = z.imag();
  return {4 * x * x * x - 12 * x * y * y, 4 * y * y * y - 12 * x * x * y};
}

cplx rhs_f2(cplx z) { return std::abs(z); }

cplx rhs_from_boundary_data(const std::function<double(cplx)>& f1,
                            const std::function<double(cplx)>& f2, const Contour& contour, double s,
                            const std::function<cplx(cplx)>& grad_f1) {
  if (contour.is_corner(s, 1e-9)) {
    throw AmbiguousDerivative("rhs_from_boundary_data: normal undefined at a corner");
  }
  const ContourPoint g = contour.eval(s, Side::two_sided);
  const double speed = std::abs(g.d1);
  const cplx tangent = g.d1 / speed;
  const double alpha = std::arg(-I * tangent);  // outward normal, counterclockwise orientation
  const cplx l = std::exp(I * (alpha - pi / 2));
  double dl = 0.0;
  if (grad_f1) {
    const cplx grad = grad_f1(g.z);
    dl = grad.real() * l.real() + grad.imag() * l.imag();
  } else {
    const double h = 1e-5;
    const double ds = (f1(contour.point(s + h)) - f1(contour.point(s - h))) / (2 * h);
    // l = -tangent, so the derivative along l is minus the arclength derivative
    dl = -ds / speed;
  }
  return std::exp(-I * alpha) * (f2(g.z) + I * dl);
}

double solvability_defect(const BoundaryFunction& f, const Contour& contour,
                          const CompositeRule& rule) {
  cplx sum{};
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const ContourPoint g = contour.eval(rule.nodes[p], Side::right);
    sum += rule.weights[p] * std::conj(f(rule.nodes[p], g.z)) * g.d1;
  }
  return std::real(sum);
}

}  // namespace slg
