#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "slg/contour.hpp"
#include "slg/quadrature.hpp"
#include "slg/spline.hpp"

namespace slg {

/// Orientation of the ratio differentiated in the conjugating kernel.
enum class KernelOrientation {
  /// d((zeta - t) / conj(zeta - t)), the global equation as usually written
  printed,
  /// d(conj(zeta - t) / (zeta - t)), the orientation of the corner model operator
  local_model,
};

/// Interior point `a` of the compact correction T.
struct Correction {
  cplx a;
};

/// Data on the contour, given both parameter and point.
using BoundaryFunction = std::function<cplx(double s, cplx z)>;

/// Parameter distance below which kernels switch to their diagonal limit.
inline constexpr double kDiagonalBand = 1e-6;

/// d/ds ln((gamma(s) - t) / conj(gamma(s) - t)) where zeta = gamma(s) is the
/// integration point. Purely imaginary. `near_diagonal` selects the limit
/// 2i Im(gamma''/(2 gamma')) evaluated at t.
cplx kernel_L(const ContourPoint& zeta, const ContourPoint& t, bool near_diagonal);
/// d/ds of the conjugating ratio in the given orientation.
cplx kernel_K(const ContourPoint& zeta, const ContourPoint& t, bool near_diagonal,
              KernelOrientation orientation);

/// Parameter-level kernels; throw AmbiguousDerivative for s_zeta == s_t at a corner.
cplx kernel_L(const Contour& contour, double s_zeta, double s_t);
cplx kernel_K(const Contour& contour, double s_zeta, double s_t,
              KernelOrientation orientation = KernelOrientation::printed);

/// True when s_zeta and s_t are within the diagonal band on one smooth arc.
bool near_diagonal(const Contour& contour, double s_zeta, double s_t);

/// Winding number of the contour around z, by the composite rule.
int winding_number(const Contour& contour, cplx z, const CompositeRule& rule);

/// Mean of gamma over the composite nodes; throws if it is not inside the contour.
Correction default_correction(const Contour& contour);

/// The corrected operator B = A + T, discretised with a composite inner rule.
/// Densities are passed as samples at the inner nodes.
class ShermanLauricella {
 public:
  struct Options {
    CompositeRule inner = composite_rule(40, 24);
    KernelOrientation orientation = KernelOrientation::printed;
    bool with_correction = true;
  };

  ShermanLauricella(const Contour& contour, std::optional<Correction> correction, Options options);
  ShermanLauricella(const Contour& contour, std::optional<Correction> correction = std::nullopt)
      : ShermanLauricella(contour, correction, Options{}) {}

  const Contour& contour() const { return contour_; }
  const Options& options() const { return options_; }
  const Correction& correction() const { return correction_; }
  std::size_t inner_size() const { return inner_s_.size(); }
  double inner_node(std::size_t p) const { return inner_s_[p]; }
  double inner_weight(std::size_t p) const { return inner_w_[p]; }
  const ContourPoint& inner_point(std::size_t p) const { return inner_pts_[p]; }

  /// (B omega)(gamma(s_t)); `omega_t` is the density at the evaluation point.
  cplx apply(std::span<const cplx> omega_inner, cplx omega_t, double s_t) const;
  /// (T omega)(t).
  cplx correction_term(std::span<const cplx> omega_inner, cplx t) const;
  /// 1 / (2 pi i conj(t - a)), the pointwise factor of T.
  cplx correction_factor(cplx t) const;
  /// int omega(zeta) / (zeta - a)^2 dzeta for one inner-node density.
  cplx correction_moment(std::span<const cplx> omega_inner) const;

 private:
  Contour contour_;
  Options options_;
  Correction correction_;
  std::vector<double> inner_s_;
  std::vector<double> inner_w_;
  std::vector<ContourPoint> inner_pts_;
};

/// (B omega_n)(gamma(sigma)) for a spline density.
cplx apply_B(const SplineSpace& space, std::span<const cplx> coeffs, double sigma,
             const ShermanLauricella& op);

/// 4x^3 - 12xy^2 + i(4y^3 - 12x^2y).
cplx rhs_f1(cplx z);
/// |z|.
cplx rhs_f2(cplx z);

/// exp(-i alpha) (f2 + i df1/dl) where alpha is the outward-normal angle and
/// l the unit vector at angle alpha - pi/2. Without `grad_f1` (as fx + i fy)
/// the tangential derivative is taken by central differences in s.
cplx rhs_from_boundary_data(const std::function<double(cplx)>& f1,
                            const std::function<double(cplx)>& f2, const Contour& contour, double s,
                            const std::function<cplx(cplx)>& grad_f1 = {});

/// Re int_Gamma conj(f(t)) dt.
double solvability_defect(const BoundaryFunction& f, const Contour& contour,
                          const CompositeRule& rule = composite_rule(40, 24));

}  // namespace slg
