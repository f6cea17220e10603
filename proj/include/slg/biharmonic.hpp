#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "slg/quadrature.hpp"
#include "slg/slop.hpp"
#include "slg/spline.hpp"

namespace slg {

/// Goursat functions of a Sherman-Lauricella density:
///   phi(z) = 1/(2 pi i) int omega / (zeta - z) dzeta
///   psi(z) = 1/(2 pi i) [int conj(omega) / (zeta - z) dzeta + int omega / (zeta - z) dconj(zeta)
///                        - int conj(zeta) omega / (zeta - z)^2 dzeta]
/// evaluated with a composite Gauss rule. Points closer to the contour than the
/// exclusion distance are rejected, as is anything outside.
class Goursat {
 public:
  /// Spline density; the default rule has one panel per knot cell (r = 24) and
  /// the exclusion distance is 2/n.
  Goursat(const SplineSpace& space, std::span<const cplx> coeffs);
  Goursat(const SplineSpace& space, std::span<const cplx> coeffs, const CompositeRule& rule);
  /// Density given as a function of the parameter.
  Goursat(const Contour& contour, const std::function<cplx(double)>& omega, const CompositeRule& rule,
          double exclusion);

  cplx phi(cplx z) const;
  cplx phi_prime(cplx z) const;
  cplx psi(cplx z) const;
  /// Re(conj(z) phi(z) + psi(z)).
  double u(cplx z) const;
  /// phi(z) + z conj(phi'(z)) + conj(psi(z)); tends to the right-hand side on the contour.
  cplx boundary_combination(cplx z) const;

  /// Inside by winding number and at least the exclusion distance from the contour.
  bool admissible(cplx z) const;
  /// Distance to the nearest quadrature node on the contour.
  double distance(cplx z) const;
  double exclusion() const { return exclusion_; }

 private:
  void init(const Contour& contour, const std::function<cplx(double)>& omega, const CompositeRule& rule);
  void require(cplx z) const;

  std::vector<cplx> zeta_;  // nodes on the contour
  std::vector<cplx> dz_;    // w gamma'
  std::vector<cplx> om_;    // density at the nodes
  double exclusion_ = 0.0;
};

/// Free-function forms.
cplx phi(cplx z, const SplineSpace& space, std::span<const cplx> coeffs);
cplx psi(cplx z, const SplineSpace& space, std::span<const cplx> coeffs);
cplx phi_prime(cplx z, const SplineSpace& space, std::span<const cplx> coeffs);

struct FieldGrid {
  std::vector<cplx> z;
  std::vector<double> u;     ///< NaN where masked out
  std::vector<bool> inside;  ///< admissible points
};

/// Regular grid over [x0,x1] x [y0,y1] with the given step, row-major in y then x.
std::vector<cplx> grid_points(double x0, double x1, double y0, double y1, double step);

FieldGrid reconstruct_u(const std::vector<cplx>& points, const Goursat& goursat, unsigned threads = 0);

/// CSV `x,y,u`, admissible points only.
void write_field_csv(std::ostream& out, const FieldGrid& grid);

/// 13-point discrete bilaplacian of u at z with spacing h.
double bilaplacian(const std::function<double(cplx)>& u, cplx z, double h);

/// Relative RMS of boundary_combination(z) - f(s, z) over points z offset by
/// `offset` along the inward normal from `samples` parameters; points failing
/// the admissibility test are skipped. f receives the offset point.
double boundary_residual(const Goursat& goursat, const Contour& contour, const BoundaryFunction& f,
                         double offset, int samples);

}  // namespace slg
