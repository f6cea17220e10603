#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>

#include <Eigen/Dense>

#include "slg/slop.hpp"
#include "slg/spline.hpp"

namespace slg {

/// Which operator the Galerkin matrix discretises.
enum class OperatorKind {
  corrected,  ///< B = A + T
  plain,      ///< A, without the compact correction
  identity,   ///< test hook: the Gram matrix
};

struct GalerkinOptions {
  int outer_order = 24;  ///< Gauss points per knot cell for the outer inner products
  CompositeRule inner = composite_rule(40, 24);
  KernelOrientation orientation = KernelOrientation::printed;
  OperatorKind kind = OperatorKind::corrected;
  std::optional<Correction> correction;  ///< default: parameter mean of the contour
  unsigned threads = 0;
};

/// The R-linear system M a + N conj(a) = F written over the reals:
/// unknown (Re a, Im a), equations (Re, Im) stacked in the same order.
struct RealBlockSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  int N = 0;
};

RealBlockSystem assemble(const SplineSpace& space, const BoundaryFunction& f,
                         const GalerkinOptions& options = {});

struct GalerkinSolution {
  SplineSpace space;
  CoefficientVector coeffs;
  double cond = 0.0;  ///< 0 when not requested
  double residual = 0.0;
};

class SingularSystem : public std::runtime_error {
 public:
  SingularSystem(const std::string& what, double cond) : std::runtime_error(what), cond_(cond) {}
  double cond() const { return cond_; }

 private:
  double cond_;
};

struct SolveOptions {
  bool compute_cond = true;
  double singular_cond = 1e13;
};

/// LU solve with partial pivoting. Throws SingularSystem when the system is
/// numerically singular.
GalerkinSolution solve(const SplineSpace& space, const RealBlockSystem& system,
                       const SolveOptions& options = {});

/// 2-norm condition number: exact SVD for dimension <= 2048, otherwise the
/// LU-based 1-norm estimate.
double condition_number(const Eigen::MatrixXd& matrix);

/// ||omega_2n - omega_n|| / ||omega_2n|| in the discrete L2(Gamma) norm over
/// the composite nodes with weights w |gamma'|.
double relative_error(const GalerkinSolution& coarse, const GalerkinSolution& fine,
                      const CompositeRule& rule = composite_rule(40, 24));

/// CSV `s,re_omega,im_omega,abs_omega` at the composite nodes.
void write_density_csv(std::ostream& out, const GalerkinSolution& sol,
                       const CompositeRule& rule = composite_rule(40, 24));

}  // namespace slg
