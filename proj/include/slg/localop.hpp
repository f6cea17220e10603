#pragma once

#include <complex>

#include <Eigen/Dense>

namespace slg {

/// (1/2pi) u sin(theta) / |1 - u e^{i theta}|^2
double kernel_n(double theta, double u);
/// (1/pi) u sin(theta) / (1 - u e^{i theta})^2
std::complex<double> kernel_m(double theta, double u);

/// Kernel k of a Mellin convolution  (K f)(sigma) = int_0^inf k(sigma/s) f(s) ds/s.
class MellinKernel {
 public:
  enum class Kind { N, M };

  MellinKernel(Kind kind, double theta);

  Kind kind() const { return kind_; }
  double theta() const { return theta_; }
  bool vanishes() const { return sin_ == 0.0; }

  std::complex<double> operator()(double u) const {
    const std::complex<double> den = 1.0 - u * rot_;
    if (kind_ == Kind::N) return u * sin_ / (2.0 * pi_ * std::norm(den));
    return u * sin_ / (pi_ * den * den);
  }
  /// k(1/v) / v, finite as v -> 0.
  std::complex<double> reflected(double v) const {
    const std::complex<double> den = v - rot_;
    if (kind_ == Kind::N) return sin_ / (2.0 * pi_ * std::norm(den));
    return sin_ / (pi_ * den * den);
  }

 private:
  static constexpr double pi_ = 3.14159265358979323846;
  Kind kind_;
  double theta_;
  double sin_;
  std::complex<double> rot_;
};

struct EntryQuadrature {
  int cell_order = 24;   ///< Gauss points per direction on each unit cell
  int duffy_order = 32;  ///< Gauss points per direction on the Duffy-mapped origin cell
};

/// (K phi_l, phi_q) on the half line for unit-norm splines of degree d:
///   nu_d^2 int phi(t) int k((t+q)/(u+l)) phi(u) du/(u+l) dt   over [0,d+1]^2.
/// The value does not depend on the mesh size.
std::complex<double> entry(const MellinKernel& kernel, int d, int q, int l,
                           const EntryQuadrature& quad = {});

/// Leading N x N section of A(k).
Eigen::MatrixXcd mellin_matrix(const MellinKernel& kernel, int d, int N,
                               const EntryQuadrature& quad = {});

/// Gram matrix (phi_l, phi_q) of the first N unit-norm splines on the half line.
Eigen::MatrixXd half_line_gram(int d, int N);

/// Matrix of the projected operator P K P acting on spline coefficients,
/// G^{-1} A(k); equals A(k) for d = 0 where the basis is orthonormal.
Eigen::MatrixXcd operator_matrix(const MellinKernel& kernel, int d, int N,
                                 const EntryQuadrature& quad = {});

/// Phase factors of the conjugating blocks.
enum class PhaseConvention {
  /// e^{2i beta} and -e^{2i(beta+theta)}, the phases of the rotated model
  /// operator; cond(R) is then exactly independent of beta
  double_angle,
  /// e^{i beta} and -e^{-i(beta+theta)}
  single_angle,
};

/// Truncation of the corner operator on coefficient sequences, with P(k) = operator_matrix(k):
///   [[I, P(n)], [P(n), I]] + [[0, p1 P(m_{2pi-theta})], [p2 P(m_theta), 0]] diag(conj, conj)
/// realised over the reals with unknown ordering (Re x1, Im x1, Re x2, Im x2).
struct LocalOperatorMatrix {
  double theta = 0.0;
  double beta = 0.0;
  int d = 0;
  int N = 0;
  Eigen::MatrixXd matrix;
};

LocalOperatorMatrix assemble_R(double theta, double beta, int d, int N,
                               PhaseConvention phases = PhaseConvention::double_angle,
                               const EntryQuadrature& quad = {});

/// 2-norm condition number of assemble_R.
double local_cond(double theta, double beta, int d, int N,
                  PhaseConvention phases = PhaseConvention::double_angle,
                  const EntryQuadrature& quad = {});

}  // namespace slg
