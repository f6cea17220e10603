#include "slg/biharmonic.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "slg/parallel.hpp"

namespace slg {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

}  // namespace

Goursat::Goursat(const SplineSpace& space, std::span<const cplx> coeffs)
    : Goursat(space, coeffs, composite_rule(space.n(), 24)) {}

Goursat::Goursat(const SplineSpace& space, std::span<const cplx> coeffs, const CompositeRule& rule) {
  if (static_cast<int>(coeffs.size()) != space.size()) {
    throw std::invalid_argument("Goursat: coefficient count does not match the spline space");
  }
  exclusion_ = 2.0 / space.n();
  init(space.contour(), [&](double s) { return synth(space, coeffs, s); }, rule);
}

Goursat::Goursat(const Contour& contour, const std::function<cplx(double)>& omega,
                 const CompositeRule& rule, double exclusion)
    : exclusion_(exclusion) {
  init(contour, omega, rule);
}

void Goursat::init(const Contour& contour, const std::function<cplx(double)>& omega,
                   const CompositeRule& rule) {
  zeta_.reserve(rule.size());
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const double s = rule.nodes[p];
    const ContourPoint g = contour.eval(s, Side::right);
    zeta_.push_back(g.z);
    dz_.push_back(rule.weights[p] * g.d1);
    om_.push_back(omega(s));
  }
}

double Goursat::distance(cplx z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const cplx& p : zeta_) best = std::min(best, std::abs(p - z));
  return best;
}

bool Goursat::admissible(cplx z) const {
  cplx winding{};
  for (std::size_t k = 0; k < zeta_.size(); ++k) winding += dz_[k] / (zeta_[k] - z);
  const bool inside = std::lround((winding / (2.0 * pi * I)).real()) == 1;
  return inside && distance(z) > exclusion_;
}

void Goursat::require(cplx z) const {
  if (!admissible(z)) throw std::domain_error("Goursat: point outside the domain or too close to the contour");
}

cplx Goursat::phi(cplx z) const {
  require(z);
  cplx sum{};
  for (std::size_t k = 0; k < zeta_.size(); ++k) sum += om_[k] * dz_[k] / (zeta_[k] - z);
  return sum / (2.0 * pi * I);
}

cplx Goursat::phi_prime(cplx z) const {
  require(z);
  cplx sum{};
  for (std::size_t k = 0; k < zeta_.size(); ++k) {
    const cplx r = zeta_[k] - z;
    sum += om_[k] * dz_[k] / (r * r);
  }
  return sum / (2.0 * pi * I);
}

cplx Goursat::psi(cplx z) const {
  require(z);
  cplx sum{};
  for (std::size_t k = 0; k < zeta_.size(); ++k) {
    const cplx r = zeta_[k] - z;
    sum += std::conj(om_[k]) * dz_[k] / r + om_[k] * std::conj(dz_[k]) / r -
           std::conj(zeta_[k]) * om_[k] * dz_[k] / (r * r);
  }
  return sum / (2.0 * pi * I);
}

double Goursat::u(cplx z) const { return (std::conj(z) * phi(z) + psi(z)).real(); }

cplx Goursat::boundary_combination(cplx z) const {
  return phi(z) + z * std::conj(phi_prime(z)) + std::conj(psi(z));
}

cplx phi(cplx z, const SplineSpace& space, std::span<const cplx> coeffs) {
  return Goursat(space, coeffs).phi(z);
}
cplx psi(cplx z, const SplineSpace& space, std::span<const cplx> coeffs) {
  return Goursat(space, coeffs).psi(z);
}
cplx phi_prime(cplx z, const SplineSpace& space, std::span<const cplx> coeffs) {
  return Goursat(space, coeffs).phi_prime(z);
}

std::vector<cplx> grid_points(double x0, double x1, double y0, double y1, double step) {
  if (!(step > 0.0) || !(x1 >= x0) || !(y1 >= y0)) throw std::invalid_argument("grid_points: bad box or step");
  const long nx = std::lround((x1 - x0) / step);
  const long ny = std::lround((y1 - y0) / step);
  std::vector<cplx> pts;
  pts.reserve((nx + 1) * (ny + 1));
  for (long j = 0; j <= ny; ++j)
    for (long i = 0; i <= nx; ++i) pts.emplace_back(x0 + static_cast<double>(i) * step, y0 + static_cast<double>(j) * step);
  return pts;
}

FieldGrid reconstruct_u(const std::vector<cplx>& points, const Goursat& goursat, unsigned threads) {
  FieldGrid grid;
  grid.z = points;
  grid.u.assign(points.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<char> mask(points.size(), 0);
  parallel_for(points.size(), threads, [&](std::size_t k) {
    if (!goursat.admissible(points[k])) return;
    mask[k] = 1;
    grid.u[k] = goursat.u(points[k]);
  });
  grid.inside.assign(mask.begin(), mask.end());
  return grid;
}

void write_field_csv(std::ostream& out, const FieldGrid& grid) {
  out << "x,y,u\n" << std::setprecision(17);
  for (std::size_t k = 0; k < grid.z.size(); ++k) {
    if (!grid.inside[k]) continue;
    out << grid.z[k].real() << ',' << grid.z[k].imag() << ',' << grid.u[k] << '\n';
  }
}

double bilaplacian(const std::function<double(cplx)>& u, cplx z, double h) {
  const cplx ex{h, 0.0}, ey{0.0, h};
  const double centre = u(z);
  const double cross = u(z + ex) + u(z - ex) + u(z + ey) + u(z - ey);
  const double diag = u(z + ex + ey) + u(z + ex - ey) + u(z - ex + ey) + u(z - ex - ey);
  const double far = u(z + 2.0 * ex) + u(z - 2.0 * ex) + u(z + 2.0 * ey) + u(z - 2.0 * ey);
  return (20.0 * centre - 8.0 * cross + 2.0 * diag + far) / (h * h * h * h);
}

double boundary_residual(const Goursat& goursat, const Contour& contour, const BoundaryFunction& f,
                         double offset, int samples) {
  double diff = 0.0, norm = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double s = (k + 0.5) / samples;
    const ContourPoint t = contour.eval(s, Side::right);
    const cplx inward = I * t.d1 / std::abs(t.d1);  // counterclockwise orientation
    const cplx z = t.z + offset * inward;
    if (!goursat.admissible(z)) continue;
    const cplx expected = f(s, z);
    diff += std::norm(goursat.boundary_combination(z) - expected);
    norm += std::norm(expected);
  }
  if (norm == 0.0) throw std::domain_error("boundary_residual: no admissible sample points");
  return std::sqrt(diff / norm);
}

}  // namespace slg
