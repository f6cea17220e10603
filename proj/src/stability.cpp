#include "slg/stability.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "slg/parallel.hpp"

namespace slg {

namespace {

constexpr double pi = std::numbers::pi;

ContourSpec model_contour(Geometry geometry, double theta) {
  if (geometry == Geometry::one_corner) return OneCornerLobe{theta};
  return TwoCornerLens{theta};
}

std::vector<SweepRecord> sweep_points(const std::vector<double>& thetas, Geometry geometry, int d,
                                      int n, const SweepConfig& config,
                                      const CondEvaluator& evaluator) {
  std::vector<SweepRecord> records(thetas.size());
  parallel_for(thetas.size(), config.threads, [&](std::size_t k) {
    SweepRecord& rec = records[k];
    rec.theta = thetas[k];
    rec.n = n;
    rec.d = d;
    rec.geometry = geometry;
    const auto start = std::chrono::steady_clock::now();
    try {
      rec.cond = evaluator ? evaluator(geometry, d, n, rec.theta)
                           : galerkin_cond(geometry, d, n, rec.theta, config.kind, config.inner);
    } catch (const std::exception& e) {
      rec.cond = std::numeric_limits<double>::quiet_NaN();
      rec.error = e.what();
    }
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return records;
}

}  // namespace

std::string to_string(Geometry geometry) {
  return geometry == Geometry::one_corner ? "one_corner" : "two_corner";
}

Geometry parse_geometry(const std::string& name) {
  if (name == "one_corner") return Geometry::one_corner;
  if (name == "two_corner") return Geometry::two_corner;
  throw std::invalid_argument("unknown geometry '" + name + "' (expected one_corner or two_corner)");
}

double galerkin_cond(Geometry geometry, int d, int n, double theta, OperatorKind kind,
                     const CompositeRule& inner) {
  const SplineSpace space(Contour(model_contour(geometry, theta)), n, d);
  GalerkinOptions options;
  options.kind = kind;
  options.inner = inner;
  options.threads = 1;  // the sweep parallelises over angles
  const RealBlockSystem sys =
      assemble(space, [](double, cplx z) { return rhs_f1(z); }, options);
  return condition_number(sys.matrix);
}

std::vector<double> theta_mesh(double theta_min, double theta_max, double step) {
  if (!(step > 0.0) || !(theta_max >= theta_min)) {
    throw std::invalid_argument("theta_mesh: need step > 0 and theta_max >= theta_min");
  }
  const long count = std::lround((theta_max - theta_min) / step);
  std::vector<double> thetas;
  thetas.reserve(count + 1);
  for (long k = 0; k <= count; ++k) thetas.push_back(theta_min + static_cast<double>(k) * step);
  return thetas;
}

std::vector<SweepRecord> angle_sweep(const SweepConfig& config, const CondEvaluator& evaluator) {
  if (config.n < 1 || config.d < 0) throw std::invalid_argument("angle_sweep: invalid n or d");
  const auto thetas = theta_mesh(config.theta_min, config.theta_max, config.theta_step);
  for (double t : thetas) {
    if (!(t > 0.0 && t < 2.0 * pi)) throw std::invalid_argument("angle_sweep: angles must lie in (0, 2pi)");
  }
  return sweep_points(thetas, config.geometry, config.d, config.n, config, evaluator);
}

std::vector<double> find_peaks(const std::vector<SweepRecord>& records, double peak_factor) {
  if (records.size() < 3) throw std::invalid_argument("find_peaks: need at least three records");
  std::vector<double> peaks;
  const long size = static_cast<long>(records.size());
  for (long i = 0; i < size; ++i) {
    const double c = records[i].cond;
    if (!std::isfinite(c)) {
      peaks.push_back(records[i].theta);
      continue;
    }
    // a peak needs data on both sides; the sweep ends are not judged
    if (i == 0 || i == size - 1) continue;
    std::vector<double> neighbours;
    for (long j = std::max(0L, i - 2); j <= std::min(size - 1, i + 2); ++j) {
      if (j != i && std::isfinite(records[j].cond)) neighbours.push_back(records[j].cond);
    }
    if (neighbours.empty()) continue;
    std::sort(neighbours.begin(), neighbours.end());
    const std::size_t m = neighbours.size();
    const double median = m % 2 ? neighbours[m / 2] : 0.5 * (neighbours[m / 2 - 1] + neighbours[m / 2]);
    if (c > peak_factor * median) peaks.push_back(records[i].theta);
  }
  return peaks;
}

RefineResult refine(double theta_star, const SweepConfig& config, const CondEvaluator& evaluator) {
  const double half = 0.01 * pi;
  const double lo = std::max(theta_star - half, config.refine_step);
  const double hi = std::min(theta_star + half, 2.0 * pi - config.refine_step);
  // keep theta_star on the mesh
  const long below = std::lround((theta_star - lo) / config.refine_step);
  const long above = std::lround((hi - theta_star) / config.refine_step);
  std::vector<double> thetas;
  for (long k = -below; k <= above; ++k) thetas.push_back(theta_star + static_cast<double>(k) * config.refine_step);

  RefineResult out;
  out.theta_star = theta_star;
  out.records = sweep_points(thetas, config.geometry, config.d, config.n * config.refine_n_factor, config,
                             evaluator);
  out.peaks = find_peaks(out.records, config.peak_factor);
  out.cleared = out.peaks.empty();
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, bool with_timing) {
  out << "geometry,d,n,theta_over_pi,cond,wall_time_s\n";
  for (const auto& r : records) {
    out << to_string(r.geometry) << ',' << r.d << ',' << r.n << ',' << std::setprecision(6)
        << r.theta / pi << ',' << std::setprecision(17) << r.cond << ','
        << std::setprecision(6) << (with_timing ? r.wall_time : 0.0) << '\n';
  }
}

}  // namespace slg
