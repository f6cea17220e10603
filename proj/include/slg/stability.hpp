#pragma once

#include <functional>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "slg/galerkin.hpp"

namespace slg {

/// Model contour family of an angle sweep.
enum class Geometry {
  one_corner,  ///< OneCornerLobe(theta)
  two_corner,  ///< TwoCornerLens(theta)
};

std::string to_string(Geometry geometry);
/// Accepts "one_corner" / "two_corner"; throws std::invalid_argument otherwise.
Geometry parse_geometry(const std::string& name);

struct SweepConfig {
  Geometry geometry = Geometry::one_corner;
  int d = 0;
  int n = 128;
  double theta_min = 0.1 * std::numbers::pi;
  double theta_max = 1.9 * std::numbers::pi;
  double theta_step = 0.01 * std::numbers::pi;
  bool refine = false;
  double refine_step = 0.001 * std::numbers::pi;
  int refine_n_factor = 2;
  double peak_factor = 10.0;
  OperatorKind kind = OperatorKind::corrected;
  CompositeRule inner = composite_rule(40, 24);
  unsigned threads = 0;
};

struct SweepRecord {
  double theta = 0.0;
  double cond = 0.0;  ///< NaN when the point failed
  int n = 0;
  int d = 0;
  Geometry geometry = Geometry::one_corner;
  double wall_time = 0.0;
  std::string error;  ///< empty on success
};

/// Condition number of one sweep point: (geometry, d, n, theta) -> cond.
/// Replaceable so tests can inject a singular angle.
using CondEvaluator = std::function<double(Geometry, int d, int n, double theta)>;

/// cond of the real block Galerkin matrix on the model contour, rhs f1.
double galerkin_cond(Geometry geometry, int d, int n, double theta, OperatorKind kind,
                     const CompositeRule& inner = composite_rule(40, 24));

/// theta_min + k step for k = 0..K with K = round((theta_max - theta_min) / step).
std::vector<double> theta_mesh(double theta_min, double theta_max, double step);

/// One record per mesh angle, ordered by theta. A failing point keeps its
/// row with cond = NaN and the diagnostic in `error`.
std::vector<SweepRecord> angle_sweep(const SweepConfig& config, const CondEvaluator& evaluator = {});

/// Angles whose cond exceeds peak_factor times the median of the neighbours
/// within two positions (four in the interior). Only records with neighbours
/// on both sides are judged; failed points are always reported. Needs at
/// least three records.
std::vector<double> find_peaks(const std::vector<SweepRecord>& records, double peak_factor = 10.0);

struct RefineResult {
  double theta_star = 0.0;
  std::vector<SweepRecord> records;
  std::vector<double> peaks;  ///< peaks left after refinement
  bool cleared = false;
};

/// Re-sweeps [theta_star - 0.01pi, theta_star + 0.01pi] at refine_step with
/// n multiplied by refine_n_factor.
RefineResult refine(double theta_star, const SweepConfig& config, const CondEvaluator& evaluator = {});

/// CSV `geometry,d,n,theta_over_pi,cond,wall_time_s`. Timings are written as 0
/// unless `with_timing`, so that identical configs give identical files.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, bool with_timing = false);

}  // namespace slg
