#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace slg {

using cplx = std::complex<double>;

// --- contour families -------------------------------------------------------

/// Rhombus with unit sides and opening angle `alpha` at gamma(0), centred at 0.
struct Rhombus {
  double alpha;
};
/// Rhombus(pi/2).
struct UnitSquare {};
/// sin(pi s) exp(i theta (s - 1/2)): one corner of opening `theta` at the origin.
struct OneCornerLobe {
  double theta;
};
/// Two circular arcs through -i/2 and i/2 meeting at opening angle `theta`.
struct TwoCornerLens {
  double theta;
};

using ContourSpec = std::variant<Rhombus, UnitSquare, OneCornerLobe, TwoCornerLens>;

std::string describe(const ContourSpec& spec);

// --- segments ---------------------------------------------------------------

/// start + velocity * (s - s0)
struct LineSegment {
  double s0, s1;
  cplx start, velocity;
};
/// center + radius * exp(i (phase + rate * (s - s0)))
struct ArcSegment {
  double s0, s1;
  cplx center;
  double radius, phase, rate;
};
/// sin(pi u) exp(i theta (u - 1/2)),  u = (s - s0) / (s1 - s0)
struct LobeSegment {
  double s0, s1;
  double theta;
};

using Segment = std::variant<LineSegment, ArcSegment, LobeSegment>;

enum class Side { left, right, two_sided };

/// gamma(s) and its first two parameter derivatives.
struct ContourPoint {
  cplx z;
  cplx d1;
  cplx d2;
};

struct CornerData {
  double s;
  cplx tau;
  double theta;  ///< opening angle between right and left semi-tangents, (0, 2pi)
  double beta;   ///< inclination of the right semi-tangent, [0, 2pi)
};

class AmbiguousDerivative : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Piecewise-smooth closed curve with a 1-periodic parametrization.
/// Immutable after construction.
class Contour {
 public:
  /// Builds the closed-form parametrization of a contour family.
  /// Throws std::domain_error for an angle outside its admissible range.
  explicit Contour(const ContourSpec& spec);

  /// Custom contour from segments covering [0,1) in order; `corner_params`
  /// lists the segment junctions that are geometric corners.
  Contour(std::vector<Segment> segments, std::vector<double> corner_params);

  ContourPoint eval(double s, Side side = Side::two_sided) const;
  cplx point(double s) const { return eval(s, Side::right).z; }

  const std::vector<double>& corner_params() const { return corner_params_; }
  int corner_count() const { return static_cast<int>(corner_params_.size()); }
  std::vector<CornerData> corners() const;

  /// Segment start parameters in [0,1).
  std::vector<double> breakpoints() const;

  bool is_corner(double s, double tol = 1e-13) const;
  /// True if a corner parameter lies strictly inside the periodic interval
  /// (a, b), with b - a < 1.
  bool corner_between(double a, double b) const;

  const ContourSpec* spec() const { return has_spec_ ? &spec_ : nullptr; }

 private:
  ContourSpec spec_{UnitSquare{}};
  bool has_spec_ = false;
  std::vector<Segment> segments_;
  std::vector<double> corner_params_;
};

/// Per-corner speed mismatch and periodicity defect of a parametrization.
struct ParametrizationReport {
  struct Entry {
    double s;
    double speed_left;
    double speed_right;
    double mismatch;
  };
  std::vector<Entry> corners;
  double periodicity_defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

ParametrizationReport validate_parametrization(const Contour& contour, double tol);

/// Reduces s to [0,1).
double wrap01(double s);

}  // namespace slg
