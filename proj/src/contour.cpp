#include "slg/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace slg {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kKnotTol = 1e-14;
const cplx I{0.0, 1.0};

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * pi);
  if (a < 0.0) a += 2.0 * pi;
  return a;
}

double seg_start(const Segment& seg) {
  return std::visit([](const auto& g) { return g.s0; }, seg);
}
double seg_end(const Segment& seg) {
  return std::visit([](const auto& g) { return g.s1; }, seg);
}

ContourPoint eval_segment(const LineSegment& g, double s) {
  return {g.start + g.velocity * (s - g.s0), g.velocity, cplx{}};
}

ContourPoint eval_segment(const ArcSegment& g, double s) {
  const cplx e = g.radius * std::exp(I * (g.phase + g.rate * (s - g.s0)));
  return {g.center + e, I * g.rate * e, -g.rate * g.rate * e};
}

ContourPoint eval_segment(const LobeSegment& g, double s) {
  const double len = g.s1 - g.s0;
  const double u = (s - g.s0) / len;
  const cplx e = std::exp(I * (g.theta * (u - 0.5)));
  const double sn = std::sin(pi * u);
  const double cs = std::cos(pi * u);
  const cplx d1 = (pi * cs + I * g.theta * sn) * e;
  const cplx d2 = (-pi * pi * sn + 2.0 * I * pi * g.theta * cs - g.theta * g.theta * sn) * e;
  return {sn * e, d1 / len, d2 / (len * len)};
}

ContourPoint eval_segment(const Segment& seg, double s) {
  return std::visit([s](const auto& g) { return eval_segment(g, s); }, seg);
}

void require_angle(double a, double lo, double hi, const char* what) {
  if (!(a > lo && a < hi)) {
    std::ostringstream os;
    os << what << " angle " << a << " outside (" << lo << ", " << hi << ")";
    throw std::domain_error(os.str());
  }
}

}  // namespace

double wrap01(double s) {
  double r = s - std::floor(s);
  if (r >= 1.0) r = 0.0;
  return r;
}

std::string describe(const ContourSpec& spec) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rhombus>) {
          os << "rhombus(alpha/pi=" << v.alpha / pi << ")";
        } else if constexpr (std::is_same_v<T, UnitSquare>) {
          os << "square";
        } else if constexpr (std::is_same_v<T, OneCornerLobe>) {
          os << "one_corner(theta/pi=" << v.theta / pi << ")";
        } else {
          os << "two_corner(theta/pi=" << v.theta / pi << ")";
        }
      },
      spec);
  return os.str();
}

Contour::Contour(const ContourSpec& spec) : spec_(spec), has_spec_(true) {
  auto build_rhombus = [this](double alpha) {
    require_angle(alpha, 0.0, pi, "rhombus");
    const cplx h = std::exp(I * (alpha / 2));
    const cplx e = std::exp(I * alpha);
    const double c = std::cos(alpha / 2);
    const double sn = std::sin(alpha / 2);
    segments_ = {
        LineSegment{0.0, 0.25, -c * h, 4.0},
        LineSegment{0.25, 0.5, -I * sn * h, 4.0 * e},
        LineSegment{0.5, 0.75, c * h, -4.0},
        LineSegment{0.75, 1.0, I * sn * h, -4.0 * e},
    };
    corner_params_ = {0.0, 0.25, 0.5, 0.75};
  };

  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rhombus>) {
          build_rhombus(v.alpha);
        } else if constexpr (std::is_same_v<T, UnitSquare>) {
          build_rhombus(pi / 2);
        } else if constexpr (std::is_same_v<T, OneCornerLobe>) {
          require_angle(v.theta, 0.0, 2.0 * pi, "one-corner");
          segments_ = {LobeSegment{0.0, 1.0, v.theta}};
          if (v.theta != pi) corner_params_ = {0.0};
        } else {
          require_angle(v.theta, 0.0, 2.0 * pi, "two-corner");
          const double half = 0.5 * v.theta;
          const double radius = 0.5 / std::sin(half);
          const double shift = 0.5 / std::tan(half);
          segments_ = {
              ArcSegment{0.0, 0.5, cplx{-shift, 0.0}, radius, -half, 2.0 * v.theta},
              ArcSegment{0.5, 1.0, cplx{shift, 0.0}, radius, pi - half, 2.0 * v.theta},
          };
          if (v.theta != pi) corner_params_ = {0.0, 0.5};
        }
      },
      spec);
}

Contour::Contour(std::vector<Segment> segments, std::vector<double> corner_params)
    : segments_(std::move(segments)), corner_params_(std::move(corner_params)) {
  if (segments_.empty()) throw std::invalid_argument("Contour: no segments");
  std::sort(corner_params_.begin(), corner_params_.end());
}

std::vector<double> Contour::breakpoints() const {
  std::vector<double> out;
  out.reserve(segments_.size());
  for (const auto& seg : segments_) out.push_back(seg_start(seg));
  return out;
}

bool Contour::is_corner(double s, double tol) const {
  const double w = wrap01(s);
  for (double c : corner_params_) {
    double d = std::abs(w - c);
    d = std::min(d, 1.0 - d);
    if (d <= tol) return true;
  }
  return false;
}

bool Contour::corner_between(double a, double b) const {
  for (double c : corner_params_) {
    // representative of c in (a, a + 1]
    double cc = c + std::ceil(a - c);
    if (cc <= a) cc += 1.0;
    if (cc > a + kKnotTol && cc < b - kKnotTol) return true;
  }
  return false;
}

ContourPoint Contour::eval(double s, Side side) const {
  const double w = wrap01(s);
  const std::size_t count = segments_.size();

  for (std::size_t k = 0; k < count; ++k) {
    const double b = seg_start(segments_[k]);
    double d = std::abs(w - b);
    d = std::min(d, 1.0 - d);
    if (d > kKnotTol) continue;
    // at a junction
    if (side == Side::two_sided && is_corner(b, kKnotTol)) {
      throw AmbiguousDerivative("two-sided derivative requested at a corner parameter");
    }
    if (side == Side::left) {
      const Segment& prev = segments_[(k + count - 1) % count];
      return eval_segment(prev, seg_end(prev));
    }
    return eval_segment(segments_[k], b);
  }

  for (const auto& seg : segments_) {
    if (w >= seg_start(seg) && w < seg_end(seg)) return eval_segment(seg, w);
  }
  return eval_segment(segments_.back(), w);
}

std::vector<CornerData> Contour::corners() const {
  std::vector<CornerData> out;
  out.reserve(corner_params_.size());
  for (double c : corner_params_) {
    const ContourPoint right = eval(c, Side::right);
    const ContourPoint left = eval(c, Side::left);
    const double beta = wrap_angle(std::arg(right.d1));
    const double theta = wrap_angle(std::arg(-left.d1) - std::arg(right.d1));
    if (theta == 0.0 || std::abs(theta - pi) < 1e-14) continue;
    out.push_back({c, right.z, theta, beta});
  }
  return out;
}

ParametrizationReport validate_parametrization(const Contour& contour, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("validate_parametrization: tol must be positive");
  ParametrizationReport rep;
  rep.tolerance = tol;
  bool ok = true;
  for (double b : contour.breakpoints()) {
    const ContourPoint right = contour.eval(b, Side::right);
    const ContourPoint left = contour.eval(b, Side::left);
    rep.periodicity_defect = std::max(rep.periodicity_defect, std::abs(right.z - left.z));
    if (contour.is_corner(b)) {
      ParametrizationReport::Entry e{b, std::abs(left.d1), std::abs(right.d1), 0.0};
      e.mismatch = std::abs(e.speed_left - e.speed_right);
      ok = ok && e.mismatch < tol;
      rep.corners.push_back(e);
    }
  }
  rep.pass = ok && rep.periodicity_defect < tol;
  return rep;
}

}  // namespace slg
