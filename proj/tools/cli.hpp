#pragma once

#include <string>
#include <vector>

#include "slg/contour.hpp"

namespace slg::cli {

/// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kBadArguments = 2;

/// Parses an angle written as a multiple of pi ("0.5pi", "pi/3", "2pi/3",
/// "pi") or as plain radians ("1.25"). Throws std::invalid_argument.
double parse_angle(const std::string& text);

/// Contour from a family name (square, rhombus, lobe, lens; one_corner and
/// two_corner are aliases) plus an angle, or from a JSON object such as
/// {"kind": "rhombus", "alpha": "pi/4"}. Throws std::invalid_argument.
ContourSpec parse_contour(const std::string& text, const std::string& angle);

/// git-style blob hash: sha1("blob <size>\0" + content), lowercase hex.
std::string git_blob_sha1(const std::string& content);

/// Runs one command; argv[0] is the program name.
int run(const std::vector<std::string>& args);

}  // namespace slg::cli
