#pragma once

#include <string>

#include "ellop/curve.hpp"

namespace ellop {

class CurveFileError : public std::runtime_error {
  public:
    CurveFileError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

// Curve specification text:
//
//   # comment
//   params lambda          (optional; space-separated parameter names)
//   a1 0
//   a2 -(1+lambda)
//   a3 0
//   a4 lambda
//   a6 0
//
// Entries are integer/parameter expressions with + - * ^ and parentheses.
// Every a1, a2, a3, a4, a6 must be present exactly once.
WeierstrassCurve parse_curve_file(const std::string& text, const std::string& name = "");

WeierstrassCurve load_curve_file(const std::string& path);

// Accepts a preset name (general, legendre, tate-singular) or a file path.
WeierstrassCurve resolve_curve(const std::string& spec);

}  // namespace ellop
