#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gmloci/error.hpp"
#include "gmloci/polynomial.hpp"

namespace gmloci {

// Problem file grammar (line based, whitespace-insensitive, '#' comments):
//
//   field Q | field F<p>
//   ring x:1, y:-1, z:0
//   ideal x*y - z^2, ...
//   flag smooth-affine, ...
//
// Exactly one ring line; field defaults to Q, ideal to (0).
struct ProblemFile {
  Field field = Field::rationals();
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<std::string> flags;

  bool has_flag(std::string_view flag) const;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             std::vector<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

// Parses and validates (prime modulus, known variables, homogeneous
// generators). Throws ParseError or ValidationError.
ProblemFile parse_problem(std::string_view text);

// Canonical text; parse_problem(print_problem(p)) prints identically.
std::string print_problem(const ProblemFile& problem);

// A single polynomial over `ring`, using the same term grammar as ideal lines.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Flags understood by the verification suite.
inline constexpr std::string_view kFlagSmoothAffine = "smooth-affine";
inline constexpr std::string_view kFlagExpectEqualClosure = "expect-equal-closure";
inline constexpr std::string_view kFlagExpectStrictClosure = "expect-strict-closure";

}  // namespace gmloci
