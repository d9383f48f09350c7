#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polyhardy {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Invalid construction parameters (bad node count, nonpositive radius, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A curve failed geometric validation (self-intersection, orientation, ...).
struct CurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operand or evaluation point is outside an operation's domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polyhardy
