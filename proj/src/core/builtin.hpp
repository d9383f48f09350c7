#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/laurent.hpp"
#include "core/whitney_jet.hpp"

namespace polyhardy {

// Named test data used by the CLI and the verification suites.
//
//   zero           all rows zero
//   constant       f^(0,0) = 1, upper rows zero
//   interior-poly  jet of F with entire components F_m(z) = z^{m+1}/(m+1)
//   exterior-poly  jet of F with components F_m(z) = z^{-(m+2)}/(m+1),
//                  vanishing at infinity (the curve must enclose the origin)
//   mixed-poly     sum of the two
//   random         seeded Laurent rows, exponents in [-6, 6]
//
// `components` is set for the polyanalytic families; `laurent` carries the
// exact unit-circle rows whenever the data is Laurent-sampled.
struct BuiltinJet {
  WhitneyJet jet;
  std::optional<LaurentJet> laurent;
  std::optional<std::vector<LaurentPoly>> components;
};

BuiltinJet builtin_jet(const std::string& id, CurvePtr curve, int k, std::uint64_t seed);
std::vector<std::string> builtin_ids();

// Seeded random Laurent data for the property suites.
LaurentPoly random_laurent(std::uint64_t& state, int max_exponent, int terms);
LaurentJet random_laurent_jet(std::uint64_t& state, int k, int max_exponent, int terms);

}  // namespace polyhardy
