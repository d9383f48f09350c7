#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/laurent.hpp"
#include "core/whitney_jet.hpp"

namespace polyhardy {

enum class Side { Plus, Minus };  // interior / exterior of the curve

// An order-(k+1) polyanalytic function F(z) = sum_{m<=k} F_m(z) zbar^m.
//
// Exact mode carries the analytic components as Laurent polynomials (poles
// only at 0 and infinity).  Numeric mode carries a boundary jet and a side:
// the function is reconstructed through the Cauchy-type representation, with
// each component's boundary trace recovered from the jet rows pointwise and
// fed to a scalar Cauchy integral.  Exterior-mode functions record the
// component values at infinity (zero unless supplied).
class PolyanalyticFn {
 public:
  static PolyanalyticFn from_components(std::vector<LaurentPoly> components);
  static PolyanalyticFn from_boundary_jet(WhitneyJet trace, Side side);
  static PolyanalyticFn from_boundary_jet(WhitneyJet trace, Side side,
                                          std::vector<cplx> values_at_infinity);

  int order() const;
  bool exact() const { return !trace_.has_value(); }
  Side side() const;
  const std::vector<LaurentPoly>& components() const;
  const WhitneyJet& boundary_jet() const;

  std::vector<cplx> components_at_infinity() const;
  bool vanishes_at_infinity() const;

  // Numeric mode requires z strictly on the recorded side and outside the
  // near-boundary band.
  cplx evaluate(cplx z) const;

  // j-fold dbar derivative; j >= order gives the zero function.  Numeric mode
  // shifts which jet rows feed the kernel, never differentiates numerically.
  PolyanalyticFn dbar(int j) const;

 private:
  PolyanalyticFn() = default;

  std::vector<LaurentPoly> components_;           // exact mode
  std::optional<WhitneyJet> trace_;               // numeric mode
  std::vector<std::vector<cplx>> component_traces_;  // numeric: F_m at the nodes
  Side side_ = Side::Plus;
  std::vector<cplx> values_at_infinity_;
};

// Inversion of the composition map: given dbar^j F(z) for j = 0..k, returns
// the component values F_m(z),
//   F_m(z) = sum_{j=m}^k (-1)^{j-m} / ((j-m)! m!) dbar^j F(z) zbar^{j-m}.
std::vector<cplx> components_from_derivatives(std::span<const cplx> dbar_values, cplx z);

struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};
Rational make_rational(long long num, long long den);

// sum_{j=m}^{k} (-1)^{j-m} / ((j-m)! (k+1-j)!), asserted equal to
// -(-1)^{k+1-m} / (k+1-m)!.
Rational alt_binom_sum(int k, int m);

// The raw Cauchy-type transform
//   sum_m (1/2 pi i) \oint conj(z-zeta)^m f^(0,m)(zeta) / (m! (zeta-z)) dzeta
// at any z outside the near-boundary band (either side).  This is the
// sectionally polyanalytic solution of the jump problem.
cplx transform_eval(const WhitneyJet& f, cplx z);

// Side-routed representation: interior z reproduces the interior function
// with boundary jet f; exterior z returns the negative of the transform plus
// the optional sum of component values at infinity.  z must lie strictly on
// the requested side.
cplx cauchy_transform(const WhitneyJet& f, cplx z, Side side,
                      const std::vector<cplx>* values_at_infinity = nullptr);

// One-sided boundary values of dbar^j of the Cauchy transform of f at all
// nodes: (+-f^(0,j) + [S_k f]^(0,j)) / 2.
std::vector<std::vector<cplx>> boundary_limits(const WhitneyJet& f, Side side);
std::vector<cplx> boundary_limit(const WhitneyJet& f, int j, Side side);

struct JumpSolution {
  PolyanalyticFn plus;   // restriction to the interior
  PolyanalyticFn minus;  // restriction to the exterior, components vanish at infinity
  std::vector<std::vector<cplx>> plus_trace;   // interior boundary limits, rows j = 0..k
  std::vector<std::vector<cplx>> minus_trace;  // exterior boundary limits
  double max_jump_residual = 0.0;  // max_{j,i} |plus - minus - f^(0,j)|
};

// The unique sectionally polyanalytic function with dbar^j jumps f^(0,j)
// across the curve and vanishing components at infinity.
JumpSolution solve_jump_problem(const WhitneyJet& f);

}  // namespace polyhardy
