#include "core/polyanalytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "core/sk_operator.hpp"

namespace polyhardy {

namespace {

double falling(int b, int q) {
  double acc = 1.0;
  for (int i = 0; i < q; ++i) acc *= static_cast<double>(b - i);
  return acc;
}

void check_off_band(const CurveDiscretization& curve, cplx z) {
  const double dist = curve.boundary_distance(z);
  const double delta = curve.near_boundary_delta();
  if (dist < delta) {
    std::ostringstream os;
    os << "evaluation point too close to the curve: dist " << dist << " < band " << delta;
    throw DomainError(os.str());
  }
}

cplx powers_sum(std::span<const cplx> values, cplx zbar) {
  // sum_m values[m] * zbar^m
  cplx acc = 0.0;
  for (size_t m = values.size(); m-- > 0;) acc = acc * zbar + values[m];
  return acc;
}

long long factorial_ll(int n) {
  long long acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace

PolyanalyticFn PolyanalyticFn::from_components(std::vector<LaurentPoly> components) {
  while (!components.empty() && components.back().is_zero()) components.pop_back();
  PolyanalyticFn f;
  f.components_ = std::move(components);
  return f;
}

PolyanalyticFn PolyanalyticFn::from_boundary_jet(WhitneyJet trace, Side side) {
  std::vector<cplx> zeros(static_cast<size_t>(trace.k) + 1, cplx(0.0));
  return from_boundary_jet(std::move(trace), side, std::move(zeros));
}

PolyanalyticFn PolyanalyticFn::from_boundary_jet(WhitneyJet trace, Side side,
                                                 std::vector<cplx> values_at_infinity) {
  if (values_at_infinity.size() != static_cast<size_t>(trace.k) + 1)
    throw ConfigError("need one value at infinity per analytic component");
  if (side == Side::Plus) {
    for (const auto& v : values_at_infinity)
      if (v != cplx(0.0)) throw ConfigError("interior functions carry no data at infinity");
  }
  PolyanalyticFn f;
  f.side_ = side;
  f.values_at_infinity_ = std::move(values_at_infinity);

  // Component boundary traces from the jet rows, pointwise at every node.
  const int n = trace.curve->size();
  const int k = trace.k;
  f.component_traces_.assign(static_cast<size_t>(k) + 1, std::vector<cplx>(n));
  std::vector<cplx> dbar_values(static_cast<size_t>(k) + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= k; ++j) dbar_values[j] = trace.rows[j][i];
    const auto comps = components_from_derivatives(dbar_values, trace.curve->points()[i]);
    for (int m = 0; m <= k; ++m) f.component_traces_[m][i] = comps[m];
  }
  f.trace_ = std::move(trace);
  return f;
}

int PolyanalyticFn::order() const {
  if (exact()) return static_cast<int>(components_.size());
  return trace_->k + 1;
}

Side PolyanalyticFn::side() const {
  if (exact()) throw DomainError("exact-mode function has no side");
  return side_;
}

const std::vector<LaurentPoly>& PolyanalyticFn::components() const {
  if (!exact()) throw DomainError("analytic components are stored in exact mode only");
  return components_;
}

const WhitneyJet& PolyanalyticFn::boundary_jet() const {
  if (exact()) throw DomainError("exact-mode function has no boundary jet");
  return *trace_;
}

std::vector<cplx> PolyanalyticFn::components_at_infinity() const {
  if (!exact()) {
    if (side_ == Side::Plus) throw DomainError("interior function has no values at infinity");
    return values_at_infinity_;
  }
  std::vector<cplx> out;
  out.reserve(components_.size());
  for (const auto& c : components_) {
    if (!c.is_zero() && c.max_exponent() > 0)
      throw DomainError("component has a pole at infinity");
    out.push_back(c.coeff(0));
  }
  return out;
}

bool PolyanalyticFn::vanishes_at_infinity() const {
  for (const auto& v : components_at_infinity())
    if (v != cplx(0.0)) return false;
  return true;
}

cplx PolyanalyticFn::evaluate(cplx z) const {
  if (exact()) {
    cplx acc = 0.0;
    const cplx zbar = std::conj(z);
    for (size_t m = components_.size(); m-- > 0;) acc = acc * zbar + eval(components_[m], z);
    return acc;
  }

  const auto& curve = *trace_->curve;
  const PointClass cls = curve.classify(z);
  if (cls == PointClass::NearBoundary) check_off_band(curve, z);  // throws with distances
  const bool want_interior = side_ == Side::Plus;
  if ((cls == PointClass::Interior) != want_interior)
    throw DomainError(want_interior ? "point lies outside the curve of an interior function"
                                    : "point lies inside the curve of an exterior function");

  // F_m(z) by a scalar Cauchy integral of the recovered component trace.
  const int n = curve.size();
  const int k = trace_->k;
  const auto& pts = curve.points();
  const auto& tang = curve.tangents();
  const cplx norm(0.0, -1.0 / n);  // (1/2 pi i)(2 pi / N)
  std::vector<cplx> fm(static_cast<size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) acc += component_traces_[m][j] * tang[j] / (pts[j] - z);
    fm[m] = acc * norm;
    if (side_ == Side::Minus) fm[m] = -fm[m] + values_at_infinity_[m];
  }
  return powers_sum(fm, std::conj(z));
}

PolyanalyticFn PolyanalyticFn::dbar(int j) const {
  if (j < 0) throw DomainError("dbar order must be nonnegative");
  if (exact()) {
    const int ord = order();
    std::vector<LaurentPoly> out;
    for (int m = 0; m + j < ord; ++m)
      out.push_back(falling(m + j, j) * components_[m + j]);
    return from_components(std::move(out));
  }
  if (j > trace_->k) {
    // dbar^{k+1} F = 0: represent as the zero jet of order 0 on the same curve.
    WhitneyJet zero = zero_jet(trace_->curve, 0, trace_->alpha);
    return from_boundary_jet(std::move(zero), side_, {cplx(0.0)});
  }
  WhitneyJet sub = subjet(*trace_, j);
  std::vector<cplx> vinf(static_cast<size_t>(sub.k) + 1);
  for (int m = 0; m <= sub.k; ++m) vinf[m] = falling(m + j, j) * values_at_infinity_[m + j];
  return from_boundary_jet(std::move(sub), side_, std::move(vinf));
}

std::vector<cplx> components_from_derivatives(std::span<const cplx> dbar_values, cplx z) {
  const int k = static_cast<int>(dbar_values.size()) - 1;
  if (k < 0) throw ConfigError("need at least the j = 0 derivative value");
  const cplx zbar = std::conj(z);
  std::vector<cplx> out(static_cast<size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    cplx acc = 0.0;
    cplx zpow = 1.0;
    for (int j = m; j <= k; ++j) {
      const double w = ((j - m) % 2 == 0 ? 1.0 : -1.0) / (factorial_d(j - m) * factorial_d(m));
      acc += w * dbar_values[j] * zpow;
      zpow *= zbar;
    }
    out[m] = acc;
  }
  return out;
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational alt_binom_sum(int k, int m) {
  if (m < 0 || m > k) throw DomainError("alt_binom_sum requires 0 <= m <= k");
  if (k > 19) throw DomainError("alt_binom_sum overflows 64-bit rationals beyond k = 19");
  // Work over the common denominator (k+1)!.
  const long long den = factorial_ll(k + 1);
  long long num = 0;
  for (int j = m; j <= k; ++j) {
    const long long term = den / (factorial_ll(j - m) * factorial_ll(k + 1 - j));
    num += (j - m) % 2 == 0 ? term : -term;
  }
  const Rational lhs = make_rational(num, den);
  const long long sgn = (k + 1 - m) % 2 == 0 ? 1 : -1;
  const Rational rhs = make_rational(-sgn, factorial_ll(k + 1 - m));
  if (!(lhs == rhs)) throw std::logic_error("combinatorial identity violated");
  return lhs;
}

cplx transform_eval(const WhitneyJet& f, cplx z) {
  const auto& curve = *f.curve;
  check_off_band(curve, z);
  const int n = curve.size();
  const auto& pts = curve.points();
  const auto& tang = curve.tangents();
  const cplx norm(0.0, -1.0 / n);  // (1/2 pi i)(2 pi / N)
  cplx acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx u = std::conj(z - pts[j]);
    cplx numerator = 0.0;
    cplx upow = 1.0;
    double fact = 1.0;
    for (int m = 0; m <= f.k; ++m) {
      numerator += f.rows[m][j] * upow / fact;
      upow *= u;
      fact *= static_cast<double>(m + 1);
    }
    acc += numerator * tang[j] / (pts[j] - z);
  }
  return acc * norm;
}

cplx cauchy_transform(const WhitneyJet& f, cplx z, Side side,
                      const std::vector<cplx>* values_at_infinity) {
  const PointClass cls = f.curve->classify(z);
  if (cls == PointClass::NearBoundary) check_off_band(*f.curve, z);
  if (side == Side::Plus && cls != PointClass::Interior)
    throw DomainError("interior representation requested at a non-interior point");
  if (side == Side::Minus && cls != PointClass::Exterior)
    throw DomainError("exterior representation requested at a non-exterior point");

  if (side == Side::Plus) return transform_eval(f, z);

  cplx value = -transform_eval(f, z);
  if (values_at_infinity != nullptr) {
    if (values_at_infinity->size() != static_cast<size_t>(f.k) + 1)
      throw ConfigError("need one value at infinity per analytic component");
    value += powers_sum(*values_at_infinity, std::conj(z));
  }
  return value;
}

std::vector<std::vector<cplx>> boundary_limits(const WhitneyJet& f, Side side) {
  const WhitneyJet s = apply_sk(f);
  const double sign = side == Side::Plus ? 1.0 : -1.0;
  std::vector<std::vector<cplx>> out(f.rows.size());
  for (size_t j = 0; j < f.rows.size(); ++j) {
    out[j].resize(f.rows[j].size());
    for (size_t i = 0; i < f.rows[j].size(); ++i)
      out[j][i] = 0.5 * (sign * f.rows[j][i] + s.rows[j][i]);
  }
  return out;
}

std::vector<cplx> boundary_limit(const WhitneyJet& f, int j, Side side) {
  if (j < 0 || j > f.k) throw DomainError("boundary_limit row out of range");
  return boundary_limits(f, side)[j];
}

JumpSolution solve_jump_problem(const WhitneyJet& f) {
  const WhitneyJet s = apply_sk(f);
  JumpSolution sol;
  sol.plus_trace.resize(f.rows.size());
  sol.minus_trace.resize(f.rows.size());
  std::vector<std::vector<cplx>> plus_rows(f.rows.size()), minus_rows(f.rows.size());
  double residual = 0.0;
  for (size_t j = 0; j < f.rows.size(); ++j) {
    const size_t n = f.rows[j].size();
    sol.plus_trace[j].resize(n);
    sol.minus_trace[j].resize(n);
    plus_rows[j].resize(n);
    minus_rows[j].resize(n);
    for (size_t i = 0; i < n; ++i) {
      const cplx plus = 0.5 * (f.rows[j][i] + s.rows[j][i]);
      const cplx minus = 0.5 * (-f.rows[j][i] + s.rows[j][i]);
      // Each restriction of the transform is exactly the function whose own
      // boundary jet is the corresponding one-sided limit.
      sol.plus_trace[j][i] = plus;
      sol.minus_trace[j][i] = minus;
      plus_rows[j][i] = plus;
      minus_rows[j][i] = minus;
      residual = std::max(residual, std::abs(plus - minus - f.rows[j][i]));
    }
  }
  sol.max_jump_residual = residual;
  sol.plus = PolyanalyticFn::from_boundary_jet(
      WhitneyJet{f.k, f.alpha, f.curve, std::move(plus_rows)}, Side::Plus);
  sol.minus = PolyanalyticFn::from_boundary_jet(
      WhitneyJet{f.k, f.alpha, f.curve, std::move(minus_rows)}, Side::Minus);
  return sol;
}

WhitneyJet jet_from_polyanalytic(const PolyanalyticFn& F, CurvePtr curve, int k, double alpha) {
  if (!F.exact()) throw DomainError("jet_from_polyanalytic needs an exact-mode function");
  if (F.order() > k + 1) throw DomainError("polyanalytic order exceeds jet order k+1");
  std::vector<std::vector<cplx>> rows;
  rows.reserve(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const PolyanalyticFn d = F.dbar(j);
    std::vector<cplx> row(curve->size());
    for (int i = 0; i < curve->size(); ++i) row[i] = d.evaluate(curve->points()[i]);
    rows.push_back(std::move(row));
  }
  return make_jet(std::move(curve), k, alpha, std::move(rows));
}

}  // namespace polyhardy
