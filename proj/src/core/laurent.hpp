#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace polyhardy {

// Finite Laurent series sum_n c_n t^n with complex coefficients, the exact
// test-function class on the unit circle.  Canonical form: exact-zero
// coefficients are never stored.  Exponents are capped at |n| <= kMaxExponent
// to bound coefficient blowup in products.
class LaurentPoly {
 public:
  static constexpr int kMaxExponent = 64;

  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, cplx> coeffs);

  static LaurentPoly monomial(int exponent, cplx coeff = 1.0);
  static LaurentPoly constant(cplx value);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const;  // requires a nonzero polynomial
  int max_exponent() const;
  cplx coeff(int n) const;
  const std::map<int, cplx>& coeffs() const { return coeffs_; }

  // Adds c * t^n, pruning the term if the sum cancels exactly.
  void add_term(int n, cplx c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(cplx s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, cplx s) { return a *= s; }
  friend LaurentPoly operator*(cplx s, LaurentPoly a) { return a *= s; }

 private:
  static void check_exponent(int n);
  std::map<int, cplx> coeffs_;
};

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }

// t^d * p
LaurentPoly shift(const LaurentPoly& p, int d);
// d/dt
LaurentPoly derivative(const LaurentPoly& p);
// conj(p(t)) as a function on |t| = 1: conjugate coefficients, negate exponents.
LaurentPoly conj_on_circle(const LaurentPoly& p);

cplx eval(const LaurentPoly& p, cplx z);
std::vector<cplx> sample(const LaurentPoly& p, std::span<const cplx> points);

// max over exponents of |coeff(p) - coeff(q)|
double coeff_distance(const LaurentPoly& p, const LaurentPoly& q);
double coeff_norm(const LaurentPoly& p);

// d/dzbar of the canonical extension off the circle in which negative
// exponents are conjugate powers (t^{-m} stands for zbar^m, since tbar = 1/t
// on |t| = 1) and nonnegative exponents are analytic.  Restricted back to the
// circle: c_n t^n -> (-n) c_n t^{n+1} for n < 0, analytic terms drop.
LaurentPoly dbar_on_circle(const LaurentPoly& p);

// Fourier-multiplier form of the principal-value Cauchy singular operator on
// the unit circle, (1/pi i) PV \oint p(zeta)/(zeta - t) dzeta:
// c_n -> +c_n for n >= 0 and c_n -> -c_n for n < 0.
LaurentPoly cauchy_multiplier(const LaurentPoly& p);

// Exact counterpart of a Whitney jet on the unit circle: rows[n] is the
// boundary trace of dbar^n F as a Laurent polynomial, 0 <= n <= k.
struct LaurentJet {
  int k = 0;
  std::vector<LaurentPoly> rows;  // size k+1
};

LaurentJet make_laurent_jet(int k, std::vector<LaurentPoly> rows);
LaurentJet zero_laurent_jet(int k);

// Traces of dbar^j F on |t| = 1 for F(z) = sum_m F_m(z) zbar^m with Laurent
// analytic components F_m; components beyond k+1 are rejected.
LaurentJet laurent_jet_from_components(const std::vector<LaurentPoly>& components, int k);

LaurentJet jet_add(const LaurentJet& a, const LaurentJet& b);
LaurentJet jet_scale(const LaurentJet& a, cplx s);
double jet_coeff_distance(const LaurentJet& a, const LaurentJet& b);

// Exact (residue-calculus) application of S_k to unit-circle Laurent data:
// the (0,j2) rows of S_k f, again as a LaurentJet.
LaurentJet sk_exact_circle(const LaurentJet& jet);

// The full collection { [S_k f]^(j1,j2), j1+j2 <= k } on the unit circle,
// with the kernels (zeta-t)^{j1+1}, j1 >= 1, taken as Hadamard finite parts
// (the (m-1)-th t-derivative of the PV value divided by (m-1)!).
std::map<std::pair<int, int>, LaurentPoly> sk_full_jet_circle(const LaurentJet& jet);

// (1/pi i) \oint dzeta / ((zeta-t)^m (zeta-tau)^n) for |t| = |tau| = 1,
// t != tau, computed from the simple-pole partial-fraction coefficients
// (higher-order poles have vanishing finite part on the circle).  The exact
// value is 0; the returned number measures the cancellation.
cplx lemma1_value(int m, int n, cplx t, cplx tau);

// Small exact-integer helpers shared by the residue calculus.
double factorial_d(int n);
double binom_d(int n, int r);

}  // namespace polyhardy
