#include "core/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyhardy {

namespace {

cplx pow_int(cplx z, int p) {
  if (p == 0) return 1.0;
  const int q = p > 0 ? p : -p;
  cplx acc = z;
  for (int i = 1; i < q; ++i) acc *= z;
  return p > 0 ? acc : 1.0 / acc;
}

// b (b-1) ... (b-q+1), exact for the small arguments used here.
double falling(int b, int q) {
  double acc = 1.0;
  for (int i = 0; i < q; ++i) acc *= static_cast<double>(b - i);
  return acc;
}

}  // namespace

double factorial_d(int n) {
  double acc = 1.0;
  for (int i = 2; i <= n; ++i) acc *= static_cast<double>(i);
  return acc;
}

double binom_d(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  r = std::min(r, n - r);
  double acc = 1.0;
  for (int i = 0; i < r; ++i) acc = acc * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return std::round(acc);
}

void LaurentPoly::check_exponent(int n) {
  if (n > kMaxExponent || n < -kMaxExponent) {
    std::ostringstream os;
    os << "laurent exponent " << n << " exceeds guard |n| <= " << kMaxExponent;
    throw DomainError(os.str());
  }
}

LaurentPoly::LaurentPoly(std::map<int, cplx> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    check_exponent(it->first);
    if (it->second == cplx(0.0)) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentPoly LaurentPoly::monomial(int exponent, cplx coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::constant(cplx value) { return monomial(0, value); }

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw DomainError("min_exponent of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw DomainError("max_exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

cplx LaurentPoly::coeff(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx(0.0) : it->second;
}

void LaurentPoly::add_term(int n, cplx c) {
  if (c == cplx(0.0)) return;
  check_exponent(n);
  auto [it, inserted] = coeffs_.emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [n, c] : rhs.coeffs_) add_term(n, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [n, c] : rhs.coeffs_) add_term(n, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  if (s == cplx(0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [n, c] : coeffs_) c *= s;
  return *this;
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [n, ca] : a.coeffs())
    for (const auto& [m, cb] : b.coeffs()) out.add_term(n + m, ca * cb);
  return out;
}

LaurentPoly shift(const LaurentPoly& p, int d) {
  LaurentPoly out;
  for (const auto& [n, c] : p.coeffs()) out.add_term(n + d, c);
  return out;
}

LaurentPoly derivative(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [n, c] : p.coeffs())
    if (n != 0) out.add_term(n - 1, static_cast<double>(n) * c);
  return out;
}

LaurentPoly conj_on_circle(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [n, c] : p.coeffs()) out.add_term(-n, std::conj(c));
  return out;
}

cplx eval(const LaurentPoly& p, cplx z) {
  if (p.is_zero()) return 0.0;
  const int lo = p.min_exponent();
  const int hi = p.max_exponent();
  if (lo < 0 && z == cplx(0.0)) throw DomainError("laurent eval at 0 with negative exponents");
  // Horner on the shifted polynomial t^{-lo} p(t), then restore t^{lo}.
  cplx acc = 0.0;
  for (int n = hi; n >= lo; --n) acc = acc * z + p.coeff(n);
  return acc * pow_int(z, lo);
}

std::vector<cplx> sample(const LaurentPoly& p, std::span<const cplx> points) {
  std::vector<cplx> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) out[i] = eval(p, points[i]);
  return out;
}

double coeff_distance(const LaurentPoly& p, const LaurentPoly& q) {
  double d = 0.0;
  for (const auto& [n, c] : p.coeffs()) d = std::max(d, std::abs(c - q.coeff(n)));
  for (const auto& [n, c] : q.coeffs()) d = std::max(d, std::abs(c - p.coeff(n)));
  return d;
}

double coeff_norm(const LaurentPoly& p) {
  double d = 0.0;
  for (const auto& [n, c] : p.coeffs()) {
    (void)n;
    d = std::max(d, std::abs(c));
  }
  return d;
}

LaurentPoly dbar_on_circle(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [n, c] : p.coeffs())
    if (n < 0) out.add_term(n + 1, static_cast<double>(-n) * c);
  return out;
}

LaurentPoly cauchy_multiplier(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [n, c] : p.coeffs()) out.add_term(n, n >= 0 ? c : -c);
  return out;
}

LaurentJet make_laurent_jet(int k, std::vector<LaurentPoly> rows) {
  if (k < 0) throw ConfigError("jet order must be nonnegative");
  if (rows.size() != static_cast<size_t>(k) + 1)
    throw ConfigError("laurent jet needs exactly k+1 rows");
  return LaurentJet{k, std::move(rows)};
}

LaurentJet zero_laurent_jet(int k) {
  return make_laurent_jet(k, std::vector<LaurentPoly>(static_cast<size_t>(k) + 1));
}

LaurentJet laurent_jet_from_components(const std::vector<LaurentPoly>& components, int k) {
  if (components.size() > static_cast<size_t>(k) + 1)
    throw DomainError("polyanalytic order exceeds jet order k+1");
  // dbar^j F = sum_{m>=j} m!/(m-j)! F_m(z) zbar^{m-j}; on |t|=1, zbar^{m-j}
  // is the exponent shift t^{j-m}.
  LaurentJet jet = zero_laurent_jet(k);
  for (int j = 0; j <= k; ++j) {
    for (size_t m = j; m < components.size(); ++m) {
      const double w = falling(static_cast<int>(m), j);
      jet.rows[j] += w * shift(components[m], j - static_cast<int>(m));
    }
  }
  return jet;
}

LaurentJet jet_add(const LaurentJet& a, const LaurentJet& b) {
  if (a.k != b.k) throw DomainError("jet order mismatch");
  LaurentJet out = a;
  for (int j = 0; j <= a.k; ++j) out.rows[j] += b.rows[j];
  return out;
}

LaurentJet jet_scale(const LaurentJet& a, cplx s) {
  LaurentJet out = a;
  for (auto& row : out.rows) row *= s;
  return out;
}

double jet_coeff_distance(const LaurentJet& a, const LaurentJet& b) {
  if (a.k != b.k) throw DomainError("jet order mismatch");
  double d = 0.0;
  for (int j = 0; j <= a.k; ++j) d = std::max(d, coeff_distance(a.rows[j], b.rows[j]));
  return d;
}

/* On |t| = |zeta| = 1 the kernel collapses to a rational function of zeta:

     conj(t - zeta) = 1/t - 1/zeta = (zeta - t)/(t zeta),

   so for n >= 1

     conj(t - zeta)^n / (zeta - t) = (zeta - t)^{n-1} / (t^n zeta^n)

   has no pole on the contour and (1/pi i) \oint picks out twice the zeta^{-1}
   coefficient.  Expanding (zeta - t)^{n-1} binomially, the (0,j2) row of
   S_k f gains, from data row p = j2 + n,

     (2/n!) sum_{r=0}^{n-1} C(n-1,r) (-1)^{n-1-r} c_{n-1-r} t^{-1-r},

   where c_a is the coefficient of zeta^a in f^{(0,p)}.  The n = 0 term is the
   plain multiplier +-c_n. */
LaurentJet sk_exact_circle(const LaurentJet& jet) {
  LaurentJet out = zero_laurent_jet(jet.k);
  for (int j2 = 0; j2 <= jet.k; ++j2) {
    LaurentPoly row = cauchy_multiplier(jet.rows[j2]);
    for (int n = 1; n <= jet.k - j2; ++n) {
      const LaurentPoly& f = jet.rows[j2 + n];
      const double inv_fact = 2.0 / factorial_d(n);
      for (int r = 0; r < n; ++r) {
        const double sgn = ((n - 1 - r) % 2 == 0) ? 1.0 : -1.0;
        const cplx c = f.coeff(n - 1 - r);
        row.add_term(-1 - r, inv_fact * binom_d(n - 1, r) * sgn * c);
      }
    }
    out.rows[j2] = std::move(row);
  }
  return out;
}

/* Finite-part table on the circle, for the higher-order kernels
   (zeta - t)^{-m}: differentiating (1/pi i) PV \oint zeta^a/(zeta - t) dzeta
   = sign(a) t^a in t gives

     (1/pi i) FP \oint zeta^a/(zeta-t)^m dzeta
        = sign(a) a(a-1)...(a-m+2)/(m-1)! t^{a-m+1},

   with sign(a) = +1 for a >= 0 and -1 for a < 0. */
static void add_finite_part(LaurentPoly& row, cplx scale, int a, int m, int shift_exp) {
  const double sgn = a >= 0 ? 1.0 : -1.0;
  const double fall = falling(a, m - 1);
  if (fall == 0.0) return;
  row.add_term(a - m + 1 + shift_exp, scale * sgn * fall / factorial_d(m - 1));
}

std::map<std::pair<int, int>, LaurentPoly> sk_full_jet_circle(const LaurentJet& jet) {
  std::map<std::pair<int, int>, LaurentPoly> out;
  for (int j1 = 0; j1 <= jet.k; ++j1) {
    for (int j2 = 0; j1 + j2 <= jet.k; ++j2) {
      LaurentPoly comp;
      for (int p = j2; p <= jet.k; ++p) {
        const int n = p - j2;
        const LaurentPoly& f = jet.rows[p];
        const double pref = factorial_d(j1) / factorial_d(n);
        if (n >= j1 + 1) {
          // (zeta-t)^{n-j1-1}/(t^n zeta^n): polynomial part, residue at 0 only.
          const int d = n - j1 - 1;
          for (int r = 0; r <= d; ++r) {
            const double sgn = ((d - r) % 2 == 0) ? 1.0 : -1.0;
            const cplx c = f.coeff(n - 1 - r);
            comp.add_term(-j1 - 1 - r, 2.0 * pref * binom_d(d, r) * sgn * c);
          }
        } else {
          // On-contour pole of order m = j1+1-n: PV for m = 1, finite part above.
          const int m = j1 + 1 - n;
          for (const auto& [a, c] : f.coeffs()) add_finite_part(comp, pref * c, a - n, m, -n);
        }
      }
      out.emplace(std::make_pair(j1, j2), std::move(comp));
    }
  }
  return out;
}

cplx lemma1_value(int m, int n, cplx t, cplx tau) {
  if (m < 1 || n < 1) throw DomainError("lemma1_value requires m, n >= 1");
  if (std::abs(std::abs(t) - 1.0) > 1e-9 || std::abs(std::abs(tau) - 1.0) > 1e-9)
    throw DomainError("lemma1_value requires unit-modulus points");
  const cplx w = t - tau;
  if (std::abs(w) < 1e-12) throw DomainError("lemma1_value: confluent poles t = tau");
  // Partial fractions: only the simple-pole coefficients A1, B1 survive the
  // finite-part table.  A1 = (1/(m-1)!) d^{m-1}/dzeta^{m-1} (zeta-tau)^{-n} at
  // zeta = t, and symmetrically for B1; (tau-t)^q = (-1)^q (t-tau)^q is used
  // so the shared power cancels exactly.
  const int q = m + n - 1;
  const cplx wq = pow_int(w, q);
  const cplx wq_neg = (q % 2 == 0) ? wq : -wq;
  const cplx a1 = falling(-n, m - 1) / factorial_d(m - 1) / wq;
  const cplx b1 = falling(-m, n - 1) / factorial_d(n - 1) / wq_neg;
  return a1 + b1;
}

}  // namespace polyhardy
