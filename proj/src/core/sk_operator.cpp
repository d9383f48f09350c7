#include "core/sk_operator.hpp"

#include <algorithm>
#include <cmath>

#include "core/laurent.hpp"
#include "core/parallel.hpp"
#include "core/spectral.hpp"

namespace polyhardy {

namespace {

void check_samples(const CurveDiscretization& curve, std::span<const cplx> samples) {
  if (samples.size() != static_cast<size_t>(curve.size()))
    throw ConfigError("sample count must equal the curve node count");
  for (const auto& v : samples)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("non-finite samples");
}

/* One output row of S_k.  rows[0] is the data row carrying the PV kernel
   1/(zeta - t); rows[m], m >= 1, enter through the smooth kernel factor
   conj(t - zeta)^m / m!.  Subtracting rows[0](t) from the whole numerator
   leaves a smooth integrand whose diagonal value is

     d/ds[rows[0]](s_i) / gamma'(s_i) - conj(gamma'(s_i))/gamma'(s_i) rows[1](t_i)

   (the m >= 2 kernel factors vanish to second order on the diagonal), while
   the subtracted term contributes rows[0](t) back via PV \oint dzeta/(zeta-t)
   = pi i. */
std::vector<cplx> sk_row_quadrature(const CurveDiscretization& curve,
                                    std::span<const std::vector<cplx>* const> rows) {
  const int n = curve.size();
  const auto& pts = curve.points();
  const auto& tang = curve.tangents();
  const auto& g0 = *rows[0];
  const int nterms = static_cast<int>(rows.size());

  const std::vector<cplx> dg0 = periodic_derivative(g0);
  std::vector<cplx> out(n);
  const cplx norm(0.0, -2.0 / n);  // (1/pi i)(2 pi / N)

  parallel_for(n, [&](int i) {
    const cplx t = pts[i];
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const cplx u = std::conj(t - pts[j]);
      cplx numerator = 0.0;
      cplx upow = 1.0;
      double fact = 1.0;
      for (int m = 0; m < nterms; ++m) {
        numerator += (*rows[m])[j] * upow / fact;
        upow *= u;
        fact *= static_cast<double>(m + 1);
      }
      acc += (numerator - g0[i]) * tang[j] / (pts[j] - t);
    }
    // Diagonal integrand limit, already multiplied by the Jacobian gamma'.
    cplx diag = dg0[i];
    if (nterms > 1) diag -= std::conj(tang[i]) * (*rows[1])[i];
    acc += diag;
    out[i] = acc * norm + g0[i];
  });
  return out;
}

}  // namespace

std::vector<cplx> pv_cauchy(const CurveDiscretization& curve, std::span<const cplx> samples) {
  check_samples(curve, samples);
  std::vector<cplx> row(samples.begin(), samples.end());
  const std::vector<cplx>* view[] = {&row};
  return sk_row_quadrature(curve, view);
}

WhitneyJet apply_sk(const WhitneyJet& f) {
  for (const auto& row : f.rows) check_samples(*f.curve, row);
  std::vector<std::vector<cplx>> out(f.rows.size());
  for (int j2 = 0; j2 <= f.k; ++j2) {
    std::vector<const std::vector<cplx>*> view;
    view.reserve(f.k - j2 + 1);
    for (int p = j2; p <= f.k; ++p) view.push_back(&f.rows[p]);
    out[j2] = sk_row_quadrature(*f.curve, view);
  }
  return WhitneyJet{f.k, f.alpha, f.curve, std::move(out)};
}

namespace {

WhitneyJet combine(const WhitneyJet& f, const WhitneyJet& s, double sign) {
  WhitneyJet out = f;
  for (size_t j = 0; j < out.rows.size(); ++j)
    for (size_t i = 0; i < out.rows[j].size(); ++i)
      out.rows[j][i] = 0.5 * (f.rows[j][i] + sign * s.rows[j][i]);
  return out;
}

}  // namespace

WhitneyJet p_plus(const WhitneyJet& f) { return combine(f, apply_sk(f), +1.0); }

WhitneyJet p_minus(const WhitneyJet& f) { return combine(f, apply_sk(f), -1.0); }

HardySplit hardy_split(const WhitneyJet& f) {
  const WhitneyJet s = apply_sk(f);
  const WhitneyJet s2 = apply_sk(s);
  HardySplit split{combine(f, s, +1.0), combine(f, s, -1.0), 0.0, sup_distance(s2, f)};
  split.reconstruction_error = sup_distance(jet_add(split.plus, split.minus), f);
  return split;
}

std::optional<double> oracle_gap(const WhitneyJet& f) {
  if (!f.curve->is_unit_circle()) return std::nullopt;
  double scale = sup_norm(f);
  LaurentJet exact = zero_laurent_jet(f.k);
  for (int j = 0; j <= f.k; ++j) {
    auto p = laurent_from_unit_circle_samples(f.rows[j], 1e-13 * (1.0 + scale));
    if (!p) return std::nullopt;
    exact.rows[j] = std::move(*p);
  }
  const WhitneyJet oracle = sample_laurent_jet(sk_exact_circle(exact), f.curve, f.alpha);
  return sup_distance(apply_sk(f), oracle);
}

}  // namespace polyhardy
