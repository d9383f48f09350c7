#include "core/whitney_jet.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace polyhardy {

WhitneyJet make_jet(CurvePtr curve, int k, double alpha,
                    std::vector<std::vector<cplx>> rows) {
  if (!curve) throw ConfigError("jet needs a curve");
  if (k < 0) throw ConfigError("jet order must be nonnegative");
  if (!(alpha > 0.0) || alpha > 1.0) throw ConfigError("alpha must lie in (0, 1]");
  if (rows.size() != static_cast<size_t>(k) + 1)
    throw ConfigError("jet needs exactly k+1 component rows");
  for (const auto& row : rows) {
    if (row.size() != static_cast<size_t>(curve->size()))
      throw ConfigError("jet row length must equal the curve node count");
    for (const auto& v : row)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("jet values must be finite");
  }
  return WhitneyJet{k, alpha, std::move(curve), std::move(rows)};
}

WhitneyJet zero_jet(CurvePtr curve, int k, double alpha) {
  if (!curve) throw ConfigError("jet needs a curve");
  std::vector<std::vector<cplx>> rows(static_cast<size_t>(k) + 1,
                                      std::vector<cplx>(curve->size(), cplx(0.0)));
  return make_jet(std::move(curve), k, alpha, std::move(rows));
}

WhitneyJet sample_laurent_jet(const LaurentJet& jet, CurvePtr curve, double alpha) {
  if (!curve) throw ConfigError("jet needs a curve");
  std::vector<std::vector<cplx>> rows;
  rows.reserve(jet.rows.size());
  for (const auto& p : jet.rows) rows.push_back(sample(p, curve->points()));
  return make_jet(std::move(curve), jet.k, alpha, std::move(rows));
}

WhitneyJet subjet(const WhitneyJet& f, int j2) {
  if (j2 < 0 || j2 > f.k) throw DomainError("subjet index out of range");
  std::vector<std::vector<cplx>> rows(f.rows.begin() + j2, f.rows.end());
  return WhitneyJet{f.k - j2, f.alpha, f.curve, std::move(rows)};
}

double compatibility_residual(const WhitneyJet& f,
                              std::span<const std::pair<int, int>> pairs) {
  const auto& pts = f.curve->points();
  const int n = f.curve->size();
  double residual = 0.0;
  int skipped = 0;
  for (const auto& [i1, i2] : pairs) {
    if (i1 < 0 || i1 >= n || i2 < 0 || i2 >= n)
      throw DomainError("compatibility pair index out of range");
    const cplx t = pts[i1], tau = pts[i2];
    if (t == tau) {
      ++skipped;
      continue;
    }
    const cplx u = std::conj(t - tau);
    const double dist = std::abs(t - tau);
    for (int j2 = 0; j2 <= f.k; ++j2) {
      cplx taylor = 0.0;
      cplx upow = 1.0;
      double fact = 1.0;
      for (int l = 0; l <= f.k - j2; ++l) {
        taylor += f.rows[j2 + l][i2] * upow / fact;
        upow *= u;
        fact *= static_cast<double>(l + 1);
      }
      const double rem = std::abs(f.rows[j2][i1] - taylor);
      residual = std::max(residual, rem / std::pow(dist, f.k + f.alpha - j2));
    }
  }
  if (skipped > 0)
    std::cerr << "compatibility_residual: skipped " << skipped << " coincident pair(s)\n";
  return residual;
}

void require_same_geometry(const WhitneyJet& a, const WhitneyJet& b) {
  if (a.k != b.k) throw DomainError("jet order mismatch");
  if (a.curve.get() != b.curve.get() && !a.curve->same_discretization(*b.curve))
    throw DomainError("jets live on different discretizations");
}

WhitneyJet jet_add(const WhitneyJet& a, const WhitneyJet& b) {
  require_same_geometry(a, b);
  WhitneyJet out = a;
  for (size_t j = 0; j < out.rows.size(); ++j)
    for (size_t i = 0; i < out.rows[j].size(); ++i) out.rows[j][i] += b.rows[j][i];
  return out;
}

WhitneyJet jet_scale(const WhitneyJet& a, cplx s) {
  WhitneyJet out = a;
  for (auto& row : out.rows)
    for (auto& v : row) v *= s;
  return out;
}

double sup_norm(const WhitneyJet& f) {
  double m = 0.0;
  for (const auto& row : f.rows)
    for (const auto& v : row) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const WhitneyJet& a, const WhitneyJet& b) {
  require_same_geometry(a, b);
  double m = 0.0;
  for (size_t j = 0; j < a.rows.size(); ++j)
    for (size_t i = 0; i < a.rows[j].size(); ++i)
      m = std::max(m, std::abs(a.rows[j][i] - b.rows[j][i]));
  return m;
}

}  // namespace polyhardy
