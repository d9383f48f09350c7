#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/curve.hpp"
#include "core/laurent.hpp"
#include "core/types.hpp"

namespace polyhardy {

// Canonical Whitney data on a discretized curve: only the (0,n) components
// are stored, rows[n][i] = f^(0,n)(gamma(s_i)) for 0 <= n <= k.  These
// determine the full higher-order Lipschitz data; alpha is metadata used by
// the compatibility diagnostic only.
struct WhitneyJet {
  int k = 0;
  double alpha = 1.0;
  CurvePtr curve;
  std::vector<std::vector<cplx>> rows;
};

WhitneyJet make_jet(CurvePtr curve, int k, double alpha, std::vector<std::vector<cplx>> rows);
WhitneyJet zero_jet(CurvePtr curve, int k, double alpha = 1.0);

// Samples each Laurent row at the curve nodes.
WhitneyJet sample_laurent_jet(const LaurentJet& jet, CurvePtr curve, double alpha = 1.0);

// The (0,j2) sub-collection restricted to its determining components: rows
// j2..k of f as a jet of order k - j2.
WhitneyJet subjet(const WhitneyJet& f, int j2);

// Sup over sampled pairs (t, tau) and rows j2 of the normalized Taylor
// remainder along the antiholomorphic direction,
//   |f^(0,j2)(t) - sum_{l<=k-j2} f^(0,j2+l)(tau) conj(t-tau)^l / l!|
//     / |t - tau|^(k+alpha-j2).
// Coincident pairs are skipped (with a note on stderr).
double compatibility_residual(const WhitneyJet& f,
                              std::span<const std::pair<int, int>> pairs);

WhitneyJet jet_add(const WhitneyJet& a, const WhitneyJet& b);
WhitneyJet jet_scale(const WhitneyJet& a, cplx s);
double sup_norm(const WhitneyJet& f);
double sup_distance(const WhitneyJet& a, const WhitneyJet& b);

void require_same_geometry(const WhitneyJet& a, const WhitneyJet& b);

class PolyanalyticFn;
// Boundary data f^(0,j) = dbar^j F on the curve for a polyanalytic F of
// order <= k+1 (exact mode); defined in polyanalytic.cpp.
WhitneyJet jet_from_polyanalytic(const PolyanalyticFn& F, CurvePtr curve, int k,
                                 double alpha = 1.0);

}  // namespace polyhardy
