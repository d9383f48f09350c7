#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/whitney_jet.hpp"

namespace polyhardy {

// (1/pi i) PV \oint g(zeta)/(zeta - t_i) dzeta at every node t_i, by
// singularity subtraction with a spectrally differentiated diagonal term.
std::vector<cplx> pv_cauchy(const CurveDiscretization& curve, std::span<const cplx> samples);

// S_k on Whitney jets.  Row j2 of the output is the principal-value integral
// of the kernel-expanded sum over data rows j2..k, with a single subtraction
// point per target.
WhitneyJet apply_sk(const WhitneyJet& f);

// Plemelj projections (I +- S_k)/2.
WhitneyJet p_plus(const WhitneyJet& f);
WhitneyJet p_minus(const WhitneyJet& f);

struct HardySplit {
  WhitneyJet plus;
  WhitneyJet minus;
  double reconstruction_error = 0.0;  // sup |f - (plus + minus)|, roundoff-level
  double involution_defect = 0.0;     // sup |S_k^2 f - f| at this discretization
};

HardySplit hardy_split(const WhitneyJet& f);

// Unit-circle diagnostic: sup distance between quadrature S_k and the exact
// multiplier oracle applied to the trigonometric interpolant of the rows.
// nullopt off the unit circle or when the rows are not representable within
// the Laurent exponent guard.
std::optional<double> oracle_gap(const WhitneyJet& f);

}  // namespace polyhardy
