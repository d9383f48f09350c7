#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/laurent.hpp"
#include "core/types.hpp"

namespace polyhardy {

// Derivative of 2pi-periodic equispaced samples by Fourier multiplier i*kappa
// (Nyquist mode zeroed).  Requires an even sample count.
std::vector<cplx> periodic_derivative(std::span<const cplx> samples);

// Trigonometric interpolant of samples on the equispaced unit-circle nodes as
// a Laurent polynomial with exponents in (-N/2, N/2].  Coefficients below
// drop_tol are pruned; returns nullopt if a non-negligible coefficient falls
// outside the LaurentPoly exponent guard.
std::optional<LaurentPoly> laurent_from_unit_circle_samples(std::span<const cplx> samples,
                                                            double drop_tol);

}  // namespace polyhardy
