#include "core/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace polyhardy {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex g_plan_mutex;

void dft(std::vector<cplx>& data, int sign) {
  const int n = static_cast<int>(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    fftw_destroy_plan(plan);
  }
}

}  // namespace

std::vector<cplx> periodic_derivative(std::span<const cplx> samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 2 || n % 2 != 0) throw ConfigError("periodic_derivative requires an even sample count");
  std::vector<cplx> hat(samples.begin(), samples.end());
  dft(hat, FFTW_FORWARD);
  for (int j = 0; j < n; ++j) {
    int kappa = j <= n / 2 ? j : j - n;
    if (j == n / 2) kappa = 0;  // Nyquist convention
    hat[j] *= cplx(0.0, static_cast<double>(kappa));
  }
  dft(hat, FFTW_BACKWARD);
  for (auto& v : hat) v /= static_cast<double>(n);
  return hat;
}

std::optional<LaurentPoly> laurent_from_unit_circle_samples(std::span<const cplx> samples,
                                                            double drop_tol) {
  const int n = static_cast<int>(samples.size());
  if (n < 2 || n % 2 != 0) throw ConfigError("even sample count required");
  std::vector<cplx> hat(samples.begin(), samples.end());
  dft(hat, FFTW_FORWARD);
  LaurentPoly p;
  for (int j = 0; j < n; ++j) {
    const int exponent = j <= n / 2 ? j : j - n;
    const cplx c = hat[j] / static_cast<double>(n);
    if (std::abs(c) <= drop_tol) continue;
    if (std::abs(exponent) > LaurentPoly::kMaxExponent) return std::nullopt;
    p.add_term(exponent, c);
  }
  return p;
}

}  // namespace polyhardy
