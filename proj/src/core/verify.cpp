#include "core/verify.hpp"

#include <algorithm>
#include <cmath>

#include "core/builtin.hpp"
#include "core/polyanalytic.hpp"
#include "core/sk_operator.hpp"

namespace polyhardy {

namespace {

constexpr int kJetCount = 20;
constexpr int kRandomExponent = 8;
constexpr int kRandomTerms = 6;

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9e3779b97f4a7c15ULL + salt; }

PropertyResult result(std::string name, double defect, double threshold, std::string note = {}) {
  const bool pass = defect <= threshold;
  return PropertyResult{std::move(name), defect, threshold, pass, std::move(note)};
}

// One random jet per (index, k); the Laurent rows double as the exact oracle
// input when the curve is the unit circle.
struct Corpus {
  std::vector<LaurentJet> laurent;
  std::vector<WhitneyJet> jets;
};

Corpus make_corpus(const VerifyConfig& cfg) {
  Corpus c;
  std::uint64_t state = mix(cfg.seed, 1);
  for (int i = 0; i < kJetCount; ++i) {
    const int k = i % (cfg.max_k + 1);
    c.laurent.push_back(random_laurent_jet(state, k, kRandomExponent, kRandomTerms));
    c.jets.push_back(sample_laurent_jet(c.laurent.back(), cfg.curve));
  }
  return c;
}

PropertyResult involution_quadrature(const VerifyConfig& cfg, const Corpus& corpus, double tol) {
  double defect = 0.0;
  for (const auto& f : corpus.jets) defect = std::max(defect, hardy_split(f).involution_defect);
  return result("involution-quadrature", defect, tol, "sup |S_k^2 f - f| over the random corpus");
}

PropertyResult involution_oracle(const VerifyConfig& cfg, const Corpus& corpus) {
  double defect = 0.0;
  for (const auto& jet : corpus.laurent)
    defect = std::max(defect, jet_coeff_distance(sk_exact_circle(sk_exact_circle(jet)), jet));
  (void)cfg;
  return result("involution-oracle", defect, 1e-13,
                "coefficient-map distance of the exact circle oracle");
}

PropertyResult projection_algebra(const VerifyConfig& cfg, const Corpus& corpus, double tol) {
  double defect = 0.0;
  (void)cfg;
  for (const auto& f : corpus.jets) {
    const WhitneyJet plus = p_plus(f);
    const WhitneyJet minus = p_minus(f);
    defect = std::max(defect, sup_distance(p_plus(plus), plus));
    defect = std::max(defect, sup_distance(p_minus(minus), minus));
    defect = std::max(defect, sup_norm(p_minus(plus)));
  }
  return result("projection-algebra", defect, tol,
                "idempotence and annihilation of the Plemelj projections");
}

PropertyResult projection_identity(const Corpus& corpus) {
  double defect = 0.0;
  for (const auto& f : corpus.jets) {
    const HardySplit split = hardy_split(f);
    defect = std::max(defect, split.reconstruction_error);
  }
  return result("projection-identity", defect, 1e-13, "P+ + P- = I at roundoff level");
}

PropertyResult lemma1_grid(const VerifyConfig& cfg) {
  std::uint64_t state = mix(cfg.seed, 2);
  double defect = 0.0;
  auto draw_unit = [&state] {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const double angle = 2.0 * kPi * static_cast<double>(z >> 11) * 0x1.0p-53;
    return std::polar(1.0, angle);
  };
  for (int pair = 0; pair < 50; ++pair) {
    cplx t = draw_unit(), tau = draw_unit();
    while (std::abs(t - tau) < 1e-6) tau = draw_unit();
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n) defect = std::max(defect, std::abs(lemma1_value(m, n, t, tau)));
  }
  return result("lemma1-grid", defect, 1e-13, "two-pole PV/FP integrals, 1 <= m,n <= 6");
}

PropertyResult comb_identity_grid() {
  double defect = 0.0;
  for (int k = 0; k <= 10; ++k)
    for (int m = 0; m <= k; ++m) {
      try {
        (void)alt_binom_sum(k, m);  // throws if the identity fails
      } catch (const std::exception&) {
        defect = 1.0;
      }
    }
  return result("comb-identity-grid", defect, 0.5, "exact rational identity, k <= 10");
}

PropertyResult oracle_equivalence(const VerifyConfig& cfg, double tol) {
  // Pinned to the unit circle: the residue oracle lives there.
  CurvePtr circle = make_circle(0.0, 1.0, cfg.n);
  std::uint64_t state = mix(cfg.seed, 3);
  double defect = 0.0;
  for (int k = 0; k <= cfg.max_k; ++k) {
    const LaurentJet data = random_laurent_jet(state, k, kRandomExponent, kRandomTerms);
    const WhitneyJet f = sample_laurent_jet(data, circle);
    const WhitneyJet exact = sample_laurent_jet(sk_exact_circle(data), circle);
    defect = std::max(defect, sup_distance(apply_sk(f), exact));
  }
  return result("oracle-equivalence", defect, tol, "quadrature S_k vs exact circle oracle");
}

double oracle_error_at(const LaurentJet& data, int n) {
  CurvePtr circle = make_circle(0.0, 1.0, n);
  const WhitneyJet f = sample_laurent_jet(data, circle);
  const WhitneyJet exact = sample_laurent_jet(sk_exact_circle(data), circle);
  return sup_distance(apply_sk(f), exact);
}

PropertyResult spectral_decay() {
  // Fixed data with bandwidth ~20 so that N = 32 aliases badly while N = 128
  // resolves the operator exactly.
  LaurentJet data = zero_laurent_jet(2);
  data.rows[0] = LaurentPoly::monomial(20) + LaurentPoly::monomial(-20) + LaurentPoly::monomial(2);
  data.rows[1] = LaurentPoly::monomial(19) + LaurentPoly::monomial(-17, 0.8);
  data.rows[2] = LaurentPoly::monomial(18) + LaurentPoly::monomial(-15, 0.5);
  const double coarse = oracle_error_at(data, 32);
  const double fine = oracle_error_at(data, 128);
  const double ratio = coarse > 0.0 ? fine / coarse : 0.0;
  return result("spectral-decay", ratio, 1e-4,
                "error(N=128) / error(N=32) against the oracle on fixed data");
}

PropertyResult jump_identity(const VerifyConfig& cfg, double tol) {
  double defect = 0.0;
  std::string note = "per-node jump residual of the built-in data";
  const int k = std::min(cfg.max_k, 2);
  for (const auto& id : builtin_ids()) {
    try {
      const BuiltinJet data = builtin_jet(id, cfg.curve, k, cfg.seed);
      defect = std::max(defect, solve_jump_problem(data.jet).max_jump_residual);
    } catch (const DomainError& e) {
      note = std::string("builtin unavailable on this curve: ") + e.what();
      defect = std::numeric_limits<double>::infinity();
    }
  }
  return result("jump-identity", defect, tol, note);
}

}  // namespace

std::vector<PropertyResult> run_verification(const VerifyConfig& cfg_in) {
  VerifyConfig cfg = cfg_in;
  if (!cfg.curve) cfg.curve = make_circle(0.0, 1.0, cfg.n);
  const Corpus corpus = make_corpus(cfg);
  const double quad_tol = cfg.tol_override.value_or(1e-8);
  const double oracle_tol = cfg.tol_override.value_or(1e-10);
  const double jump_tol = cfg.tol_override.value_or(1e-9);

  std::vector<PropertyResult> out;
  out.push_back(involution_quadrature(cfg, corpus, quad_tol));
  out.push_back(involution_oracle(cfg, corpus));
  out.push_back(projection_algebra(cfg, corpus, quad_tol));
  out.push_back(projection_identity(corpus));
  out.push_back(lemma1_grid(cfg));
  out.push_back(comb_identity_grid());
  out.push_back(oracle_equivalence(cfg, oracle_tol));
  out.push_back(spectral_decay());
  out.push_back(jump_identity(cfg, jump_tol));
  return out;
}

bool all_pass(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.pass; });
}

json verification_report(const VerifyConfig& cfg, const std::vector<PropertyResult>& results) {
  json props = json::array();
  for (const auto& r : results)
    props.push_back(json{{"name", r.name},
                         {"defect", r.defect},
                         {"threshold", r.threshold},
                         {"pass", r.pass},
                         {"note", r.note}});
  json config{{"k", cfg.max_k}, {"N", cfg.n}, {"seed", cfg.seed}};
  config["curve"] = cfg.curve ? curve_to_json(*cfg.curve) : curve_to_json(*make_circle(0.0, 1.0, cfg.n));
  if (cfg.tol_override)
    config["tol"] = *cfg.tol_override;
  else
    config["tol"] = nullptr;
  return json{{"config", std::move(config)}, {"properties", std::move(props)},
              {"all_pass", all_pass(results)}};
}

}  // namespace polyhardy
