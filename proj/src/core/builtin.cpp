#include "core/builtin.hpp"

#include <sstream>

#include "core/polyanalytic.hpp"

namespace polyhardy {

namespace {

// splitmix64: tiny, stable across platforms, good enough for test data.
std::uint64_t next_u64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::uint64_t& state, double lo, double hi) {
  const double u = static_cast<double>(next_u64(state) >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int uniform_int(std::uint64_t& state, int lo, int hi) {
  return lo + static_cast<int>(next_u64(state) % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<LaurentPoly> interior_components(int k) {
  std::vector<LaurentPoly> comps;
  for (int m = 0; m <= k; ++m)
    comps.push_back(LaurentPoly::monomial(m + 1, 1.0 / static_cast<double>(m + 1)));
  return comps;
}

std::vector<LaurentPoly> exterior_components(int k) {
  std::vector<LaurentPoly> comps;
  for (int m = 0; m <= k; ++m)
    comps.push_back(LaurentPoly::monomial(-(m + 2), 1.0 / static_cast<double>(m + 1)));
  return comps;
}

BuiltinJet from_components(std::vector<LaurentPoly> comps, CurvePtr curve, int k) {
  BuiltinJet out{jet_from_polyanalytic(PolyanalyticFn::from_components(comps), curve, k),
                 std::nullopt, comps};
  if (curve->is_unit_circle()) out.laurent = laurent_jet_from_components(comps, k);
  return out;
}

}  // namespace

LaurentPoly random_laurent(std::uint64_t& state, int max_exponent, int terms) {
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    const int e = uniform_int(state, -max_exponent, max_exponent);
    p.add_term(e, cplx(uniform(state, -1.0, 1.0), uniform(state, -1.0, 1.0)));
  }
  return p;
}

LaurentJet random_laurent_jet(std::uint64_t& state, int k, int max_exponent, int terms) {
  LaurentJet jet = zero_laurent_jet(k);
  for (auto& row : jet.rows) row = random_laurent(state, max_exponent, terms);
  return jet;
}

std::vector<std::string> builtin_ids() {
  return {"zero", "constant", "interior-poly", "exterior-poly", "mixed-poly", "random"};
}

BuiltinJet builtin_jet(const std::string& id, CurvePtr curve, int k, std::uint64_t seed) {
  if (id == "zero") {
    BuiltinJet out{zero_jet(curve, k), zero_laurent_jet(k), std::vector<LaurentPoly>{}};
    return out;
  }
  if (id == "constant") {
    std::vector<LaurentPoly> comps{LaurentPoly::constant(1.0)};
    return from_components(std::move(comps), std::move(curve), k);
  }
  if (id == "interior-poly") return from_components(interior_components(k), std::move(curve), k);
  if (id == "exterior-poly" || id == "mixed-poly") {
    if (curve->classify(0.0) != PointClass::Interior)
      throw DomainError("builtin \"" + id + "\" needs the origin strictly inside the curve");
    auto comps = exterior_components(k);
    if (id == "mixed-poly") {
      const auto interior = interior_components(k);
      for (int m = 0; m <= k; ++m) comps[m] += interior[m];
    }
    return from_components(std::move(comps), std::move(curve), k);
  }
  if (id == "random") {
    std::uint64_t state = seed;
    LaurentJet rows = random_laurent_jet(state, k, 6, 5);
    BuiltinJet out{sample_laurent_jet(rows, curve), std::nullopt, std::nullopt};
    if (curve->is_unit_circle()) out.laurent = std::move(rows);
    return out;
  }
  std::ostringstream os;
  os << "unknown builtin jet \"" << id << "\"; available:";
  for (const auto& name : builtin_ids()) os << ' ' << name;
  throw ConfigError(os.str());
}

}  // namespace polyhardy
