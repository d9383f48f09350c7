#pragma once

#include <json.hpp>

#include <string>

#include "core/curve.hpp"
#include "core/laurent.hpp"
#include "core/whitney_jet.hpp"

namespace polyhardy {

using json = nlohmann::json;

// Curve descriptors:
//   {"kind":"circle","center":[re,im],"radius":r,"N":n}
//   {"kind":"ellipse","a":a,"b":b,"N":n}
//   {"kind":"trig","coeffs":[[m,re,im],...],"N":n}
json curve_to_json(const CurveDiscretization& curve);
CurvePtr curve_from_json(const json& j);

// Jets: {"k":k,"alpha":a,"curve":{...},"components":[[[re,im],...],...]}
// with row n = f^(0,n).
json jet_to_json(const WhitneyJet& f);
WhitneyJet jet_from_json(const json& j);

// Laurent polynomials: [[exponent,re,im],...] sorted by exponent.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace polyhardy
