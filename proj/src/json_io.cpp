#include "vtl/json_io.hpp"

namespace vtl {

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({{"e", e}, {"c", c.str()}});
  return out;
}

nlohmann::json to_json(const ArrowPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"m", m.indices()}, {"p", to_json(c)}});
  return out;
}

nlohmann::json to_json(const VTLElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : x.terms())
    out.push_back({{"tangle", t.str()}, {"coeff", to_json(c)}});
  return out;
}

nlohmann::json to_json(const ATLElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : x.terms())
    out.push_back({{"tangle", t.str()}, {"coeff", to_json(c)}});
  return out;
}

}  // namespace vtl
