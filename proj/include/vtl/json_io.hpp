#ifndef VTL_JSON_IO_HPP
#define VTL_JSON_IO_HPP

#include <json.hpp>

#include "vtl/algebra.hpp"
#include "vtl/rings.hpp"

namespace vtl {

/// [{"e": exponent, "c": "coefficient"}] in ascending exponent order;
/// coefficients are decimal strings since they are arbitrary precision.
nlohmann::json to_json(const LaurentPoly& p);

/// [{"m": [indices...], "p": <LaurentPoly>}] with monomials ordered by
/// degree then lexicographically.
nlohmann::json to_json(const ArrowPoly& p);

/// [{"tangle": <text form>, "coeff": <ring JSON>}].
nlohmann::json to_json(const VTLElement& x);
nlohmann::json to_json(const ATLElement& x);

}  // namespace vtl

#endif
