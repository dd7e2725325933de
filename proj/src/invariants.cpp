#include "vtl/invariants.hpp"

namespace vtl {

LaurentPoly f_polynomial(const BraidWord& w) { return trace_f(rho_f(w)); }

ArrowPoly arrow_polynomial(const BraidWord& w) { return trace_a(rho_a(w)); }

LaurentPoly normalized(const LaurentPoly& p) { return p.exact_div_by_d(); }

ArrowPoly normalized(const ArrowPoly& p) { return p.exact_div_by_d(); }

}  // namespace vtl
