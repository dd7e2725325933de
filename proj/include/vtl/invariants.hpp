#ifndef VTL_INVARIANTS_HPP
#define VTL_INVARIANTS_HPP

#include "vtl/braid.hpp"

namespace vtl {

/// Writhe-corrected bracket of the closure, computed as the closure trace
/// of the flat-tangle representation. The unknot evaluates to -A^2 - A^-2.
LaurentPoly f_polynomial(const BraidWord& w);

/// Labeled refinement; coincides with f_polynomial on words without
/// virtual letters.
ArrowPoly arrow_polynomial(const BraidWord& w);

/// Divide once by -A^2 - A^-2, so the unknot maps to 1. Throws
/// NotDivisible when the value is not a multiple (possible for arrow
/// values of genuinely virtual words).
LaurentPoly normalized(const LaurentPoly& p);
ArrowPoly normalized(const ArrowPoly& p);

}  // namespace vtl

#endif
