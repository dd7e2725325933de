#ifndef VTL_ORACLE_HPP
#define VTL_ORACLE_HPP

#include <cstdint>

#include "vtl/braid.hpp"
#include "vtl/rings.hpp"

namespace vtl {

/// Brute-force state sums over all 2^c smoothings of the classical
/// crossings, evaluated directly on the stacked-and-closed braid diagram.
/// Deliberately independent of the tangle-algebra pipeline: loop tracing
/// and label accumulation are re-implemented here from scratch, so the two
/// routes cross-check each other.

inline constexpr int kMaxOracleCrossings = 24;

struct OracleStats {
  std::uint64_t states = 0;  // smoothing states summed; must equal 2^c
};

/// Writhe-corrected Kauffman state sum: sum over states of
/// weight * d^loops, times (-A^3)^-writhe. `threads` = 0 picks the value of
/// VTL_THREADS (itself 0 meaning sequential) or the hardware concurrency;
/// results are bit-identical for every thread count.
LaurentPoly f_state_sum(const BraidWord& w, int threads = 0,
                        OracleStats* stats = nullptr);

/// Labeled state sum: per state, every closed loop's signed label sum h is
/// halved into zeta = |h|/2 and contributes a z_zeta factor.
ArrowPoly arrow_state_sum(const BraidWord& w, int threads = 0,
                          OracleStats* stats = nullptr);

/// Number of classical crossings of the word (the state count is 2^c).
int classical_crossings(const BraidWord& w);

}  // namespace vtl

#endif
