#ifndef VTL_SAMPLING_HPP
#define VTL_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "vtl/algebra.hpp"
#include "vtl/braid.hpp"

namespace vtl {

/// Seeded generators for the randomized identity suites. All of them draw
/// from a caller-owned engine so whole suites replay from a single seed.

using Rng = std::mt19937_64;

FlatTangle random_flat_tangle(Rng& rng, int n);

/// Random labeling of a random flat tangle; labels are drawn from
/// [-max_label, max_label] with the parity forced per pair.
ArrowTangle random_arrow_tangle(Rng& rng, int n, int max_label = 5);

/// Short linear combination of random tangles with small Laurent
/// coefficients.
VTLElement random_vtl_element(Rng& rng, int n, int terms = 3);
ATLElement random_atl_element(Rng& rng, int n, int terms = 3, int max_label = 5);

struct WordOptions {
  int min_strands = 2;
  int max_strands = 4;
  int max_length = 8;
  bool allow_sigma = true;
  bool allow_tau = true;
  int max_crossings = -1;  // cap on classical letters; -1 = no cap
};

BraidWord random_word(Rng& rng, const WordOptions& options);

}  // namespace vtl

#endif
