#ifndef VTL_SUITES_HPP
#define VTL_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace vtl {

/// Outcome of one identity suite. Failures carry a printable minimal
/// counterexample (the operands and both sides).
struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Presentation relations of the flat-tangle algebra, all generator indices,
// n = 2..max_n.
SuiteResult check_presentation_vtl(int max_n);

// Derived consequences of the flat presentation (cup-cap sandwich and
// symmetric-group shuffles), n = 2..max_n.
SuiteResult check_derived_vtl(int max_n);

// Presentation relations of the labeled algebra, twist powers
// m in [-m_range, m_range], n = 2..max_n.
SuiteResult check_presentation_atl(int max_n, int m_range = 4);

// Derived consequences of the labeled presentation, n = 2..max_n.
SuiteResult check_derived_atl(int max_n);

// Markov trace axioms for the flat closure trace: commutativity exhaustive
// over basis tangles for n <= max_n, the three stabilization-type axioms per
// basis tangle, plus `random_pairs` random element pairs.
SuiteResult check_markov_f(int max_n, std::uint64_t seed, int random_pairs = 200);

// Same for the labeled closure trace, with `tangles_per_n` sampled arrow
// tangles per strand count (labels in [-5, 5]).
SuiteResult check_markov_a(int max_n, std::uint64_t seed,
                           int tangles_per_n = 500, int random_pairs = 200);

// Both representations kill every defining relation of the virtual braid
// group, and the sigma images are invertible, n = 2..max_n.
SuiteResult check_representations(int max_n);

// Restriction to words in the cup-cap generators only: the labeled trace is
// z-free and equals the flat trace (random words), plus the parity-labeling
// homomorphism and zero-zigzag-closure checks, exhaustive for n <= 4.
SuiteResult check_tl_restriction(int max_n, std::uint64_t seed, int words = 100,
                                 int max_len = 12);

// Invariance of both polynomials under random sequences of presentation
// relations and Markov moves.
SuiteResult check_markov_invariance(int words, int moves, std::uint64_t seed,
                                    int max_n);

// Algebra pipeline against the brute-force state sums, on random words
// including classical-only and virtual-only ones.
SuiteResult check_oracle_agreement(int words, std::uint64_t seed,
                                   int max_crossings = 10);

}  // namespace vtl

#endif
