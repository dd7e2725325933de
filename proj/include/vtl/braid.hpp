#ifndef VTL_BRAID_HPP
#define VTL_BRAID_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vtl/algebra.hpp"

namespace vtl {

struct BraidLetter {
  enum class Kind { Sigma, Tau };
  Kind kind = Kind::Sigma;
  int index = 1;  // 1 <= index <= n-1
  int sign = 1;   // +1 or -1; Tau letters always +1

  bool operator==(const BraidLetter&) const = default;
  BraidLetter inverse() const { return {kind, index, kind == Kind::Sigma ? -sign : 1}; }
  std::string str() const;
};

inline BraidLetter sigma(int i, int sign = 1) {
  return {BraidLetter::Kind::Sigma, i, sign};
}
inline BraidLetter tau(int i) { return {BraidLetter::Kind::Tau, i, 1}; }

/// Word in the generators of the virtual braid group on n strands. The
/// strand count is explicit: stabilization moves change it without touching
/// letter indices. No normal form is stored.
class BraidWord {
 public:
  BraidWord(int n, std::vector<BraidLetter> letters);
  static BraidWord empty(int n) { return BraidWord(n, {}); }

  int strands() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  BraidWord inverse() const;
  BraidWord concat(const BraidWord& rhs) const;
  /// Same letters viewed on m >= current strand count.
  BraidWord widened(int m) const;

  bool operator==(const BraidWord&) const = default;

 private:
  int n_;
  std::vector<BraidLetter> letters_;
};

/// Grammar: whitespace-separated tokens; `s<i>` for a positive crossing,
/// `s<i>'` for its inverse, `t<i>` for a virtual crossing (`t<i>'` is
/// rejected: virtual crossings are involutions); `-n <int>` sets the strand
/// count and must appear exactly once.
BraidWord parse_braid(const std::string& text);
/// As above with the strand count supplied by the caller; an inline `-n`
/// token must then agree with it.
BraidWord parse_braid(const std::string& text, int n);

std::string format_braid(const BraidWord& w);    // "-n 2 s1 s1 t1"
std::string format_letters(const BraidWord& w);  // "s1 s1 t1"

/// Sum of classical crossing signs; virtual crossings count zero.
int writhe(const BraidWord& w);

/// A defining relation of the presentation (or a free inverse-pair
/// cancellation, valid in any group).
struct Relation {
  enum class Kind {
    TauSquare,       // tau_i tau_i = 1
    FreeInverse,     // sigma_i^s sigma_i^-s = 1
    CommSigmaSigma,  // sigma_i^s1 sigma_j^s2 = sigma_j^s2 sigma_i^s1, |i-j| >= 2
    CommTauTau,      // tau_i tau_j = tau_j tau_i, |i-j| >= 2
    CommTauSigma,    // tau_i sigma_j^s = sigma_j^s tau_i, |i-j| >= 2
    BraidSigma,      // sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j, |i-j| = 1
    BraidTau,        // tau_i tau_j tau_i = tau_j tau_i tau_j, |i-j| = 1
    Mixed,           // tau_i tau_j sigma_i = sigma_j tau_i tau_j, |i-j| = 1
  };
  Kind kind = Kind::TauSquare;
  int i = 1;
  int j = 1;
  int s1 = 1;
  int s2 = 1;

  std::vector<BraidLetter> lhs() const;
  std::vector<BraidLetter> rhs() const;
  std::string str() const;
};

/// Replace the relation's left side at `site` by its right side (or the
/// right side by the left, when only that one matches). Throws NoMatch.
BraidWord apply_relation(const BraidWord& w, std::size_t site,
                         const Relation& rel);

enum class MarkovMove { Conj, StabPos, StabNeg, StabTau, MoveC, MoveD };

/// The virtual Markov moves. Up-moves append the defining suffix and raise
/// the strand count; down-moves require the word to end with that exact
/// suffix and not otherwise touch the last strand. Conjugation takes the
/// conjugator word through `conjugator` and keeps the strand count.
BraidWord markov_move(const BraidWord& w, MarkovMove move, bool up,
                      const BraidWord* conjugator = nullptr);

/// Image of the word under the flat-tangle representation: sigma_i maps to
/// -A^-2 1 - A^-4 E_i, its inverse to -A^2 1 - A^4 E_i, tau_i to v_i.
VTLElement rho_f(const BraidWord& w);

/// Labeled version: sigma_i maps to -A^-2 1 - A^-4 F_i, tau_i to w_i.
ATLElement rho_a(const BraidWord& w);

struct EquivalentWord {
  BraidWord word;
  std::vector<std::string> move_log;  // one replayable entry per step
};

/// Reproducible random walk over presentation relations and Markov moves;
/// the closure of the result is equivalent to the closure of `w` by
/// construction. `strand_cap` bounds growth of the strand count.
EquivalentWord random_equivalent(const BraidWord& w, std::uint64_t seed,
                                 int steps, int strand_cap = 0);

}  // namespace vtl

#endif
