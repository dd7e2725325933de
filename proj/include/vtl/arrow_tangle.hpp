#ifndef VTL_ARROW_TANGLE_HPP
#define VTL_ARROW_TANGLE_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "vtl/flat_tangle.hpp"

namespace vtl {

/// Flat tangle with one integer label per pair. For a pair {(a,b),(c,d)}
/// the label is odd when a = c and even when a != c; the label counts
/// orientation-reversal markers on the arc, with sign read along the arc
/// from its smaller boundary point.
class ArrowTangle {
 public:
  /// `labels` parallel to base.pairs() in canonical order.
  ArrowTangle(FlatTangle base, std::vector<int> labels);
  /// Labels given per pair in any order; every pair must be covered.
  static ArrowTangle with_labels(
      FlatTangle base, const std::vector<std::pair<EndpointPair, int>>& labeled);

  static ArrowTangle identity(int n);

  int strands() const { return base_.strands(); }
  const FlatTangle& base() const { return base_; }
  const std::vector<int>& labels() const { return labels_; }
  int label_at(std::size_t pair_index) const { return labels_[pair_index]; }
  int label_of(Endpoint e) const { return labels_[base_.pair_index(e)]; }

  bool operator==(const ArrowTangle&) const = default;
  auto operator<=>(const ArrowTangle&) const = default;

  /// Text form, e.g. "[(0,1)-(0,2):1,(0,3)-(1,2):-6,(1,1)-(1,3):3]".
  std::string str() const;

 private:
  FlatTangle base_;
  std::vector<int> labels_;
};

enum class ArrowGen { Identity, F, W, T, TInv };

/// Labeled generator diagrams: F_i (cup and cap labeled per the fixed
/// convention), w_i (plain crossing), t_i / t_i^-1 (straight strands with
/// strand i labeled +2 / -2).
ArrowTangle generator_arrow(ArrowGen kind, int i, int n);

struct ArrowCompositionTrace {
  std::vector<std::pair<EndpointPair, int>> arc_labels;  // product pair -> g
  std::vector<int> cycle_zigzags;                        // one zeta per cycle, sorted
};

/// Glue side 1 of `a` to side 0 of `b`, propagating labels along arcs with
/// the cumulated-parity sign rule and converting each consumed cycle's label
/// sum h into zeta = |h|/2.
std::pair<ArrowTangle, ArrowCompositionTrace> multiply_arrow(
    const ArrowTangle& a, const ArrowTangle& b);

struct ClosureCycle {
  long long h = 0;  // signed label sum, anchored at the cycle's least position
  int zeta = 0;     // |h| / 2
};

/// Cycles of the closure, each with its signed label sum and zigzag count.
std::vector<ClosureCycle> closure_cycles(const ArrowTangle& t);

/// Just the zigzag counts of the closure cycles, as a sorted multiset.
std::vector<int> closure_zigzags(const ArrowTangle& t);

/// Same tangle on n+1 strands; the new through-strand is labeled 0.
ArrowTangle include_arrow(const ArrowTangle& t);

/// Position-difference labeling of a parity tangle: |d-b| on same-side
/// pairs, d-b on through pairs. Throws NotParityTangle otherwise.
ArrowTangle iota_nu(const FlatTangle& t);

}  // namespace vtl

#endif
