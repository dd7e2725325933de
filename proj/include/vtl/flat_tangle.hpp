#ifndef VTL_FLAT_TANGLE_HPP
#define VTL_FLAT_TANGLE_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "vtl/errors.hpp"

namespace vtl {

/// Boundary point of an n-tangle: side 0 or 1, position 1..n.
struct Endpoint {
  int side = 0;
  int pos = 0;

  bool operator==(const Endpoint&) const = default;
  auto operator<=>(const Endpoint&) const = default;  // plain (side, pos) order
};

/// Key realizing the boundary cyclic order
/// (0,1) < (0,2) < ... < (0,n) < (1,n) < ... < (1,2) < (1,1).
inline int boundary_order_key(Endpoint e, int n) {
  return e.side == 0 ? e.pos : 2 * n + 1 - e.pos;
}

using EndpointPair = std::pair<Endpoint, Endpoint>;

/// Flat virtual n-tangle: a perfect matching of the 2n boundary points.
/// Stored canonically (each pair sorted, pairs sorted by first endpoint) so
/// tangles compare and hash by value.
class FlatTangle {
 public:
  FlatTangle(int n, std::vector<EndpointPair> pairs);

  static FlatTangle identity(int n);
  /// E_i: cup (0,i)-(0,i+1) and cap (1,i)-(1,i+1), all other strands through.
  static FlatTangle cup_cap(int i, int n);
  /// v_i: strands i and i+1 exchanged, all other strands through.
  static FlatTangle transposition(int i, int n);

  int strands() const { return n_; }
  const std::vector<EndpointPair>& pairs() const { return pairs_; }
  Endpoint partner(Endpoint e) const;
  /// Index into pairs() of the pair containing e.
  std::size_t pair_index(Endpoint e) const;

  bool operator==(const FlatTangle&) const = default;
  auto operator<=>(const FlatTangle&) const = default;

  /// Canonical text form, e.g. "[(0,1)-(0,2),(0,3)-(1,2),(1,1)-(1,3)]".
  std::string str() const;

 private:
  int n_;
  std::vector<EndpointPair> pairs_;
};

enum class FlatGen { Identity, E, V };

/// Generator diagrams of the flat tangle algebra (identity, E_i, v_i).
FlatTangle generator_flat(FlatGen kind, int i, int n);

/// Arcs and consumed-cycle count produced by gluing two tangles.
struct CompositionTrace {
  std::vector<EndpointPair> arcs;  // the n pairs of the product, canonical
  int cycle_count = 0;             // m, the closed curves consumed
};

/// Glue side 1 of `a` to side 0 of `b`. Returns the boundary tangle a*b and
/// the number m of closed curves consumed, so that a b = z^m (a*b).
std::pair<FlatTangle, CompositionTrace> multiply_flat(const FlatTangle& a,
                                                      const FlatTangle& b);

/// Number of closed curves of the closure (joining (0,i) to (1,i) for all i).
int closure_loops(const FlatTangle& t);

/// Same tangle on n+1 strands, the new strand running straight through.
FlatTangle include_flat(const FlatTangle& t);

/// True iff no two pairs interleave in the boundary order.
bool is_non_crossing(const FlatTangle& t);

/// True iff every pair {(a,b),(c,d)} has d-b odd when a = c and even when
/// a != c.
bool is_parity_tangle(const FlatTangle& t);

/// All (2n-1)!! flat n-tangles; n is capped at 6 to keep exhaustive suites
/// tractable (throws TooLarge beyond that).
std::vector<FlatTangle> enumerate_flat(int n);

}  // namespace vtl

#endif
