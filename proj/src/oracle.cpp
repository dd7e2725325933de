#include "vtl/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "vtl/conventions.hpp"

namespace vtl {

int classical_crossings(const BraidWord& w) {
  int c = 0;
  for (const auto& l : w.letters())
    if (l.kind == BraidLetter::Kind::Sigma) ++c;
  return c;
}

namespace {

// The stacked diagram has horizontal levels 0..L and vertical positions
// 1..n. Ports are the grid points; every port meets exactly two edges (one
// closure edge joins level L to level 0 at each position), so each state's
// diagram is a disjoint union of closed loops.
struct Edge {
  int port[2];
  int local_side[2];  // 0 = lower boundary of its layer, 1 = upper
  int pos[2];         // positions 1..n
  int label = 0;
  bool closure = false;
};

struct Diagram {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::array<int, 2>> at_port;  // the two edge indices per port

  int port_of(int level, int pos) const { return level * n + (pos - 1); }

  void add_edge(int level_a, int pos_a, int side_a, int level_b, int pos_b,
                int side_b, int label, bool closure) {
    Edge e;
    e.port[0] = port_of(level_a, pos_a);
    e.port[1] = port_of(level_b, pos_b);
    e.local_side[0] = side_a;
    e.local_side[1] = side_b;
    e.pos[0] = pos_a;
    e.pos[1] = pos_b;
    e.label = label;
    e.closure = closure;
    const int idx = static_cast<int>(edges.size());
    edges.push_back(e);
    for (int end = 0; end < 2; ++end) {
      auto& slots = at_port[e.port[end]];
      if (slots[0] < 0)
        slots[0] = idx;
      else
        slots[1] = idx;
    }
  }
};

// Builds the diagram for one smoothing state. Bits of `state` select, for
// each classical crossing in word order, the straight smoothing (0) or the
// cup-cap smoothing (1).
Diagram build_diagram(const BraidWord& w, std::uint64_t state,
                      int* weight_exponent) {
  const int n = w.strands();
  const int L = static_cast<int>(w.size());
  Diagram d;
  d.n = n;
  d.at_port.assign(static_cast<std::size_t>(L + 1) * n, {-1, -1});
  d.edges.reserve(static_cast<std::size_t>(L + 1) * n);
  int exponent = 0;
  std::uint64_t bits = state;
  for (int k = 1; k <= L; ++k) {
    const BraidLetter& l = w.letters()[k - 1];
    const int i = l.index;
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) d.add_edge(k - 1, j, 0, k, j, 1, 0, false);
    if (l.kind == BraidLetter::Kind::Tau) {
      d.add_edge(k - 1, i, 0, k, i + 1, 1, 0, false);
      d.add_edge(k - 1, i + 1, 0, k, i, 1, 0, false);
      continue;
    }
    const bool cupcap = bits & 1;
    bits >>= 1;
    if (cupcap) {
      exponent -= l.sign;
      d.add_edge(k - 1, i, 0, k - 1, i + 1, 0, kCupLabel, false);
      d.add_edge(k, i, 1, k, i + 1, 1, kCapLabel, false);
    } else {
      exponent += l.sign;
      d.add_edge(k - 1, i, 0, k, i, 1, 0, false);
      d.add_edge(k - 1, i + 1, 0, k, i + 1, 1, 0, false);
    }
  }
  for (int j = 1; j <= n; ++j) d.add_edge(L, j, 1, 0, j, 0, 0, true);
  *weight_exponent = exponent;
  return d;
}

// Walks every loop once and reports its zigzag count. The running sign is
// the cumulated parity of the traversal: a same-side edge flips it, and an
// edge traversed against its layer-local boundary order contributes its
// label under the flipped sign.
std::vector<int> trace_loops(const Diagram& d) {
  std::vector<bool> seen(d.edges.size(), false);
  std::vector<int> zetas;
  const auto local_key = [&](int side, int pos) {
    return side == 0 ? pos : 2 * d.n + 1 - pos;
  };
  for (std::size_t start = 0; start < d.edges.size(); ++start) {
    if (seen[start]) continue;
    long long h = 0;
    int sign = 1;
    std::size_t edge = start;
    int entry_end = 0;
    do {
      seen[edge] = true;
      const Edge& e = d.edges[edge];
      const int exit_end = 1 - entry_end;
      if (!e.closure) {
        const int parity = e.local_side[0] == e.local_side[1] ? -1 : 1;
        const bool forward = local_key(e.local_side[entry_end], e.pos[entry_end]) <
                             local_key(e.local_side[exit_end], e.pos[exit_end]);
        if (forward) {
          h += sign * e.label;
          sign *= parity;
        } else {
          sign *= parity;
          h += sign * e.label;
        }
      }
      const int exit_port = e.port[exit_end];
      const auto& slots = d.at_port[exit_port];
      const std::size_t next =
          static_cast<std::size_t>(slots[0]) == edge ? slots[1] : slots[0];
      entry_end = d.edges[next].port[0] == exit_port ? 0 : 1;
      edge = next;
    } while (edge != start);
    if (h % 2 != 0) throw OddH("odd label sum on a state-sum loop");
    zetas.push_back(static_cast<int>((h < 0 ? -h : h) / 2));
  }
  return zetas;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("VTL_THREADS")) {
    const int value = std::atoi(env);
    return value <= 0 ? 1 : value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

LaurentPoly writhe_correction(const BraidWord& w) {
  const int ww = writhe(w);
  return LaurentPoly::monomial(-3 * ww, ww % 2 == 0 ? 1 : -1);
}

// Sums `per_state` over the state range in fixed chunks; the chunk
// boundaries do not depend on the thread count, and exact integer
// arithmetic makes the merged result identical for any schedule.
template <typename Poly, typename PerState>
Poly sum_states(std::uint64_t states, int threads, const PerState& per_state,
                OracleStats* stats) {
  const int nthreads = resolve_threads(threads);
  const std::uint64_t nchunks = std::min<std::uint64_t>(states, 64);
  std::vector<Poly> partial(nchunks);
  std::vector<std::uint64_t> counted(nchunks, 0);
  const auto run_chunk = [&](std::uint64_t chunk) {
    const std::uint64_t lo = states * chunk / nchunks;
    const std::uint64_t hi = states * (chunk + 1) / nchunks;
    Poly acc;
    for (std::uint64_t s = lo; s < hi; ++s) {
      acc += per_state(s);
      ++counted[chunk];
    }
    partial[chunk] = std::move(acc);
  };
  if (nthreads <= 1) {
    for (std::uint64_t chunk = 0; chunk < nchunks; ++chunk) run_chunk(chunk);
  } else {
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(nchunks, static_cast<std::uint64_t>(nthreads)));
    std::atomic<std::uint64_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t chunk = cursor.fetch_add(1);
          if (chunk >= nchunks) return;
          run_chunk(chunk);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  Poly total;
  std::uint64_t total_states = 0;
  for (std::uint64_t chunk = 0; chunk < nchunks; ++chunk) {
    total += partial[chunk];
    total_states += counted[chunk];
  }
  if (stats) stats->states = total_states;
  return total;
}

void guard_crossings(const BraidWord& w) {
  if (classical_crossings(w) > kMaxOracleCrossings)
    throw TooManyCrossings("state sum is capped at " +
                           std::to_string(kMaxOracleCrossings) +
                           " classical crossings");
}

}  // namespace

LaurentPoly f_state_sum(const BraidWord& w, int threads, OracleStats* stats) {
  guard_crossings(w);
  const int c = classical_crossings(w);
  const std::uint64_t states = std::uint64_t{1} << c;
  const LaurentPoly per = writhe_correction(w);
  auto per_state = [&](std::uint64_t s) {
    int exponent = 0;
    const Diagram d = build_diagram(w, s, &exponent);
    const auto zetas = trace_loops(d);
    return LaurentPoly::monomial(exponent) *
           d_power(static_cast<int>(zetas.size()));
  };
  return per * sum_states<LaurentPoly>(states, threads, per_state, stats);
}

ArrowPoly arrow_state_sum(const BraidWord& w, int threads, OracleStats* stats) {
  guard_crossings(w);
  const int c = classical_crossings(w);
  const std::uint64_t states = std::uint64_t{1} << c;
  const ArrowPoly per = ArrowPoly(writhe_correction(w));
  auto per_state = [&](std::uint64_t s) {
    int exponent = 0;
    const Diagram d = build_diagram(w, s, &exponent);
    ArrowPoly value = ArrowPoly(LaurentPoly::monomial(exponent));
    for (int zeta : trace_loops(d)) value *= zigzag_factor(zeta);
    return value;
  };
  return per * sum_states<ArrowPoly>(states, threads, per_state, stats);
}

}  // namespace vtl
