#include "vtl/flat_tangle.hpp"

#include <algorithm>
#include <sstream>

namespace vtl {

namespace {

std::string endpoint_str(Endpoint e) {
  std::ostringstream os;
  os << '(' << e.side << ',' << e.pos << ')';
  return os.str();
}

// Partner lookup table indexed by [side][pos].
struct PartnerTable {
  explicit PartnerTable(const FlatTangle& t)
      : table(2, std::vector<Endpoint>(static_cast<std::size_t>(t.strands()) + 1)) {
    for (const auto& [p, q] : t.pairs()) {
      table[p.side][p.pos] = q;
      table[q.side][q.pos] = p;
    }
  }
  Endpoint operator()(Endpoint e) const { return table[e.side][e.pos]; }
  std::vector<std::vector<Endpoint>> table;
};

}  // namespace

FlatTangle::FlatTangle(int n, std::vector<EndpointPair> pairs) : n_(n) {
  if (n < 1) throw OutOfRange("tangle needs at least one strand");
  if (pairs.size() != static_cast<std::size_t>(n))
    throw InvalidMatching("expected exactly n pairs");
  std::vector<std::vector<bool>> seen(2, std::vector<bool>(n + 1, false));
  for (auto& [p, q] : pairs) {
    for (Endpoint e : {p, q}) {
      if (e.side != 0 && e.side != 1) throw OutOfRange("endpoint side must be 0 or 1");
      if (e.pos < 1 || e.pos > n) throw OutOfRange("endpoint position out of range");
      if (seen[e.side][e.pos])
        throw InvalidMatching("endpoint " + endpoint_str(e) + " used twice");
      seen[e.side][e.pos] = true;
    }
    if (q < p) std::swap(p, q);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

FlatTangle FlatTangle::identity(int n) {
  std::vector<EndpointPair> pairs;
  pairs.reserve(n);
  for (int j = 1; j <= n; ++j) pairs.push_back({{0, j}, {1, j}});
  return FlatTangle(n, std::move(pairs));
}

FlatTangle FlatTangle::cup_cap(int i, int n) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("cup_cap index out of range");
  std::vector<EndpointPair> pairs;
  pairs.reserve(n);
  for (int j = 1; j <= n; ++j) {
    if (j == i) {
      pairs.push_back({{0, i}, {0, i + 1}});
      pairs.push_back({{1, i}, {1, i + 1}});
    } else if (j != i + 1) {
      pairs.push_back({{0, j}, {1, j}});
    }
  }
  return FlatTangle(n, std::move(pairs));
}

FlatTangle FlatTangle::transposition(int i, int n) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("transposition index out of range");
  std::vector<EndpointPair> pairs;
  pairs.reserve(n);
  for (int j = 1; j <= n; ++j) {
    if (j == i) {
      pairs.push_back({{0, i}, {1, i + 1}});
      pairs.push_back({{0, i + 1}, {1, i}});
    } else if (j != i + 1) {
      pairs.push_back({{0, j}, {1, j}});
    }
  }
  return FlatTangle(n, std::move(pairs));
}

Endpoint FlatTangle::partner(Endpoint e) const {
  for (const auto& [p, q] : pairs_) {
    if (p == e) return q;
    if (q == e) return p;
  }
  throw OutOfRange("endpoint not in tangle");
}

std::size_t FlatTangle::pair_index(Endpoint e) const {
  for (std::size_t k = 0; k < pairs_.size(); ++k)
    if (pairs_[k].first == e || pairs_[k].second == e) return k;
  throw OutOfRange("endpoint not in tangle");
}

std::string FlatTangle::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (k) os << ',';
    os << endpoint_str(pairs_[k].first) << '-' << endpoint_str(pairs_[k].second);
  }
  os << ']';
  return os.str();
}

FlatTangle generator_flat(FlatGen kind, int i, int n) {
  switch (kind) {
    case FlatGen::Identity:
      return FlatTangle::identity(n);
    case FlatGen::E:
      return FlatTangle::cup_cap(i, n);
    case FlatGen::V:
      return FlatTangle::transposition(i, n);
  }
  throw OutOfRange("unknown generator kind");
}

std::pair<FlatTangle, CompositionTrace> multiply_flat(const FlatTangle& a,
                                                      const FlatTangle& b) {
  const int n = a.strands();
  if (n != b.strands()) throw SizeMismatch("tangle strand counts differ");
  const PartnerTable pa(a), pb(b);

  // Gluing identifies (1,j) of `a` with (0,j) of `b`. Arcs are traced from
  // each free boundary point; interface positions not met by any arc belong
  // to closed cycles.
  std::vector<bool> interface_used(n + 1, false);
  std::vector<std::vector<bool>> start_used(2, std::vector<bool>(n + 1, false));
  std::vector<EndpointPair> arcs;
  arcs.reserve(n);

  auto trace_arc = [&](Endpoint start, bool in_a) {
    Endpoint cur = start;
    bool copy_a = in_a;
    for (;;) {
      Endpoint other = copy_a ? pa(cur) : pb(cur);
      if (copy_a && other.side == 1) {
        interface_used[other.pos] = true;
        cur = {0, other.pos};
        copy_a = false;
      } else if (!copy_a && other.side == 0) {
        interface_used[other.pos] = true;
        cur = {1, other.pos};
        copy_a = true;
      } else {
        // Free boundary point of the product.
        return copy_a ? Endpoint{0, other.pos} : Endpoint{1, other.pos};
      }
    }
  };

  // Free product boundary: (0,j) lives in `a`, (1,j) lives in `b`.
  for (int side = 0; side <= 1; ++side) {
    for (int j = 1; j <= n; ++j) {
      const Endpoint start{side, j};
      if (start_used[side][j]) continue;
      const Endpoint end = trace_arc(side == 0 ? Endpoint{0, j} : Endpoint{1, j},
                                     side == 0);
      start_used[side][j] = true;
      start_used[end.side][end.pos] = true;
      arcs.push_back(start < end ? EndpointPair{start, end}
                                 : EndpointPair{end, start});
    }
  }

  int cycles = 0;
  for (int j = 1; j <= n; ++j) {
    if (interface_used[j]) continue;
    ++cycles;
    // Walk the cycle: pairs of `a` with both ends on side 1 alternate with
    // pairs of `b` with both ends on side 0.
    int cur = j;
    bool in_a = true;
    do {
      interface_used[cur] = true;
      const Endpoint other =
          in_a ? pa({1, cur}) : pb({0, cur});
      cur = other.pos;
      in_a = !in_a;
    } while (cur != j || !in_a);
  }

  std::sort(arcs.begin(), arcs.end());
  CompositionTrace trace{arcs, cycles};
  return {FlatTangle(n, std::move(arcs)), std::move(trace)};
}

int closure_loops(const FlatTangle& t) {
  const int n = t.strands();
  const PartnerTable pt(t);
  std::vector<bool> closure_used(n + 1, false);  // closure arc at position j
  int loops = 0;
  for (int j = 1; j <= n; ++j) {
    if (closure_used[j]) continue;
    ++loops;
    closure_used[j] = true;
    // Enter at (0,j) as if we had just crossed the closure arc at j; the
    // loop ends when a pair exits at (1,j), about to cross that arc again.
    Endpoint cur{0, j};
    for (;;) {
      const Endpoint exit = pt(cur);
      if (exit.side == 1 && exit.pos == j) break;
      closure_used[exit.pos] = true;
      cur = {1 - exit.side, exit.pos};
    }
  }
  return loops;
}

FlatTangle include_flat(const FlatTangle& t) {
  auto pairs = t.pairs();
  const int n = t.strands();
  pairs.push_back({{0, n + 1}, {1, n + 1}});
  return FlatTangle(n + 1, std::move(pairs));
}

bool is_non_crossing(const FlatTangle& t) {
  const int n = t.strands();
  // gamma_1 = {x1,y1} crosses gamma_2 = {x2,y2} iff x1 < x2 < y1 < y2 in the
  // boundary order (with x < y inside each pair).
  const auto key = [n](Endpoint e) { return boundary_order_key(e, n); };
  for (std::size_t i = 0; i < t.pairs().size(); ++i) {
    int x1 = key(t.pairs()[i].first), y1 = key(t.pairs()[i].second);
    if (y1 < x1) std::swap(x1, y1);
    for (std::size_t j = i + 1; j < t.pairs().size(); ++j) {
      int x2 = key(t.pairs()[j].first), y2 = key(t.pairs()[j].second);
      if (y2 < x2) std::swap(x2, y2);
      if ((x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1))
        return false;
    }
  }
  return true;
}

bool is_parity_tangle(const FlatTangle& t) {
  for (const auto& [p, q] : t.pairs()) {
    const int diff = q.pos - p.pos;
    const bool same_side = p.side == q.side;
    if (same_side && diff % 2 == 0) return false;
    if (!same_side && diff % 2 != 0) return false;
  }
  return true;
}

namespace {

void enumerate_rec(int n, std::vector<Endpoint>& free_points,
                   std::vector<EndpointPair>& acc,
                   std::vector<FlatTangle>& out) {
  if (free_points.empty()) {
    out.emplace_back(n, acc);
    return;
  }
  Endpoint first = free_points.front();
  for (std::size_t k = 1; k < free_points.size(); ++k) {
    std::vector<Endpoint> rest;
    rest.reserve(free_points.size() - 2);
    for (std::size_t j = 1; j < free_points.size(); ++j)
      if (j != k) rest.push_back(free_points[j]);
    acc.push_back({first, free_points[k]});
    enumerate_rec(n, rest, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<FlatTangle> enumerate_flat(int n) {
  if (n < 1) throw OutOfRange("strand count must be >= 1");
  if (n > 6) throw TooLarge("enumerate_flat is capped at n = 6");
  std::vector<Endpoint> points;
  for (int side = 0; side <= 1; ++side)
    for (int j = 1; j <= n; ++j) points.push_back({side, j});
  std::vector<EndpointPair> acc;
  std::vector<FlatTangle> out;
  enumerate_rec(n, points, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vtl
