#include "vtl/arrow_tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "vtl/conventions.hpp"

namespace vtl {

namespace {

bool label_parity_ok(const EndpointPair& pair, int label) {
  const bool same_side = pair.first.side == pair.second.side;
  return same_side ? (label % 2 != 0) : (label % 2 == 0);
}

// Partner, label and parity lookup for one tangle, indexed by endpoint.
struct LabeledTable {
  explicit LabeledTable(const ArrowTangle& t)
      : partner(2, std::vector<Endpoint>(static_cast<std::size_t>(t.strands()) + 1)),
        label(2, std::vector<int>(static_cast<std::size_t>(t.strands()) + 1, 0)) {
    for (std::size_t k = 0; k < t.base().pairs().size(); ++k) {
      const auto& [p, q] = t.base().pairs()[k];
      partner[p.side][p.pos] = q;
      partner[q.side][q.pos] = p;
      label[p.side][p.pos] = label[q.side][q.pos] = t.label_at(k);
    }
  }
  std::vector<std::vector<Endpoint>> partner;
  std::vector<std::vector<int>> label;
};

// Accumulates the signed label sum of an arc or cycle, one pair at a time.
// The running sign is the cumulated parity: traversing a pair forward
// (entry before exit in its own tangle's boundary order) contributes the
// label under the sign accumulated so far; traversing it backward flips the
// sign first when the pair is same-side.
class LabelAccumulator {
 public:
  void step(Endpoint entry, Endpoint exit, int label, int n) {
    const int parity = entry.side == exit.side ? -1 : 1;
    const bool forward =
        boundary_order_key(entry, n) < boundary_order_key(exit, n);
    if (forward) {
      sum_ += sign_ * label;
      sign_ *= parity;
    } else {
      sign_ *= parity;
      sum_ += sign_ * label;
    }
  }
  long long sum() const { return sum_; }

 private:
  int sign_ = 1;
  long long sum_ = 0;
};

int zeta_of(long long h) {
  if (h % 2 != 0) throw OddH("odd label sum on a closed cycle");
  return static_cast<int>(std::llabs(h) / 2);
}

}  // namespace

ArrowTangle::ArrowTangle(FlatTangle base, std::vector<int> labels)
    : base_(std::move(base)), labels_(std::move(labels)) {
  if (labels_.size() != base_.pairs().size())
    throw MissingLabel("expected one label per pair");
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (!label_parity_ok(base_.pairs()[k], labels_[k]))
      throw ParityViolation("label parity violated on pair " +
                            std::to_string(k));
}

ArrowTangle ArrowTangle::with_labels(
    FlatTangle base, const std::vector<std::pair<EndpointPair, int>>& labeled) {
  std::map<EndpointPair, int> by_pair;
  for (auto [pair, label] : labeled) {
    if (pair.second < pair.first) std::swap(pair.first, pair.second);
    by_pair[pair] = label;
  }
  std::vector<int> labels;
  labels.reserve(base.pairs().size());
  for (const auto& pair : base.pairs()) {
    auto it = by_pair.find(pair);
    if (it == by_pair.end())
      throw MissingLabel("no label for pair " + std::to_string(labels.size()));
    labels.push_back(it->second);
  }
  return ArrowTangle(std::move(base), std::move(labels));
}

ArrowTangle ArrowTangle::identity(int n) {
  return ArrowTangle(FlatTangle::identity(n), std::vector<int>(n, 0));
}

std::string ArrowTangle::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < base_.pairs().size(); ++k) {
    if (k) os << ',';
    const auto& [p, q] = base_.pairs()[k];
    os << '(' << p.side << ',' << p.pos << ")-(" << q.side << ',' << q.pos
       << "):" << labels_[k];
  }
  os << ']';
  return os.str();
}

ArrowTangle generator_arrow(ArrowGen kind, int i, int n) {
  switch (kind) {
    case ArrowGen::Identity:
      return ArrowTangle::identity(n);
    case ArrowGen::F: {
      FlatTangle base = FlatTangle::cup_cap(i, n);
      std::vector<int> labels(n, 0);
      for (std::size_t k = 0; k < base.pairs().size(); ++k) {
        const auto& [p, q] = base.pairs()[k];
        if (p.side == q.side) labels[k] = p.side == 0 ? kCupLabel : kCapLabel;
      }
      return ArrowTangle(std::move(base), std::move(labels));
    }
    case ArrowGen::W:
      return ArrowTangle(FlatTangle::transposition(i, n),
                         std::vector<int>(n, 0));
    case ArrowGen::T:
    case ArrowGen::TInv: {
      if (i < 1 || i > n) throw IndexOutOfRange("twist index out of range");
      FlatTangle base = FlatTangle::identity(n);
      std::vector<int> labels(n, 0);
      const int value = kind == ArrowGen::T ? kTwistLabel : -kTwistLabel;
      for (std::size_t k = 0; k < base.pairs().size(); ++k)
        if (base.pairs()[k].first.pos == i) labels[k] = value;
      return ArrowTangle(std::move(base), std::move(labels));
    }
  }
  throw OutOfRange("unknown generator kind");
}

std::pair<ArrowTangle, ArrowCompositionTrace> multiply_arrow(
    const ArrowTangle& a, const ArrowTangle& b) {
  const int n = a.strands();
  if (n != b.strands()) throw SizeMismatch("tangle strand counts differ");
  const LabeledTable ta(a), tb(b);

  std::vector<bool> interface_used(n + 1, false);
  std::vector<std::vector<bool>> start_used(2, std::vector<bool>(n + 1, false));
  std::vector<std::pair<EndpointPair, int>> arc_labels;
  arc_labels.reserve(n);

  // Trace the arc through `start` (a free product point), accumulating the
  // signed label sum g.
  auto trace_arc = [&](Endpoint start) {
    bool in_a = start.side == 0;
    Endpoint cur = in_a ? Endpoint{0, start.pos} : Endpoint{1, start.pos};
    LabelAccumulator acc;
    for (;;) {
      const auto& table = in_a ? ta : tb;
      const Endpoint other = table.partner[cur.side][cur.pos];
      acc.step(cur, other, table.label[cur.side][cur.pos], n);
      if (in_a && other.side == 1) {
        interface_used[other.pos] = true;
        cur = {0, other.pos};
        in_a = false;
      } else if (!in_a && other.side == 0) {
        interface_used[other.pos] = true;
        cur = {1, other.pos};
        in_a = true;
      } else {
        const Endpoint end = in_a ? Endpoint{0, other.pos} : Endpoint{1, other.pos};
        return std::pair<Endpoint, long long>{end, acc.sum()};
      }
    }
  };

  // Visit free product points in boundary order, so each arc is traced from
  // its smaller product endpoint: (0,1) .. (0,n), then (1,n) .. (1,1).
  auto visit = [&](Endpoint start) {
    if (start_used[start.side][start.pos]) return;
    auto [end, g] = trace_arc(start);
    start_used[start.side][start.pos] = true;
    start_used[end.side][end.pos] = true;
    arc_labels.push_back({start < end ? EndpointPair{start, end}
                                      : EndpointPair{end, start},
                          static_cast<int>(g)});
  };
  for (int j = 1; j <= n; ++j) visit({0, j});
  for (int j = n; j >= 1; --j) visit({1, j});

  // Cycles alternate side-1 pairs of `a` with side-0 pairs of `b`, anchored
  // at their least interface position, entering `a` first.
  std::vector<int> zigzags;
  for (int j = 1; j <= n; ++j) {
    if (interface_used[j]) continue;
    LabelAccumulator acc;
    int cur = j;
    bool in_a = true;
    do {
      interface_used[cur] = true;
      const Endpoint entry = in_a ? Endpoint{1, cur} : Endpoint{0, cur};
      const auto& table = in_a ? ta : tb;
      const Endpoint other = table.partner[entry.side][entry.pos];
      acc.step(entry, other, table.label[entry.side][entry.pos], n);
      cur = other.pos;
      in_a = !in_a;
    } while (!(cur == j && in_a));
    zigzags.push_back(zeta_of(acc.sum()));
  }
  std::sort(zigzags.begin(), zigzags.end());

  std::sort(arc_labels.begin(), arc_labels.end());
  std::vector<EndpointPair> pairs;
  std::vector<int> labels;
  pairs.reserve(n);
  labels.reserve(n);
  for (const auto& [pair, g] : arc_labels) {
    pairs.push_back(pair);
    labels.push_back(g);
  }
  ArrowCompositionTrace trace{arc_labels, zigzags};
  return {ArrowTangle(FlatTangle(n, std::move(pairs)), std::move(labels)),
          std::move(trace)};
}

std::vector<ClosureCycle> closure_cycles(const ArrowTangle& t) {
  const int n = t.strands();
  const LabeledTable table(t);
  std::vector<bool> closure_used(n + 1, false);
  std::vector<ClosureCycle> cycles;
  for (int j = 1; j <= n; ++j) {
    if (closure_used[j]) continue;
    closure_used[j] = true;
    LabelAccumulator acc;
    Endpoint cur{0, j};
    for (;;) {
      const Endpoint exit = table.partner[cur.side][cur.pos];
      acc.step(cur, exit, table.label[cur.side][cur.pos], n);
      if (exit.side == 1 && exit.pos == j) break;
      closure_used[exit.pos] = true;
      cur = {1 - exit.side, exit.pos};
    }
    cycles.push_back({acc.sum(), zeta_of(acc.sum())});
  }
  return cycles;
}

std::vector<int> closure_zigzags(const ArrowTangle& t) {
  std::vector<int> out;
  for (const auto& cycle : closure_cycles(t)) out.push_back(cycle.zeta);
  std::sort(out.begin(), out.end());
  return out;
}

ArrowTangle include_arrow(const ArrowTangle& t) {
  std::vector<std::pair<EndpointPair, int>> labeled;
  for (std::size_t k = 0; k < t.base().pairs().size(); ++k)
    labeled.push_back({t.base().pairs()[k], t.label_at(k)});
  const int n = t.strands();
  labeled.push_back({{{0, n + 1}, {1, n + 1}}, 0});
  return ArrowTangle::with_labels(include_flat(t.base()), labeled);
}

ArrowTangle iota_nu(const FlatTangle& t) {
  if (!is_parity_tangle(t))
    throw NotParityTangle("tangle violates the position-parity condition");
  std::vector<int> labels;
  labels.reserve(t.pairs().size());
  for (const auto& [p, q] : t.pairs()) {
    // p < q in (side, pos) order, so through pairs have p on side 0.
    const int diff = q.pos - p.pos;
    labels.push_back(p.side == q.side ? std::abs(diff) : diff);
  }
  return ArrowTangle(t, std::move(labels));
}

}  // namespace vtl
