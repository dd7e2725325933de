#include <doctest.h>

#include <random>
#include <stack>

#include "vtl/flat_tangle.hpp"

using namespace vtl;

namespace {

// 3-strand tangle with one cup, one cap and one crossing through-pair; its
// closure is a single loop.
FlatTangle sample_tangle3() {
  return FlatTangle(3, {{{0, 1}, {0, 2}}, {{0, 3}, {1, 2}}, {{1, 3}, {1, 1}}});
}

// Independent planarity oracle: walk the boundary order keeping a stack of
// open arcs; a matching is non-crossing iff every arc closes against the
// top of the stack.
bool non_crossing_by_stack(const FlatTangle& t) {
  const int n = t.strands();
  std::vector<Endpoint> order;
  for (int j = 1; j <= n; ++j) order.push_back({0, j});
  for (int j = n; j >= 1; --j) order.push_back({1, j});
  std::stack<Endpoint> open;
  std::vector<std::vector<bool>> seen(2, std::vector<bool>(n + 1, false));
  for (const Endpoint& p : order) {
    const Endpoint q = t.partner(p);
    if (seen[q.side][q.pos]) {
      if (open.empty() || !(open.top() == q)) return false;
      open.pop();
    } else {
      open.push(p);
    }
    seen[p.side][p.pos] = true;
  }
  return open.empty();
}

FlatTangle random_tangle(std::mt19937_64& rng, int n) {
  std::vector<Endpoint> points;
  for (int side = 0; side <= 1; ++side)
    for (int j = 1; j <= n; ++j) points.push_back({side, j});
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<EndpointPair> pairs;
  for (int k = 0; k < n; ++k) pairs.push_back({points[2 * k], points[2 * k + 1]});
  return FlatTangle(n, std::move(pairs));
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
  const FlatTangle t = sample_tangle3();
  CHECK(t.str() == "[(0,1)-(0,2),(0,3)-(1,2),(1,1)-(1,3)]");
  CHECK(FlatTangle::identity(1).str() == "[(0,1)-(1,1)]");
  CHECK_THROWS_AS(
      FlatTangle(2, {{{0, 1}, {0, 2}}, {{0, 1}, {1, 1}}}),  // (0,1) reused
      InvalidMatching);
  CHECK_THROWS_AS(FlatTangle(2, {{{0, 1}, {0, 5}}, {{1, 1}, {1, 2}}}),
                  OutOfRange);
  // Input order does not matter.
  CHECK(FlatTangle(3, {{{1, 1}, {1, 3}}, {{1, 2}, {0, 3}}, {{0, 2}, {0, 1}}}) ==
        t);
}

TEST_CASE("generator diagrams") {
  CHECK(FlatTangle::cup_cap(1, 2).str() == "[(0,1)-(0,2),(1,1)-(1,2)]");
  CHECK(FlatTangle::transposition(1, 2).str() == "[(0,1)-(1,2),(0,2)-(1,1)]");
  CHECK(generator_flat(FlatGen::Identity, 0, 3) == FlatTangle::identity(3));
  CHECK_THROWS_AS(FlatTangle::cup_cap(2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(generator_flat(FlatGen::V, 3, 3), IndexOutOfRange);
}

TEST_CASE("composition of generators") {
  const FlatTangle e1 = FlatTangle::cup_cap(1, 2);
  const FlatTangle v1 = FlatTangle::transposition(1, 2);
  auto [ee, ee_trace] = multiply_flat(e1, e1);
  CHECK(ee == e1);
  CHECK(ee_trace.cycle_count == 1);
  auto [vv, vv_trace] = multiply_flat(v1, v1);
  CHECK(vv == FlatTangle::identity(2));
  CHECK(vv_trace.cycle_count == 0);

  // Cup-cap sandwiched around a distant crossing collapses with no cycles.
  const FlatTangle e1_3 = FlatTangle::cup_cap(1, 3);
  const FlatTangle v2_3 = FlatTangle::transposition(2, 3);
  auto [first, trace1] = multiply_flat(e1_3, v2_3);
  auto [second, trace2] = multiply_flat(first, e1_3);
  CHECK(second == e1_3);
  CHECK(trace1.cycle_count + trace2.cycle_count == 0);

  auto [with_id, id_trace] = multiply_flat(e1, FlatTangle::identity(2));
  CHECK(with_id == e1);
  CHECK(id_trace.cycle_count == 0);
  CHECK_THROWS_AS(multiply_flat(e1, FlatTangle::identity(3)), SizeMismatch);
}

TEST_CASE("composition trace reports the product arcs") {
  auto [product, trace] = multiply_flat(FlatTangle::cup_cap(1, 2),
                                        FlatTangle::transposition(1, 2));
  CHECK(trace.arcs == product.pairs());
  CHECK(trace.arcs.size() == 2);
}

TEST_CASE("closure loop counts") {
  CHECK(closure_loops(sample_tangle3()) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(closure_loops(FlatTangle::identity(n)) == n);
  CHECK(closure_loops(FlatTangle::cup_cap(1, 2)) == 1);
  CHECK(closure_loops(FlatTangle::transposition(1, 2)) == 1);
}

TEST_CASE("inclusion adds a through-strand") {
  CHECK(include_flat(FlatTangle::identity(2)) == FlatTangle::identity(3));
  CHECK(include_flat(FlatTangle::cup_cap(1, 2)) == FlatTangle::cup_cap(1, 3));
  const FlatTangle t = sample_tangle3();
  const FlatTangle big = include_flat(t);
  CHECK(big.strands() == 4);
  CHECK(big.partner({0, 4}) == Endpoint{1, 4});
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : enumerate_flat(n))
      CHECK(closure_loops(include_flat(e)) == closure_loops(e) + 1);
}

TEST_CASE("crossing predicate matches the stack oracle") {
  CHECK(is_non_crossing(FlatTangle::cup_cap(1, 2)));
  CHECK_FALSE(is_non_crossing(FlatTangle::transposition(1, 2)));
  CHECK_FALSE(is_non_crossing(sample_tangle3()));
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : enumerate_flat(n))
      CHECK(is_non_crossing(e) == non_crossing_by_stack(e));
}

TEST_CASE("parity predicate") {
  CHECK(is_parity_tangle(FlatTangle::cup_cap(1, 2)));
  CHECK_FALSE(is_parity_tangle(FlatTangle::transposition(1, 2)));
  for (int n = 1; n <= 5; ++n) CHECK(is_parity_tangle(FlatTangle::identity(n)));
}

TEST_CASE("enumeration counts the double factorial") {
  CHECK(enumerate_flat(1).size() == 1);
  CHECK(enumerate_flat(2).size() == 3);
  CHECK(enumerate_flat(3).size() == 15);
  CHECK(enumerate_flat(4).size() == 105);
  CHECK(enumerate_flat(5).size() == 945);
  CHECK(enumerate_flat(6).size() == 10395);
  CHECK_THROWS_AS(enumerate_flat(7), TooLarge);
}

TEST_CASE("gluing is associative including cycle counts") {
  const auto assoc = [](const FlatTangle& a, const FlatTangle& b,
                        const FlatTangle& c) {
    auto [ab, t_ab] = multiply_flat(a, b);
    auto [ab_c, t_ab_c] = multiply_flat(ab, c);
    auto [bc, t_bc] = multiply_flat(b, c);
    auto [a_bc, t_a_bc] = multiply_flat(a, bc);
    CHECK(ab_c == a_bc);
    CHECK(t_ab.cycle_count + t_ab_c.cycle_count ==
          t_bc.cycle_count + t_a_bc.cycle_count);
  };
  for (int n = 2; n <= 3; ++n) {
    const auto all = enumerate_flat(n);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) assoc(a, b, c);
  }
  std::mt19937_64 rng(23);
  for (int n = 4; n <= 5; ++n)
    for (int k = 0; k < 300; ++k)
      assoc(random_tangle(rng, n), random_tangle(rng, n), random_tangle(rng, n));
}

TEST_CASE("non-crossing tangles are closed under gluing") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<FlatTangle> planar;
    for (const auto& e : enumerate_flat(n))
      if (is_non_crossing(e)) planar.push_back(e);
    for (const auto& a : planar)
      for (const auto& b : planar)
        CHECK(is_non_crossing(multiply_flat(a, b).first));
  }
}
