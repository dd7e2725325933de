#include <doctest.h>

#include <random>

#include "vtl/arrow_tangle.hpp"
#include "vtl/sampling.hpp"

using namespace vtl;

namespace {

// Labeled 3-strand tangle whose closure is a single cycle with label sum 4.
ArrowTangle sample_labeled3() {
  const FlatTangle base(
      3, {{{0, 1}, {0, 2}}, {{0, 3}, {1, 2}}, {{1, 3}, {1, 1}}});
  return ArrowTangle::with_labels(base, {{{{0, 1}, {0, 2}}, 1},
                                         {{{0, 3}, {1, 2}}, -6},
                                         {{{1, 1}, {1, 3}}, 3}});
}

ArrowTangle gen(ArrowGen kind, int i, int n) {
  return generator_arrow(kind, i, n);
}

// Composes left to right, returning the product tangle and every consumed
// cycle's zigzag count.
std::pair<ArrowTangle, std::vector<int>> chain(
    std::initializer_list<ArrowTangle> factors) {
  auto it = factors.begin();
  ArrowTangle acc = *it++;
  std::vector<int> zigzags;
  for (; it != factors.end(); ++it) {
    auto [product, trace] = multiply_arrow(acc, *it);
    zigzags.insert(zigzags.end(), trace.cycle_zigzags.begin(),
                   trace.cycle_zigzags.end());
    acc = product;
  }
  std::sort(zigzags.begin(), zigzags.end());
  return {acc, zigzags};
}

}  // namespace

TEST_CASE("construction validates parity and coverage") {
  const ArrowTangle t = sample_labeled3();
  CHECK(t.str() == "[(0,1)-(0,2):1,(0,3)-(1,2):-6,(1,1)-(1,3):3]");
  CHECK(ArrowTangle::identity(2).labels() == std::vector<int>{0, 0});
  CHECK_THROWS_AS(
      ArrowTangle(FlatTangle::cup_cap(1, 2), std::vector<int>{2, 1}),
      ParityViolation);
  CHECK_THROWS_AS(ArrowTangle(FlatTangle::cup_cap(1, 2), std::vector<int>{1}),
                  MissingLabel);
  CHECK_THROWS_AS(ArrowTangle::with_labels(FlatTangle::cup_cap(1, 2),
                                           {{{{0, 1}, {0, 2}}, 1}}),
                  MissingLabel);
}

TEST_CASE("generator labels") {
  const ArrowTangle f1 = gen(ArrowGen::F, 1, 2);
  CHECK(f1.base() == FlatTangle::cup_cap(1, 2));
  CHECK(f1.label_of({0, 1}) == 1);
  CHECK(f1.label_of({1, 1}) == 1);
  const ArrowTangle w1 = gen(ArrowGen::W, 1, 2);
  CHECK(w1.base() == FlatTangle::transposition(1, 2));
  CHECK(w1.labels() == std::vector<int>{0, 0});
  const ArrowTangle t1 = gen(ArrowGen::T, 1, 2);
  CHECK(t1.label_of({0, 1}) == 2);
  CHECK(t1.label_of({0, 2}) == 0);
  CHECK(gen(ArrowGen::TInv, 2, 2).label_of({0, 2}) == -2);
  CHECK_THROWS_AS(gen(ArrowGen::T, 3, 2), IndexOutOfRange);
  CHECK_THROWS_AS(gen(ArrowGen::F, 2, 2), IndexOutOfRange);
}

TEST_CASE("twists cancel") {
  auto [prod, zigzags] =
      chain({gen(ArrowGen::T, 1, 2), gen(ArrowGen::TInv, 1, 2)});
  CHECK(prod == ArrowTangle::identity(2));
  CHECK(zigzags.empty());
}

TEST_CASE("cup-cap squared consumes one trivial cycle") {
  auto [prod, zigzags] = chain({gen(ArrowGen::F, 1, 2), gen(ArrowGen::F, 1, 2)});
  CHECK(prod == gen(ArrowGen::F, 1, 2));
  CHECK(zigzags == std::vector<int>{0});
}

TEST_CASE("twist powers between cup-caps become zigzag counts") {
  for (int m = -4; m <= 4; ++m) {
    std::vector<ArrowTangle> factors{gen(ArrowGen::F, 1, 2)};
    for (int k = 0; k < std::abs(m); ++k)
      factors.push_back(gen(m > 0 ? ArrowGen::T : ArrowGen::TInv, 1, 2));
    factors.push_back(gen(ArrowGen::F, 1, 2));
    ArrowTangle acc = factors[0];
    std::vector<int> zigzags;
    for (std::size_t k = 1; k < factors.size(); ++k) {
      auto [p, trace] = multiply_arrow(acc, factors[k]);
      zigzags.insert(zigzags.end(), trace.cycle_zigzags.begin(),
                     trace.cycle_zigzags.end());
      acc = p;
    }
    CHECK(acc == gen(ArrowGen::F, 1, 2));
    CHECK(zigzags == std::vector<int>{std::abs(m)});
  }
}

TEST_CASE("crossing conjugates twists") {
  auto [lhs, lz] = chain({gen(ArrowGen::W, 1, 2), gen(ArrowGen::T, 1, 2)});
  auto [rhs, rz] = chain({gen(ArrowGen::T, 2, 2), gen(ArrowGen::W, 1, 2)});
  CHECK(lhs == rhs);
  CHECK(lz.empty());
  CHECK(rz.empty());
}

TEST_CASE("arc labels accumulate with the traversal sign") {
  // Cup-cap then crossing: the product cap picks up a flipped sign.
  auto [prod, trace] =
      multiply_arrow(gen(ArrowGen::F, 1, 2), gen(ArrowGen::W, 1, 2));
  CHECK(prod.label_of({0, 1}) == 1);
  CHECK(prod.label_of({1, 1}) == -1);
  CHECK(trace.cycle_zigzags.empty());
  // Identity is neutral.
  auto [same, id_trace] =
      multiply_arrow(sample_labeled3(), ArrowTangle::identity(3));
  CHECK(same == sample_labeled3());
  CHECK(id_trace.cycle_zigzags.empty());
}

TEST_CASE("closure cycles and zigzag counts") {
  const auto cycles = closure_cycles(sample_labeled3());
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].h == 4);
  CHECK(cycles[0].zeta == 2);
  CHECK(closure_zigzags(sample_labeled3()) == std::vector<int>{2});

  CHECK(closure_zigzags(ArrowTangle::identity(4)) == std::vector<int>(4, 0));

  const auto twist_cycles = closure_cycles(gen(ArrowGen::T, 1, 1));
  REQUIRE(twist_cycles.size() == 1);
  CHECK(twist_cycles[0].h == 2);
  CHECK(twist_cycles[0].zeta == 1);
}

TEST_CASE("inclusion keeps labels and adds a zero strand") {
  CHECK(include_arrow(ArrowTangle::identity(2)) == ArrowTangle::identity(3));
  CHECK(include_arrow(gen(ArrowGen::F, 1, 2)) == gen(ArrowGen::F, 1, 3));
  const ArrowTangle big = include_arrow(sample_labeled3());
  CHECK(big.strands() == 4);
  CHECK(big.label_of({0, 4}) == 0);
  CHECK(big.label_of({0, 1}) == 1);
}

TEST_CASE("parity labeling") {
  const ArrowTangle e1 = iota_nu(FlatTangle::cup_cap(1, 2));
  CHECK(e1 == gen(ArrowGen::F, 1, 2));
  CHECK(iota_nu(FlatTangle::identity(3)) == ArrowTangle::identity(3));
  CHECK_THROWS_AS(iota_nu(FlatTangle::transposition(1, 2)), NotParityTangle);
}

TEST_CASE("parity labeling is multiplicative with trivial cycles") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 5; ++n) {
    int found = 0;
    while (found < 60) {
      const FlatTangle e1 = random_flat_tangle(rng, n);
      const FlatTangle e2 = random_flat_tangle(rng, n);
      if (!is_parity_tangle(e1) || !is_parity_tangle(e2)) continue;
      ++found;
      auto [flat, flat_trace] = multiply_flat(e1, e2);
      auto [arrow, arrow_trace] = multiply_arrow(iota_nu(e1), iota_nu(e2));
      CHECK(arrow == iota_nu(flat));
      CHECK(static_cast<int>(arrow_trace.cycle_zigzags.size()) ==
            flat_trace.cycle_count);
      for (int z : arrow_trace.cycle_zigzags) CHECK(z == 0);
    }
  }
}

TEST_CASE("gluing is associative including zigzag factors") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < 250; ++k) {
      const ArrowTangle a = random_arrow_tangle(rng, n, 6);
      const ArrowTangle b = random_arrow_tangle(rng, n, 6);
      const ArrowTangle c = random_arrow_tangle(rng, n, 6);
      auto [left, lz] = chain({a, b, c});
      auto [bc, bcz] = chain({b, c});
      auto [right_t, right_trace] = multiply_arrow(a, bc);
      std::vector<int> rz = bcz;
      rz.insert(rz.end(), right_trace.cycle_zigzags.begin(),
                right_trace.cycle_zigzags.end());
      std::sort(rz.begin(), rz.end());
      CHECK(left == right_t);
      CHECK(lz == rz);
    }
  }
}

TEST_CASE("dropping labels recovers the flat composition") {
  std::mt19937_64 rng(53);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < 200; ++k) {
      const ArrowTangle a = random_arrow_tangle(rng, n);
      const ArrowTangle b = random_arrow_tangle(rng, n);
      auto [arrow, arrow_trace] = multiply_arrow(a, b);
      auto [flat, flat_trace] = multiply_flat(a.base(), b.base());
      CHECK(arrow.base() == flat);
      CHECK(static_cast<int>(arrow_trace.cycle_zigzags.size()) ==
            flat_trace.cycle_count);
    }
  }
}
