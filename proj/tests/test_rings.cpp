#include <doctest.h>

#include <random>

#include "vtl/rings.hpp"

using namespace vtl;

namespace {

LaurentPoly A(int e, int c = 1) { return LaurentPoly::monomial(e, c); }

LaurentPoly random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-6, 6);
  std::uniform_int_distribution<int> coeff(-4, 4);
  LaurentPoly p;
  for (int k = 0; k < 3; ++k) p += A(exp(rng), coeff(rng));
  return p;
}

ArrowPoly random_arrow(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, 3);
  ArrowPoly p(random_laurent(rng));
  p += ArrowPoly::term(ZigzagMonomial::var(idx(rng)), random_laurent(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent addition merges and cancels") {
  CHECK((A(2) + A(2, -1)).is_zero());
  CHECK(A(1) + A(-1) + A(1) == A(1, 2) + A(-1));
  CHECK(LaurentPoly::zero() + A(3) == A(3));
}

TEST_CASE("laurent multiplication") {
  const LaurentPoly d = LaurentPoly::d();
  // -A^-2 * d - A^-4 = 1, the scalar core of the sigma-image inverse.
  CHECK(A(-2, -1) * d - A(-4) == LaurentPoly::one());
  CHECK(d * d == A(4) + A(0, 2) + A(-4));
}

TEST_CASE("d powers") {
  CHECK(d_power(0) == LaurentPoly::one());
  CHECK(d_power(1) == LaurentPoly::d());
  CHECK(d_power(2) == A(4) + A(0, 2) + A(-4));
  LaurentPoly fold = LaurentPoly::one();
  for (int k = 0; k <= 12; ++k) {
    CHECK(d_power(k) == fold);
    fold *= LaurentPoly::d();
  }
  CHECK_THROWS_AS(d_power(-1), OutOfRange);
}

TEST_CASE("exact division by d") {
  CHECK(LaurentPoly::d().exact_div_by_d() == LaurentPoly::one());
  CHECK(d_power(2).exact_div_by_d() == LaurentPoly::d());
  CHECK_THROWS_AS(A(1).exact_div_by_d(), NotDivisible);
  CHECK_THROWS_AS((A(2) + A(0)).exact_div_by_d(), NotDivisible);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly q = random_laurent(rng);
    CHECK((q * LaurentPoly::d()).exact_div_by_d() == q);
  }
}

TEST_CASE("zigzag monomials") {
  CHECK(ZigzagMonomial::var(1) * ZigzagMonomial::var(2) ==
        ZigzagMonomial({2, 1}));
  CHECK(ZigzagMonomial({1, 2, 1}).str() == "z1^2*z2");
  CHECK(ZigzagMonomial() < ZigzagMonomial::var(1));
  CHECK(ZigzagMonomial({3}) < ZigzagMonomial({1, 1}));  // by degree first
  CHECK_THROWS_AS(ZigzagMonomial({0}), OutOfRange);
}

TEST_CASE("zigzag factors eliminate z_0") {
  CHECK(zigzag_factor(0) == ArrowPoly(LaurentPoly::d()));
  CHECK(zigzag_factor(1) ==
        ArrowPoly::term(ZigzagMonomial::var(1), LaurentPoly::one()));
  CHECK(zigzag_factor(2) ==
        ArrowPoly::term(ZigzagMonomial::var(2), LaurentPoly::one()));
}

TEST_CASE("arrow arithmetic groups by monomial") {
  const ArrowPoly za = ArrowPoly::term(ZigzagMonomial::var(1), A(1));
  const ArrowPoly zb = ArrowPoly::term(ZigzagMonomial::var(1), A(-1));
  CHECK(za + zb == ArrowPoly::term(ZigzagMonomial::var(1), A(1) + A(-1)));
  CHECK(za * zb == ArrowPoly::term(ZigzagMonomial({1, 1}), LaurentPoly::one()));
  CHECK((za - za).is_zero());
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = random_laurent(rng), q = random_laurent(rng),
                      r = random_laurent(rng);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + LaurentPoly::zero() == p);
    CHECK(p * LaurentPoly::one() == p);
    const ArrowPoly x = random_arrow(rng), y = random_arrow(rng),
                    z = random_arrow(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * ArrowPoly::one() == x);
  }
}

TEST_CASE("forgetting zigzags is a ring homomorphism") {
  std::mt19937_64 rng(17);
  CHECK(zigzag_factor(3).forget_zigzags() == LaurentPoly::d());
  for (int k = 0; k < 100; ++k) {
    const ArrowPoly p = random_arrow(rng), q = random_arrow(rng);
    CHECK((p * q).forget_zigzags() == p.forget_zigzags() * q.forget_zigzags());
    CHECK((p + q).forget_zigzags() == p.forget_zigzags() + q.forget_zigzags());
  }
}

TEST_CASE("canonical printing") {
  CHECK(LaurentPoly::zero().str() == "0");
  CHECK(LaurentPoly::one().str() == "1");
  CHECK(LaurentPoly::d().str() == "-A^-2 - A^2");
  CHECK((A(-1) + A(1, 2)).str() == "A^-1 + 2A");
  const ArrowPoly mix =
      ArrowPoly(A(0, 3)) + ArrowPoly::term(ZigzagMonomial::var(2), A(2, -1));
  CHECK(mix.str() == "3 + (-A^2)*z2");
}
