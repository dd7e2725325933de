#ifndef VTL_RINGS_HPP
#define VTL_RINGS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "vtl/errors.hpp"

namespace vtl {

using Int = boost::multiprecision::cpp_int;

/// Element of Z[A^{+-1}]: sparse map from exponent of A to a nonzero
/// integer coefficient. Values are immutable in spirit: every operation
/// returns a new canonical polynomial with no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exponent, Int coefficient = 1);
  /// The loop value d = -A^2 - A^-2.
  static LaurentPoly d();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  bool operator==(const LaurentPoly& rhs) const = default;
  std::strong_ordering operator<=>(const LaurentPoly& rhs) const;

  /// Exact quotient by d = -A^2 - A^-2; throws NotDivisible.
  LaurentPoly exact_div_by_d() const;

  /// Terms in ascending exponent order, e.g. "-A^2 - A^-2".
  std::string str() const;

 private:
  void add_term(int exponent, const Int& coefficient);

  std::map<int, Int> terms_;
};

/// (-A^2 - A^-2)^k for k >= 0.
LaurentPoly d_power(int k);

/// Product of the zigzag variables z_k, k >= 1, as a sorted multiset of
/// indices. z_0 never appears here: it is eliminated at construction via
/// the identification z_0 = -A^2 - A^-2.
class ZigzagMonomial {
 public:
  ZigzagMonomial() = default;
  explicit ZigzagMonomial(std::vector<int> indices);

  static ZigzagMonomial var(int k);

  bool empty() const { return indices_.empty(); }
  std::size_t degree() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }

  ZigzagMonomial operator*(const ZigzagMonomial& rhs) const;

  bool operator==(const ZigzagMonomial& rhs) const = default;
  /// Orders by degree first, then lexicographically by index; this is the
  /// canonical printing order for arrow polynomials.
  std::strong_ordering operator<=>(const ZigzagMonomial& rhs) const;

  std::string str() const;  // e.g. "z1^2*z2"

 private:
  std::vector<int> indices_;  // sorted ascending, all >= 1
};

/// Element of Z[A^{+-1}, z_1, z_2, ...]: map from zigzag monomial to a
/// nonzero Laurent coefficient. The empty monomial keys the purely-Laurent
/// part, so an ArrowPoly with only that key is identified with a
/// LaurentPoly.
class ArrowPoly {
 public:
  ArrowPoly() = default;
  explicit ArrowPoly(const LaurentPoly& laurent);

  static ArrowPoly zero() { return {}; }
  static ArrowPoly one() { return ArrowPoly(LaurentPoly::one()); }
  static ArrowPoly term(const ZigzagMonomial& m, const LaurentPoly& coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<ZigzagMonomial, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const ZigzagMonomial& m) const;

  /// True iff no z_k variable occurs (the value lies in Z[A^{+-1}]).
  bool is_laurent() const;
  /// Coefficient of the empty monomial.
  LaurentPoly laurent_part() const { return coeff(ZigzagMonomial()); }

  ArrowPoly operator-() const;
  ArrowPoly operator+(const ArrowPoly& rhs) const;
  ArrowPoly operator-(const ArrowPoly& rhs) const;
  ArrowPoly operator*(const ArrowPoly& rhs) const;
  ArrowPoly& operator+=(const ArrowPoly& rhs);
  ArrowPoly& operator-=(const ArrowPoly& rhs);
  ArrowPoly& operator*=(const ArrowPoly& rhs);

  bool operator==(const ArrowPoly& rhs) const = default;
  std::strong_ordering operator<=>(const ArrowPoly& rhs) const;

  /// Ring homomorphism to Z[A^{+-1}] substituting z_k -> -A^2 - A^-2 for
  /// every k >= 1.
  LaurentPoly forget_zigzags() const;

  /// Exact quotient by d, applied per monomial; throws NotDivisible.
  ArrowPoly exact_div_by_d() const;

  std::string str() const;

 private:
  void add_term(const ZigzagMonomial& m, const LaurentPoly& coefficient);

  std::map<ZigzagMonomial, LaurentPoly> terms_;
};

/// z_zeta as a ring element, with z_0 eliminated: zeta = 0 yields
/// -A^2 - A^-2, zeta >= 1 yields the variable z_zeta.
ArrowPoly zigzag_factor(int zeta);

}  // namespace vtl

#endif
