#include "vtl/rings.hpp"

#include <algorithm>
#include <sstream>

namespace vtl {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int exponent, Int coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::d() {
  LaurentPoly p;
  p.terms_.emplace(2, -1);
  p.terms_.emplace(-2, -1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& rhs) const {
  auto a = terms_.begin(), b = rhs.terms_.begin();
  for (; a != terms_.end() && b != rhs.terms_.end(); ++a, ++b) {
    if (a->first != b->first)
      return a->first < b->first ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    if (a->second != b->second)
      return a->second < b->second ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  }
  if (a != terms_.end()) return std::strong_ordering::greater;
  if (b != rhs.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

LaurentPoly LaurentPoly::exact_div_by_d() const {
  if (is_zero()) return zero();
  // p / d = -(A^{m+2}) * (P / (A^4 + 1)) where p = A^m * P with P an
  // ordinary polynomial of valuation 0. A^4 + 1 is monic, so top-down long
  // division terminates and exactness shows up as a zero remainder.
  const int m = terms_.begin()->first;
  std::map<int, Int> rem;  // P, degrees >= 0
  for (const auto& [e, c] : terms_) rem.emplace(e - m, c);
  std::map<int, Int> quot;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    const int e = lead->first;
    const Int c = lead->second;
    if (e < 4) throw NotDivisible("not divisible by -A^2 - A^-2");
    quot[e - 4] += c;
    rem.erase(lead);
    auto [it, inserted] = rem.emplace(e - 4, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) rem.erase(it);
    }
  }
  LaurentPoly out;
  for (const auto& [e, c] : quot) out.add_term(e + m + 2, -c);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1 || e == 0) os << mag;
    if (e == 1)
      os << 'A';
    else if (e != 0)
      os << "A^" << e;
  }
  return os.str();
}

LaurentPoly d_power(int k) {
  if (k < 0) throw OutOfRange("d_power: negative exponent");
  LaurentPoly out = LaurentPoly::one();
  const LaurentPoly d = LaurentPoly::d();
  for (int i = 0; i < k; ++i) out *= d;
  return out;
}

// ---------------------------------------------------------------------------
// ZigzagMonomial

ZigzagMonomial::ZigzagMonomial(std::vector<int> indices)
    : indices_(std::move(indices)) {
  for (int k : indices_)
    if (k < 1) throw OutOfRange("zigzag index must be >= 1");
  std::sort(indices_.begin(), indices_.end());
}

ZigzagMonomial ZigzagMonomial::var(int k) {
  return ZigzagMonomial(std::vector<int>{k});
}

ZigzagMonomial ZigzagMonomial::operator*(const ZigzagMonomial& rhs) const {
  std::vector<int> merged;
  merged.reserve(indices_.size() + rhs.indices_.size());
  std::merge(indices_.begin(), indices_.end(), rhs.indices_.begin(),
             rhs.indices_.end(), std::back_inserter(merged));
  ZigzagMonomial out;
  out.indices_ = std::move(merged);
  return out;
}

std::strong_ordering ZigzagMonomial::operator<=>(
    const ZigzagMonomial& rhs) const {
  if (indices_.size() != rhs.indices_.size())
    return indices_.size() < rhs.indices_.size()
               ? std::strong_ordering::less
               : std::strong_ordering::greater;
  return indices_ <=> rhs.indices_;
}

std::string ZigzagMonomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < indices_.size();) {
    std::size_t j = i;
    while (j < indices_.size() && indices_[j] == indices_[i]) ++j;
    if (!first) os << '*';
    os << 'z' << indices_[i];
    if (j - i > 1) os << '^' << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ArrowPoly

ArrowPoly::ArrowPoly(const LaurentPoly& laurent) {
  if (!laurent.is_zero()) terms_.emplace(ZigzagMonomial(), laurent);
}

ArrowPoly ArrowPoly::term(const ZigzagMonomial& m,
                          const LaurentPoly& coefficient) {
  ArrowPoly p;
  if (!coefficient.is_zero()) p.terms_.emplace(m, coefficient);
  return p;
}

bool ArrowPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second.is_one();
}

LaurentPoly ArrowPoly::coeff(const ZigzagMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

bool ArrowPoly::is_laurent() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.empty());
}

void ArrowPoly::add_term(const ZigzagMonomial& m,
                         const LaurentPoly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ArrowPoly ArrowPoly::operator-() const {
  ArrowPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ArrowPoly& ArrowPoly::operator+=(const ArrowPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ArrowPoly& ArrowPoly::operator-=(const ArrowPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ArrowPoly ArrowPoly::operator+(const ArrowPoly& rhs) const {
  ArrowPoly out = *this;
  out += rhs;
  return out;
}

ArrowPoly ArrowPoly::operator-(const ArrowPoly& rhs) const {
  ArrowPoly out = *this;
  out -= rhs;
  return out;
}

ArrowPoly ArrowPoly::operator*(const ArrowPoly& rhs) const {
  ArrowPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : rhs.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

ArrowPoly& ArrowPoly::operator*=(const ArrowPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::strong_ordering ArrowPoly::operator<=>(const ArrowPoly& rhs) const {
  auto a = terms_.begin(), b = rhs.terms_.begin();
  for (; a != terms_.end() && b != rhs.terms_.end(); ++a, ++b) {
    if (auto cmp = a->first <=> b->first; cmp != 0) return cmp;
    if (auto cmp = a->second <=> b->second; cmp != 0) return cmp;
  }
  if (a != terms_.end()) return std::strong_ordering::greater;
  if (b != rhs.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

LaurentPoly ArrowPoly::forget_zigzags() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_)
    out += c * d_power(static_cast<int>(m.degree()));
  return out;
}

ArrowPoly ArrowPoly::exact_div_by_d() const {
  ArrowPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.exact_div_by_d());
  return out;
}

std::string ArrowPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) {
      os << c.str();
      first = false;
      continue;
    }
    std::string cs = c.str();
    if (!first) os << " + ";
    if (cs == "1") {
      os << m.str();
    } else if (cs == "-1") {
      os << '-' << m.str();
    } else if (c.terms().size() == 1 && c.terms().begin()->second > 0) {
      os << cs << '*' << m.str();
    } else {
      os << '(' << cs << ")*" << m.str();
    }
    first = false;
  }
  return os.str();
}

ArrowPoly zigzag_factor(int zeta) {
  if (zeta < 0) throw OutOfRange("zigzag_factor: negative index");
  if (zeta == 0) return ArrowPoly(LaurentPoly::d());
  return ArrowPoly::term(ZigzagMonomial::var(zeta), LaurentPoly::one());
}

}  // namespace vtl
