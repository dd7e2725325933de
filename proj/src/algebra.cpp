#include "vtl/algebra.hpp"

#include <sstream>

namespace vtl {

// ---------------------------------------------------------------------------
// VTLElement

VTLElement VTLElement::identity(int n) {
  return basis(FlatTangle::identity(n));
}

VTLElement VTLElement::basis(const FlatTangle& t, const LaurentPoly& coeff) {
  VTLElement x(t.strands());
  x.add_term(t, coeff);
  return x;
}

LaurentPoly VTLElement::coeff(const FlatTangle& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

void VTLElement::add_term(const FlatTangle& t, const LaurentPoly& coeff) {
  if (t.strands() != n_) throw SizeMismatch("tangle strand count differs");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VTLElement VTLElement::operator+(const VTLElement& rhs) const {
  if (n_ != rhs.n_) throw SizeMismatch("element strand counts differ");
  VTLElement out = *this;
  for (const auto& [t, c] : rhs.terms_) out.add_term(t, c);
  return out;
}

VTLElement VTLElement::operator-(const VTLElement& rhs) const {
  if (n_ != rhs.n_) throw SizeMismatch("element strand counts differ");
  VTLElement out = *this;
  for (const auto& [t, c] : rhs.terms_) out.add_term(t, -c);
  return out;
}

VTLElement VTLElement::operator*(const VTLElement& rhs) const {
  if (n_ != rhs.n_) throw SizeMismatch("element strand counts differ");
  VTLElement out(n_);
  for (const auto& [t1, c1] : terms_) {
    for (const auto& [t2, c2] : rhs.terms_) {
      auto [product, trace] = multiply_flat(t1, t2);
      out.add_term(product, c1 * c2 * d_power(trace.cycle_count));
    }
  }
  return out;
}

VTLElement VTLElement::scaled(const LaurentPoly& c) const {
  VTLElement out(n_);
  for (const auto& [t, coeff] : terms_) out.add_term(t, coeff * c);
  return out;
}

std::string VTLElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    os << '(' << c.str() << ")·" << t.str();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ATLElement

ATLElement ATLElement::identity(int n) {
  return basis(ArrowTangle::identity(n));
}

ATLElement ATLElement::basis(const ArrowTangle& t, const ArrowPoly& coeff) {
  ATLElement x(t.strands());
  x.add_term(t, coeff);
  return x;
}

ArrowPoly ATLElement::coeff(const ArrowTangle& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? ArrowPoly::zero() : it->second;
}

void ATLElement::add_term(const ArrowTangle& t, const ArrowPoly& coeff) {
  if (t.strands() != n_) throw SizeMismatch("tangle strand count differs");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ATLElement ATLElement::operator+(const ATLElement& rhs) const {
  if (n_ != rhs.n_) throw SizeMismatch("element strand counts differ");
  ATLElement out = *this;
  for (const auto& [t, c] : rhs.terms_) out.add_term(t, c);
  return out;
}

ATLElement ATLElement::operator-(const ATLElement& rhs) const {
  if (n_ != rhs.n_) throw SizeMismatch("element strand counts differ");
  ATLElement out = *this;
  for (const auto& [t, c] : rhs.terms_) out.add_term(t, -c);
  return out;
}

ATLElement ATLElement::operator*(const ATLElement& rhs) const {
  if (n_ != rhs.n_) throw SizeMismatch("element strand counts differ");
  ATLElement out(n_);
  for (const auto& [t1, c1] : terms_) {
    for (const auto& [t2, c2] : rhs.terms_) {
      auto [product, trace] = multiply_arrow(t1, t2);
      ArrowPoly factor = ArrowPoly::one();
      for (int zeta : trace.cycle_zigzags) factor *= zigzag_factor(zeta);
      out.add_term(product, c1 * c2 * factor);
    }
  }
  return out;
}

ATLElement ATLElement::scaled(const ArrowPoly& c) const {
  ATLElement out(n_);
  for (const auto& [t, coeff] : terms_) out.add_term(t, coeff * c);
  return out;
}

std::string ATLElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    os << '(' << c.str() << ")·" << t.str();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Traces, embeddings, forgetful map

LaurentPoly trace_f(const VTLElement& x) {
  LaurentPoly out;
  for (const auto& [t, c] : x.terms()) out += c * d_power(closure_loops(t));
  return out;
}

ArrowPoly trace_a(const ATLElement& x) {
  ArrowPoly out;
  for (const auto& [t, c] : x.terms()) {
    ArrowPoly factor = ArrowPoly::one();
    for (int zeta : closure_zigzags(t)) factor *= zigzag_factor(zeta);
    out += c * factor;
  }
  return out;
}

VTLElement embed(const VTLElement& x) {
  VTLElement out(x.strands() + 1);
  for (const auto& [t, c] : x.terms()) out.add_term(include_flat(t), c);
  return out;
}

ATLElement embed(const ATLElement& x) {
  ATLElement out(x.strands() + 1);
  for (const auto& [t, c] : x.terms()) out.add_term(include_arrow(t), c);
  return out;
}

VTLElement forget(const ATLElement& x) {
  VTLElement out(x.strands());
  for (const auto& [t, c] : x.terms()) out.add_term(t.base(), c.forget_zigzags());
  return out;
}

// ---------------------------------------------------------------------------
// Generator images

VTLElement sigma_image_f(int i, int n, bool inverse) {
  const int s = inverse ? 2 : -2;
  VTLElement x = VTLElement::identity(n).scaled(LaurentPoly::monomial(s, -1));
  x.add_term(FlatTangle::cup_cap(i, n), LaurentPoly::monomial(2 * s, -1));
  return x;
}

VTLElement tau_image_f(int i, int n) {
  return VTLElement::basis(FlatTangle::transposition(i, n));
}

ATLElement sigma_image_a(int i, int n, bool inverse) {
  const int s = inverse ? 2 : -2;
  ATLElement x = ATLElement::identity(n).scaled(
      ArrowPoly(LaurentPoly::monomial(s, -1)));
  x.add_term(generator_arrow(ArrowGen::F, i, n),
             ArrowPoly(LaurentPoly::monomial(2 * s, -1)));
  return x;
}

ATLElement tau_image_a(int i, int n) {
  return ATLElement::basis(generator_arrow(ArrowGen::W, i, n));
}

}  // namespace vtl
