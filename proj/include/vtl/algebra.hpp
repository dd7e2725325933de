#ifndef VTL_ALGEBRA_HPP
#define VTL_ALGEBRA_HPP

#include <map>
#include <string>

#include "vtl/arrow_tangle.hpp"
#include "vtl/flat_tangle.hpp"
#include "vtl/rings.hpp"

namespace vtl {

/// Linear combination of flat tangles over Z[A^{+-1}]. Multiplication is
/// the bilinear extension of tangle gluing, each consumed cycle
/// contributing a factor d = -A^2 - A^-2.
class VTLElement {
 public:
  explicit VTLElement(int n) : n_(n) {}  // the zero element

  static VTLElement identity(int n);
  static VTLElement basis(const FlatTangle& t,
                          const LaurentPoly& coeff = LaurentPoly::one());

  int strands() const { return n_; }
  const std::map<FlatTangle, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const FlatTangle& t) const;
  void add_term(const FlatTangle& t, const LaurentPoly& coeff);

  VTLElement operator+(const VTLElement& rhs) const;
  VTLElement operator-(const VTLElement& rhs) const;
  VTLElement operator*(const VTLElement& rhs) const;
  VTLElement scaled(const LaurentPoly& c) const;

  bool operator==(const VTLElement&) const = default;

  std::string str() const;

 private:
  int n_;
  std::map<FlatTangle, LaurentPoly> terms_;
};

inline VTLElement operator*(const LaurentPoly& c, const VTLElement& x) {
  return x.scaled(c);
}

/// Linear combination of arrow tangles over Z[A^{+-1}, z_1, z_2, ...], with
/// cycle factors z_zeta (z_0 identified with d).
class ATLElement {
 public:
  explicit ATLElement(int n) : n_(n) {}

  static ATLElement identity(int n);
  static ATLElement basis(const ArrowTangle& t,
                          const ArrowPoly& coeff = ArrowPoly::one());

  int strands() const { return n_; }
  const std::map<ArrowTangle, ArrowPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ArrowPoly coeff(const ArrowTangle& t) const;
  void add_term(const ArrowTangle& t, const ArrowPoly& coeff);

  ATLElement operator+(const ATLElement& rhs) const;
  ATLElement operator-(const ATLElement& rhs) const;
  ATLElement operator*(const ATLElement& rhs) const;
  ATLElement scaled(const ArrowPoly& c) const;

  bool operator==(const ATLElement&) const = default;

  std::string str() const;

 private:
  int n_;
  std::map<ArrowTangle, ArrowPoly> terms_;
};

inline ATLElement operator*(const ArrowPoly& c, const ATLElement& x) {
  return x.scaled(c);
}

/// Closure trace: sum of coeff(E) * d^{loops of the closure of E}.
LaurentPoly trace_f(const VTLElement& x);

/// Closure trace: sum of coeff(F) * product of z_zeta over closure cycles.
ArrowPoly trace_a(const ATLElement& x);

/// Tower embeddings: every basis tangle gains a through-strand.
VTLElement embed(const VTLElement& x);
ATLElement embed(const ATLElement& x);

/// Forgetful homomorphism: drop labels from every basis tangle and
/// substitute z_k -> d in every coefficient.
VTLElement forget(const ATLElement& x);

// Images of the braid generators, shared by the representations and the
// Markov-trace suites. sigma_image_*(i, n, true) is the inverse image
// -A^2 1 - A^4 E_i.
VTLElement sigma_image_f(int i, int n, bool inverse = false);
VTLElement tau_image_f(int i, int n);
ATLElement sigma_image_a(int i, int n, bool inverse = false);
ATLElement tau_image_a(int i, int n);

}  // namespace vtl

#endif
