#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>

#include "bvforms/monomial.hpp"
#include "bvforms/scalar.hpp"

namespace bvf {

// Exact-rational linear combination of canonical super-monomials over a
// fixed number n of Darboux pairs. No zero coefficients are ever stored, so
// equality of forms is equality of term maps.
class SuperForm {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  explicit SuperForm(int n);

  static SuperForm constant(int n, const Scalar& c);
  static SuperForm generator(int n, GeneratorId g);
  static SuperForm term(int n, const Monomial& m, const Scalar& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of m, zero if absent.
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  SuperForm& operator+=(const SuperForm& other);
  SuperForm& operator-=(const SuperForm& other);
  SuperForm& operator*=(const Scalar& c);

  friend SuperForm operator+(SuperForm a, const SuperForm& b) { return a += b; }
  friend SuperForm operator-(SuperForm a, const SuperForm& b) { return a -= b; }
  friend SuperForm operator-(SuperForm a) { return a *= Scalar(-1); }
  friend SuperForm operator*(SuperForm a, const Scalar& c) { return a *= c; }
  friend SuperForm operator*(const Scalar& c, SuperForm a) { return a *= c; }
  friend SuperForm operator*(const SuperForm& a, const SuperForm& b);

  friend bool operator==(const SuperForm& a, const SuperForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Terms whose monomial satisfies `keep`.
  SuperForm filter(const std::function<bool(const Monomial&)>& keep) const;

  // Split into auxdeg-homogeneous components.
  std::map<int, SuperForm> auxdeg_components() const;

  // True when no dx/dp generator occurs.
  bool is_function() const;

  // Common parity of all terms; nullopt for mixed parity, 0 for the zero form.
  std::optional<int> parity() const;

  // Apply a linear map defined on monomials.
  SuperForm map_terms(const std::function<SuperForm(const Monomial&)>& f) const;

 private:
  int n_;
  Terms terms_;
};

// Throws ContextMismatch when a and b live over different n.
void require_same_context(const SuperForm& a, const SuperForm& b);

SuperForm mul(const SuperForm& a, const SuperForm& b);

// Integer power; k == 0 gives 1.
SuperForm pow(const SuperForm& base, int k);

// Left partial derivative with respect to any generator. Even generators act
// as even derivations, odd ones as odd derivations.
SuperForm partial_left(GeneratorId g, const SuperForm& f);

// Interior product with the coordinate vector field of g (kind X or P):
// X_i differentiates in dx_i, P_i in dp_i.
SuperForm contract(GeneratorId g, const SuperForm& f);

// dx1*dx2*...*dxn.
Monomial top_dx(int n);
SuperForm top_form(int n);

std::ostream& operator<<(std::ostream& os, const SuperForm& f);

}  // namespace bvf
