#pragma once

#include <vector>

#include "bvforms/errors.hpp"
#include "bvforms/superform.hpp"

namespace bvf {

// de Rham differential d = sum_i dx_i * d/dx_i + dp_i * d/dp_i, the form
// generator multiplied on the left of the left derivative.
SuperForm d(const SuperForm& f);

// The odd symplectic form sum_i dp_i ^ dx_i, stored canonically as
// sum_i dx_i * dp_i.
SuperForm omega(int n);
inline SuperForm omega(const AlgebraContext& ctx) { return omega(ctx.n); }

SuperForm omega_wedge(const SuperForm& f);

// L = sum_i contract(x_i, contract(p_i, .)). On auxdeg-homogeneous a:
//   L(omega ^ a) + omega ^ L(a) = (n - auxdeg a) a.
SuperForm homotopy_L(const SuperForm& f);

// Raised by invert_omega when a component sits in auxdeg n, where omega^ is
// zero and nothing can be inverted.
class ComponentAtTopAuxdeg : public Error {
 public:
  explicit ComponentAtTopAuxdeg(SuperForm component);
  const SuperForm& component() const { return component_; }

 private:
  SuperForm component_;
};

// Raised when omega ^ (candidate preimage) fails to reproduce the input.
class NotExact : public Error {
 public:
  NotExact(SuperForm input, SuperForm residual);
  const SuperForm& input() const { return input_; }
  const SuperForm& residual() const { return residual_; }

 private:
  SuperForm input_;
  SuperForm residual_;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

// alpha = sum_k L(beta_k) / (n - k) over auxdeg components beta_k, verified by
// omega ^ alpha == beta before returning.
SuperForm invert_omega(const SuperForm& beta);

// Delta = sum_k d/dx_k d/dp_k on functions.
SuperForm bv_delta(const SuperForm& f);

// For omega-closed gamma returns the function f with
// [gamma] = [f * dx1...dxn] in H(Omega, omega^). The non-top auxdeg part is
// certified exact through invert_omega.
SuperForm canonical_rep(const SuperForm& gamma);

// f * dx1 * ... * dxn for a function f.
SuperForm times_top(const SuperForm& f);

// Polynomial in an even central formal variable h with SuperForm
// coefficients; level j holds the coefficient of h^j.
class HbarForm {
 public:
  explicit HbarForm(int n) : n_(n) {}
  HbarForm(int n, std::vector<SuperForm> levels);
  explicit HbarForm(const SuperForm& f) : HbarForm(f.n(), {f}) {}

  int n() const { return n_; }
  const std::vector<SuperForm>& levels() const { return levels_; }
  bool is_zero() const { return levels_.empty(); }

  // Coefficient of h^j (zero beyond the stored range).
  SuperForm level(std::size_t j) const;

  friend bool operator==(const HbarForm&, const HbarForm&) = default;

 private:
  void trim();

  int n_;
  std::vector<SuperForm> levels_;
};

HbarForm operator+(const HbarForm& a, const HbarForm& b);
HbarForm operator-(const HbarForm& a, const HbarForm& b);

// (h d + omega^) z: result_j = d(z_{j-1}) + omega ^ z_j.
HbarForm hbar_d(const HbarForm& z);

}  // namespace bvf
