#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bvforms/superform.hpp"

namespace bvf {

// Fixed (xdeg, pdeg, auxdeg) part of Omega(U). The dp-count m ranges over
// max(0, -auxdeg) <= m <= n - auxdeg; setting `dpcount` restricts the slice to
// a single position of the omega^ complex.
struct Slice {
  int n = 1;
  int xdeg = 0;
  int pdeg = 0;
  int auxdeg = 0;
  std::optional<int> dpcount;

  int min_dpcount() const { return std::max(0, -auxdeg); }
  int max_dpcount() const { return n - auxdeg; }
  Slice at(int m) const { return {n, xdeg, pdeg, auxdeg, m}; }
};

// All canonical monomials of the slice, ordered by dp-count and then by a
// fixed enumeration order.
std::vector<Monomial> enumerate_basis(const Slice& slice);

// Function monomials x^a p_S with |a| = xdeg and |S| = pdeg.
std::vector<Monomial> function_monomials(int n, int xdeg, int pdeg);

// Function monomials within ctx's caps (xdeg, pdeg, xdeg + pdeg).
std::vector<Monomial> function_monomials(const AlgebraContext& ctx);

// Every monomial of total degree <= max_total (x and dp exponents count with
// multiplicity).
std::vector<Monomial> monomials_up_to_total(int n, int max_total);

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return entries_; }

  Scalar get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add(std::size_t r, std::size_t c, const Scalar& value);

  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

struct RankKernel {
  std::size_t rank = 0;
  // Primitive integer vectors, first non-zero entry positive.
  std::vector<std::vector<Scalar>> kernel;
};

// Fraction-free sparse elimination (integer row combinations, content
// removed after each step) with first-non-zero pivoting.
RankKernel rank_kernel(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

using LinearOperator = std::function<SuperForm(const SuperForm&)>;

// "omega", "d", "L", "delta" or "zero".
LinearOperator named_operator(std::string_view name);

// Column j is the image of domain[j] expanded in the codomain basis.
// Throws OperatorLeavesSlice if an image term is not in the codomain basis.
SparseMatrix operator_matrix(const LinearOperator& op, int n, const std::vector<Monomial>& domain,
                             const std::vector<Monomial>& codomain);
SparseMatrix operator_matrix(std::string_view op, const Slice& domain, const Slice& codomain);

struct SliceReport {
  int xdeg = 0;
  int pdeg = 0;
  int auxdeg = 0;
  std::size_t dim = 0;
  std::size_t ker = 0;
  std::size_t im = 0;
  std::size_t h = 0;
  std::vector<std::string> witnesses;
};

struct CohomologyReport {
  int n = 1;
  std::vector<SliceReport> slices;

  std::size_t total_h() const;
  nlohmann::json to_json() const;
};

// Cohomology of omega^ on one (xdeg, pdeg, auxdeg) slice, with witnesses
// for every non-zero class.
SliceReport slice_cohomology(const Slice& slice);

// H(omega^) vanishes off auxdeg n and equals the span of f * dx^top at
// auxdeg n, for all slices within ctx's caps. Throws MismatchAgainstTheorem.
CohomologyReport verify_e1(const AlgebraContext& ctx);

struct ExactnessCertificate {
  SuperForm f;
  SuperForm beta;   // d(f * dx^top)
  SuperForm alpha;  // omega ^ alpha == beta
};

struct D1Report {
  int n = 1;
  std::vector<ExactnessCertificate> certificates;
  nlohmann::json to_json() const;
};

// d(f * dx^top) is omega^-exact for every function monomial f in the caps.
D1Report verify_d1_zero(const AlgebraContext& ctx);

// On constant-coefficient forms (dx, dp only) H(omega^) is one-dimensional,
// at auxdeg n, spanned by [dx^top].
CohomologyReport manin_fiber_check(const AlgebraContext& ctx);

}  // namespace bvf
