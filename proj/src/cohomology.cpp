#include "bvforms/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/operators.hpp"

namespace bvf {

namespace {

// Exponent vectors of length n summing to total, lexicographically descending.
void compositions(int n, int total, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  const int slot = static_cast<int>(current.size());
  if (slot == n - 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = total; e >= 0; --e) {
    current.push_back(e);
    compositions(n, total - e, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  compositions(n, total, current, out);
  return out;
}

// Index sets of size k in 1..n, as sorted vectors in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = start; i <= n; ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

void append_monomials(int n, int xdeg, int pdeg, int dxcount, int dpcount,
                      std::vector<Monomial>& out) {
  if (xdeg < 0 || dpcount < 0 || pdeg < 0 || pdeg > n || dxcount < 0 || dxcount > n) return;
  const auto xs = compositions(n, xdeg);
  const auto ps = subsets(n, pdeg);
  const auto dxs = subsets(n, dxcount);
  const auto dps = compositions(n, dpcount);
  for (const auto& xe : xs)
    for (const auto& ps_set : ps)
      for (const auto& dx_set : dxs)
        for (const auto& dpe : dps) {
          Monomial m;
          for (int i = 1; i <= n; ++i) {
            m = m.with_exponent(x(i), xe[i - 1]);
            m = m.with_exponent(dp(i), dpe[i - 1]);
          }
          for (int i : ps_set) m = m.with_exponent(p(i), 1);
          for (int i : dx_set) m = m.with_exponent(dx(i), 1);
          out.push_back(m);
        }
}

SuperForm combination(int n, const std::vector<Monomial>& basis, const std::vector<Scalar>& v) {
  SuperForm f(n);
  for (std::size_t i = 0; i < v.size(); ++i) f.add_term(basis[i], v[i]);
  return f;
}

}  // namespace

std::vector<Monomial> enumerate_basis(const Slice& slice) {
  std::vector<Monomial> out;
  const int lo = slice.dpcount ? *slice.dpcount : slice.min_dpcount();
  const int hi = slice.dpcount ? *slice.dpcount : slice.max_dpcount();
  for (int m = lo; m <= hi; ++m)
    append_monomials(slice.n, slice.xdeg, slice.pdeg, slice.auxdeg + m, m, out);
  return out;
}

std::vector<Monomial> function_monomials(int n, int xdeg, int pdeg) {
  std::vector<Monomial> out;
  append_monomials(n, xdeg, pdeg, 0, 0, out);
  return out;
}

std::vector<Monomial> function_monomials(const AlgebraContext& ctx) {
  std::vector<Monomial> out;
  for (int a = 0; a <= ctx.max_xdeg; ++a)
    for (int b = 0; b <= ctx.pdeg_cap(); ++b) {
      if (ctx.max_total >= 0 && a + b > ctx.max_total) continue;
      append_monomials(ctx.n, a, b, 0, 0, out);
    }
  return out;
}

std::vector<Monomial> monomials_up_to_total(int n, int max_total) {
  std::vector<Monomial> out;
  for (int t = 0; t <= max_total; ++t)
    for (int b = 0; b <= std::min(n, t); ++b)
      for (int c = 0; c <= std::min(n, t - b); ++c)
        for (int e = 0; e <= t - b - c; ++e) append_monomials(n, t - b - c - e, b, c, e, out);
  return out;
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  if (value == 0) entries_.erase({r, c});
  else entries_[{r, c}] = value;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  set(r, c, get(r, c) + value);
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  SparseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw InvalidArgument("ragged dense matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

namespace {

using SparseRow = std::map<std::size_t, mpz_class>;

void make_primitive(SparseRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- p * row - q * pivot, where p is the pivot's leading entry and q the
// row's entry in the pivot column; the pivot column entry cancels.
void eliminate(SparseRow& row, const SparseRow& pivot, std::size_t col) {
  const mpz_class p = pivot.begin()->second;
  const mpz_class q = row.at(col);
  for (auto& [c, v] : row) v *= p;
  for (const auto& [c, v] : pivot) {
    mpz_class& target = row[c];
    target -= q * v;
    if (target == 0) row.erase(c);
  }
  make_primitive(row);
}

}  // namespace

RankKernel rank_kernel(const SparseMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Scale every row to integers; row scaling changes neither rank nor kernel.
  std::vector<SparseRow> a(rows);
  {
    std::vector<mpz_class> lcm_den(rows, 1);
    for (const auto& [rc, v] : m.entries())
      mpz_lcm(lcm_den[rc.first].get_mpz_t(), lcm_den[rc.first].get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& [rc, v] : m.entries())
      a[rc.first][rc.second] = v.get_num() * (lcm_den[rc.first] / v.get_den());
    for (auto& row : a) make_primitive(row);
  }

  // Integer-only elimination with content removal; rows below the current
  // position have no entries left of the current column.
  std::vector<std::size_t> pivot_cols;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t r = k;
    while (r < rows && (a[r].empty() || a[r].begin()->first != col)) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[k]);
    for (std::size_t i = k + 1; i < rows; ++i)
      if (!a[i].empty() && a[i].begin()->first == col) eliminate(a[i], a[k], col);
    pivot_cols.push_back(col);
    ++k;
  }

  RankKernel out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = out.rank; r-- > 0;) {
      const SparseRow& row = a[r];
      Scalar sum = 0;
      for (auto it = std::next(row.begin()); it != row.end(); ++it)
        if (v[it->first] != 0) sum += Scalar(it->second) * v[it->first];
      v[pivot_cols[r]] = -sum / Scalar(row.begin()->second);
    }
    // Normalize to a primitive integer vector with positive leading entry.
    mpz_class den_lcm = 1;
    for (const auto& e : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    mpz_class g = 0;
    for (auto& e : v) {
      e *= den_lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_num().get_mpz_t());
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& e) { return e != 0; });
    if (*lead < 0) g = -g;
    for (auto& e : v) e /= g;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return rank_kernel(m).rank; }

LinearOperator named_operator(std::string_view name) {
  if (name == "omega") return omega_wedge;
  if (name == "d") return [](const SuperForm& f) { return d(f); };
  if (name == "L") return homotopy_L;
  if (name == "delta") return bv_delta;
  if (name == "zero") return [](const SuperForm& f) { return SuperForm(f.n()); };
  throw InvalidArgument("unknown operator '" + std::string(name) + "'");
}

SparseMatrix operator_matrix(const LinearOperator& op, int n, const std::vector<Monomial>& domain,
                             const std::vector<Monomial>& codomain) {
  std::map<Monomial, std::size_t, MonomialOrder> row_of;
  for (std::size_t r = 0; r < codomain.size(); ++r) row_of.emplace(codomain[r], r);
  SparseMatrix out(codomain.size(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const SuperForm image = op(SuperForm::term(n, domain[c]));
    for (const auto& [m, coeff] : image.terms()) {
      auto it = row_of.find(m);
      if (it == row_of.end())
        throw OperatorLeavesSlice("image of " + print(domain[c]) + " contains " + print(m) +
                                  " outside the codomain");
      out.set(it->second, c, coeff);
    }
  }
  return out;
}

SparseMatrix operator_matrix(std::string_view op, const Slice& domain, const Slice& codomain) {
  if (domain.n != codomain.n) throw ContextMismatch("slices over different n");
  return operator_matrix(named_operator(op), domain.n, enumerate_basis(domain),
                         enumerate_basis(codomain));
}

std::size_t CohomologyReport::total_h() const {
  std::size_t total = 0;
  for (const auto& s : slices) total += s.h;
  return total;
}

nlohmann::json CohomologyReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : slices) {
    out.push_back({{"slice", {{"xdeg", s.xdeg}, {"pdeg", s.pdeg}, {"auxdeg", s.auxdeg}}},
                   {"dims", {{"ker", s.ker}, {"im", s.im}, {"H", s.h}}},
                   {"witnesses", s.witnesses}});
  }
  return out;
}

namespace {

struct SliceComputation {
  SliceReport report;
  std::vector<SuperForm> witnesses;
};

SliceComputation compute_slice(const Slice& slice) {
  const int n = slice.n;
  SliceComputation out;
  out.report.xdeg = slice.xdeg;
  out.report.pdeg = slice.pdeg;
  out.report.auxdeg = slice.auxdeg;

  const int lo = slice.min_dpcount();
  const int hi = slice.max_dpcount();
  std::vector<std::vector<Monomial>> bases;
  for (int m = lo; m <= hi + 1; ++m) bases.push_back(enumerate_basis(slice.at(m)));

  std::vector<SparseMatrix> maps;  // omega^ : position m -> m + 1
  std::vector<RankKernel> reductions;
  for (int m = lo; m <= hi; ++m) {
    const std::size_t idx = m - lo;
    maps.push_back(operator_matrix(omega_wedge, n, bases[idx], bases[idx + 1]));
    reductions.push_back(rank_kernel(maps.back()));
  }

  for (int m = lo; m <= hi; ++m) {
    const std::size_t idx = m - lo;
    const std::size_t dim = bases[idx].size();
    const std::size_t ker = dim - reductions[idx].rank;
    const std::size_t im = idx > 0 ? reductions[idx - 1].rank : 0;
    out.report.dim += dim;
    out.report.ker += ker;
    out.report.im += im;
    if (ker == im) continue;

    // Extend a basis of the image by kernel vectors.
    std::vector<std::vector<Scalar>> span;
    if (idx > 0) {
      const SparseMatrix& prev = maps[idx - 1];
      for (std::size_t c = 0; c < prev.cols(); ++c) {
        std::vector<Scalar> col(dim, 0);
        for (std::size_t r = 0; r < dim; ++r) col[r] = prev.get(r, c);
        span.push_back(std::move(col));
      }
    }
    std::size_t current = span.empty() ? 0 : rank(SparseMatrix::from_dense(span));
    for (const auto& v : reductions[idx].kernel) {
      span.push_back(v);
      const std::size_t next = rank(SparseMatrix::from_dense(span));
      if (next > current) {
        current = next;
        out.witnesses.push_back(combination(n, bases[idx], v));
      } else {
        span.pop_back();
      }
    }
  }
  out.report.h = out.report.ker - out.report.im;
  for (const auto& w : out.witnesses) out.report.witnesses.push_back(print(w));
  return out;
}

bool has_top_shape(const SuperForm& f) {
  for (const auto& [m, c] : f.terms()) {
    const MultiDegree deg = m.degrees();
    if (deg.dxcount != f.n() || deg.dpcount != 0) return false;
  }
  return true;
}

std::string slice_name(int xdeg, int pdeg, int auxdeg) {
  return "(xdeg " + std::to_string(xdeg) + ", pdeg " + std::to_string(pdeg) + ", auxdeg " +
         std::to_string(auxdeg) + ")";
}

}  // namespace

SliceReport slice_cohomology(const Slice& slice) { return compute_slice(slice).report; }

CohomologyReport verify_e1(const AlgebraContext& ctx) {
  ctx.validate();
  CohomologyReport report{ctx.n, {}};
  for (int a = 0; a <= ctx.max_xdeg; ++a) {
    for (int b = 0; b <= ctx.pdeg_cap(); ++b) {
      if (ctx.max_total >= 0 && a + b > ctx.max_total) continue;
      const std::size_t functions = function_monomials(ctx.n, a, b).size();
      for (int k = ctx.lowest_auxdeg(); k <= ctx.n; ++k) {
        SliceComputation s = compute_slice({ctx.n, a, b, k, std::nullopt});
        const std::size_t expected = k == ctx.n ? functions : 0;
        if (s.report.h != expected)
          throw MismatchAgainstTheorem("slice " + slice_name(a, b, k) + ": dim H = " +
                                       std::to_string(s.report.h) + ", expected " +
                                       std::to_string(expected));
        for (const auto& w : s.witnesses)
          if (!has_top_shape(w))
            throw MismatchAgainstTheorem("slice " + slice_name(a, b, k) + ": witness " + print(w) +
                                         " is not of the form f * dx^top");
        report.slices.push_back(std::move(s.report));
      }
    }
  }
  return report;
}

nlohmann::json D1Report::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : certificates)
    out.push_back({{"f", print(c.f)}, {"beta", print(c.beta)}, {"alpha", print(c.alpha)}});
  return out;
}

D1Report verify_d1_zero(const AlgebraContext& ctx) {
  ctx.validate();
  D1Report report{ctx.n, {}};
  for (const Monomial& m : function_monomials(ctx)) {
    SuperForm f = SuperForm::term(ctx.n, m);
    SuperForm beta = d(times_top(f));
    SuperForm alpha(ctx.n);
    try {
      alpha = invert_omega(beta);
    } catch (const Error& e) {
      throw MismatchAgainstTheorem("d(" + print(f) + " * dx^top) is not omega^-exact: " + e.what());
    }
    report.certificates.push_back({std::move(f), std::move(beta), std::move(alpha)});
  }
  return report;
}

CohomologyReport manin_fiber_check(const AlgebraContext& ctx) {
  ctx.validate();
  CohomologyReport report{ctx.n, {}};
  std::vector<SuperForm> witnesses;
  for (int k = ctx.lowest_auxdeg(); k <= ctx.n; ++k) {
    SliceComputation s = compute_slice({ctx.n, 0, 0, k, std::nullopt});
    const std::size_t expected = k == ctx.n ? 1 : 0;
    if (s.report.h != expected)
      throw MismatchAgainstTheorem("constant-coefficient slice auxdeg " + std::to_string(k) +
                                   ": dim H = " + std::to_string(s.report.h) + ", expected " +
                                   std::to_string(expected));
    witnesses.insert(witnesses.end(), s.witnesses.begin(), s.witnesses.end());
    report.slices.push_back(std::move(s.report));
  }
  if (witnesses.size() != 1 || witnesses.front().size() != 1 ||
      witnesses.front().terms().begin()->first != top_dx(ctx.n))
    throw MismatchAgainstTheorem("constant-coefficient cohomology is not spanned by [dx^top]");
  return report;
}

}  // namespace bvf
