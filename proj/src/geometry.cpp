#include "bvforms/geometry.hpp"

#include <random>

#include "bvforms/cohomology.hpp"
#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/operators.hpp"

namespace bvf {

namespace {

FormMatrix matrix_product(const FormMatrix& a, const FormMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = b.front().size();
  const int n = a.front().front().n();
  FormMatrix out(rows, std::vector<SuperForm>(cols, SuperForm(n)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) out[i][j] += mul(a[i][k], b[k][j]);
  return out;
}

FormMatrix transpose(const FormMatrix& m) {
  FormMatrix out(m.empty() ? 0 : m[0].size(), std::vector<SuperForm>(m.size(), SuperForm(1)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

FormMatrix minor_matrix(const FormMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  FormMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    std::vector<SuperForm> row;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != skip_col) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

FormMatrix identity_matrix(int n) {
  FormMatrix out(n, std::vector<SuperForm>(n, SuperForm(n)));
  for (int i = 0; i < n; ++i) out[i][i] = SuperForm::constant(n, 1);
  return out;
}

// Gauss-Jordan over Q; nullopt if singular.
std::optional<std::vector<std::vector<Scalar>>> invert_rational(std::vector<std::vector<Scalar>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && a[r][col] == 0) ++r;
    if (r == n) return std::nullopt;
    std::swap(a[r], a[col]);
    std::swap(inv[r], inv[col]);
    const Scalar pivot = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= pivot;
      inv[col][j] /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Scalar factor = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[col][j];
        inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

bool only_uses(const SuperForm& f, const std::function<bool(GeneratorId)>& allowed) {
  for (const auto& [m, c] : f.terms())
    for (GeneratorKind kind : {GeneratorKind::X, GeneratorKind::P, GeneratorKind::DX, GeneratorKind::DP})
      for (int i = 1; i <= f.n(); ++i)
        if (m.contains({kind, i}) && !allowed({kind, i})) return false;
  return true;
}

}  // namespace

SymplecticCheck is_symplectomorphism(const CoordinateChange& c) {
  SuperForm residual = substitute(omega(c.n), c) - omega(c.n);
  const bool ok = residual.is_zero();
  return {ok, std::move(residual)};
}

SuperMatrix jacobian(const CoordinateChange& c) {
  c.validate();
  const int n = c.n;
  SuperMatrix j{n, {}, {}, {}, {}};
  for (FormMatrix* block : {&j.a, &j.b, &j.c, &j.d})
    block->assign(n, std::vector<SuperForm>(n, SuperForm(n)));
  for (int row = 0; row < n; ++row) {
    for (int col = 1; col <= n; ++col) {
      j.a[row][col - 1] = partial_left(x(col), c.xprime[row]);
      j.b[row][col - 1] = partial_left(p(col), c.xprime[row]);
      j.c[row][col - 1] = partial_left(x(col), c.pprime[row]);
      j.d[row][col - 1] = partial_left(p(col), c.pprime[row]);
    }
  }
  return j;
}

SuperForm determinant(const FormMatrix& m) {
  if (m.empty()) throw InvalidArgument("determinant of an empty matrix");
  const int n = m.front().front().n();
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InvalidArgument("determinant of a non-square matrix");
    for (const auto& e : row)
      if (e.parity() != 0) throw InvalidArgument("determinant needs even entries, got " + print(e));
  }
  if (m.size() == 1) return m[0][0];
  SuperForm out(n);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j].is_zero()) continue;
    SuperForm term = mul(m[0][j], determinant(minor_matrix(m, 0, j)));
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

SuperForm invert_unit(const SuperForm& u) {
  const Scalar c = u.coefficient(Monomial{});
  if (c == 0) throw NonInvertibleD("det(D) = " + print(u) + " has zero scalar part");
  SuperForm nu = u * (1 / c) - SuperForm::constant(u.n(), 1);
  for (const auto& [m, coeff] : nu.terms())
    if (m.odd_mask() == 0)
      throw NonInvertibleD("det(D) = " + print(u) + " is not a constant times (1 + nilpotent)");
  // (1 + nu)^{-1} = sum_k (-nu)^k, finite because nu is nilpotent.
  SuperForm inverse = SuperForm::constant(u.n(), 1);
  SuperForm power = SuperForm::constant(u.n(), 1);
  const SuperForm minus_nu = -nu;
  for (;;) {
    power = mul(power, minus_nu);
    if (power.is_zero()) break;
    inverse += power;
  }
  return inverse * (1 / c);
}

SuperForm berezinian(const SuperMatrix& m) {
  const SuperForm det_d = determinant(m.d);
  const SuperForm det_d_inv = invert_unit(det_d);
  const std::size_t size = m.d.size();
  FormMatrix d_inv(size, std::vector<SuperForm>(size, SuperForm(m.n)));
  if (size == 1) {
    d_inv[0][0] = det_d_inv;
  } else {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        SuperForm cofactor = determinant(minor_matrix(m.d, j, i));
        if ((i + j) % 2) cofactor = -cofactor;
        d_inv[i][j] = mul(cofactor, det_d_inv);
      }
  }
  // With left derivatives the chain rule reads J(F o y) = J(y) J(F)|_y for the
  // transposed layout (rows: coordinates, columns: primed functions), so the
  // Schur complement is taken there: A^T - C^T (D^T)^{-1} B^T.
  const FormMatrix correction =
      matrix_product(matrix_product(transpose(m.c), transpose(d_inv)), transpose(m.b));
  FormMatrix schur = transpose(m.a);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) schur[i][j] -= correction[i][j];
  return mul(determinant(schur), det_d_inv);
}

SuperForm semidensity_factor(const CoordinateChange& c) {
  if (!is_symplectomorphism(c).ok)
    throw InvalidArgument("semidensity factor needs a symplectomorphism");
  return canonical_rep(substitute(top_form(c.n), c));
}

InvarianceReport verify_delta_invariance(const CoordinateChange& c, const AlgebraContext& ctx) {
  ctx.validate();
  if (ctx.n != c.n) throw ContextMismatch("caps and coordinate change disagree on n");
  if (!is_symplectomorphism(c).ok)
    throw InvalidArgument("Delta invariance needs a symplectomorphism");
  InvarianceReport report;
  for (const Monomial& m : function_monomials(ctx)) {
    const SuperForm f = SuperForm::term(c.n, m);
    const SuperForm transported_delta = canonical_rep(substitute(times_top(bv_delta(f)), c));
    const SuperForm delta_transported = bv_delta(canonical_rep(substitute(times_top(f), c)));
    if (transported_delta != delta_transported)
      throw MismatchAgainstTheorem("Delta does not commute with the change at f' = " + print(f) +
                                   ": " + print(transported_delta) + " vs " +
                                   print(delta_transported));
    ++report.cases;
  }
  return report;
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::LinearSymplectic: return "LinearSymplectic";
    case FamilyTag::PointTransformation: return "PointTransformation";
    case FamilyTag::OddShift: return "OddShift";
    case FamilyTag::Composite: return "Composite";
  }
  return "?";
}

GeneratedChange linear_symplectic(const std::vector<std::vector<Scalar>>& a,
                                  const std::vector<Scalar>& translation) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(translation.size()) != n)
    throw InvalidArgument("translation length must equal n");
  const auto inv = invert_rational(a);
  if (!inv) throw InvalidArgument("linear part is singular");
  CoordinateChange c{n, {}, {}};
  for (int i = 0; i < n; ++i) {
    SuperForm xi = SuperForm::constant(n, translation[i]);
    SuperForm pi(n);
    for (int j = 0; j < n; ++j) {
      xi += SuperForm::generator(n, x(j + 1)) * a[i][j];
      pi += SuperForm::generator(n, p(j + 1)) * (*inv)[j][i];
    }
    c.xprime.push_back(std::move(xi));
    c.pprime.push_back(std::move(pi));
  }
  std::string text = "x' = A x + t, A = [";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) text += (j ? " " : "") + bvf::to_string(a[i][j]);
    text += i + 1 < n ? "; " : "]";
  }
  return {FamilyTag::LinearSymplectic, text, std::move(c)};
}

GeneratedChange point_transformation(const std::vector<SuperForm>& h) {
  const int n = static_cast<int>(h.size());
  if (n == 0) throw InvalidArgument("point transformation needs n >= 1");
  CoordinateChange c{n, {}, {}};
  for (int i = 0; i < n; ++i) {
    if (h[i].n() != n) throw ContextMismatch("h components over a different n");
    if (!only_uses(h[i], [i](GeneratorId g) { return g.kind == GeneratorKind::X && g.index <= i; }))
      throw InvalidArgument("h_" + std::to_string(i + 1) + " = " + print(h[i]) +
                            " must depend on x_1..x_" + std::to_string(i) + " only");
    c.xprime.push_back(SuperForm::generator(n, x(i + 1)) + h[i]);
  }
  // Dg = I + N with N strictly lower triangular; (Dg)^{-1} = sum_k (-N)^k.
  FormMatrix minus_nilpotent(n, std::vector<SuperForm>(n, SuperForm(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) minus_nilpotent[i][j] = -partial_left(x(j + 1), h[i]);
  FormMatrix inverse = identity_matrix(n);
  FormMatrix power = identity_matrix(n);
  for (int k = 1; k < n; ++k) {
    power = matrix_product(power, minus_nilpotent);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inverse[i][j] += power[i][j];
  }
  for (int i = 0; i < n; ++i) {
    SuperForm pi(n);
    for (int j = 0; j < n; ++j) pi += mul(inverse[j][i], SuperForm::generator(n, p(j + 1)));
    c.pprime.push_back(std::move(pi));
  }
  std::string text = "x' = x + h(x), h = (";
  for (int i = 0; i < n; ++i) text += (i ? ", " : "") + print(h[i]);
  return {FamilyTag::PointTransformation, text + ")", std::move(c)};
}

GeneratedChange odd_shift(const SuperForm& h) {
  const int n = h.n();
  if (!only_uses(h, [](GeneratorId g) { return g.kind == GeneratorKind::P; }))
    throw InvalidArgument("odd shift generator " + print(h) + " must be a polynomial in p only");
  if (!h.is_zero() && h.parity() != 1)
    throw InvalidArgument("odd shift generator " + print(h) + " must be odd");
  CoordinateChange c = CoordinateChange::identity(n);
  for (int i = 0; i < n; ++i) c.xprime[i] += partial_left(p(i + 1), h);
  return {FamilyTag::OddShift, "x' = x + dH/dp, H = " + print(h), std::move(c)};
}

GeneratedChange composite(const GeneratedChange& outer, const GeneratedChange& inner) {
  return {FamilyTag::Composite, "(" + outer.description + ") o (" + inner.description + ")",
          compose(outer.change, inner.change)};
}

GeneratedChange sample_family(FamilyTag tag, int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxPairs) throw InvalidArgument("n out of range");
  std::mt19937_64 rng(seed);
  auto small = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (tag) {
    case FamilyTag::LinearSymplectic: {
      for (;;) {
        std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, 0));
        std::vector<Scalar> t(n, 0);
        for (auto& row : a)
          for (auto& e : row) e = small(-2, 2);
        for (auto& e : t) e = small(-2, 2);
        if (invert_rational(a)) return linear_symplectic(a, t);
      }
    }
    case FamilyTag::PointTransformation: {
      std::vector<SuperForm> h;
      for (int i = 0; i < n; ++i) {
        SuperForm hi = SuperForm::constant(n, small(-2, 2));
        for (int j = 1; j <= i; ++j) {
          const SuperForm xj = SuperForm::generator(n, x(j));
          hi += xj * Scalar(small(-2, 2));
          for (int k = j; k <= i; ++k)
            hi += mul(xj, SuperForm::generator(n, x(k))) * Scalar(small(-1, 1));
        }
        h.push_back(std::move(hi));
      }
      // Guarantee a non-linear term whenever one is possible.
      if (n >= 2) h[1] += pow(SuperForm::generator(n, x(1)), 2);
      return point_transformation(h);
    }
    case FamilyTag::OddShift: {
      SuperForm hamiltonian(n);
      for (int i = 1; i <= n; ++i) hamiltonian += SuperForm::generator(n, p(i)) * Scalar(small(-2, 2));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            int coeff = small(-2, 2);
            if (coeff == 0) coeff = 1;
            hamiltonian += mul(mul(SuperForm::generator(n, p(i)), SuperForm::generator(n, p(j))),
                               SuperForm::generator(n, p(k))) * Scalar(coeff);
          }
      return odd_shift(hamiltonian);
    }
    case FamilyTag::Composite:
      break;
  }
  throw InvalidArgument("sample_family draws base families only");
}

std::vector<GeneratedChange> standard_families(int n, std::uint64_t seed) {
  std::vector<GeneratedChange> base{
      sample_family(FamilyTag::LinearSymplectic, n, seed),
      sample_family(FamilyTag::PointTransformation, n, seed + 1),
      sample_family(FamilyTag::OddShift, n, seed + 2),
  };
  std::vector<GeneratedChange> out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j)
      if (i != j) out.push_back(composite(base[i], base[j]));
  return out;
}

nlohmann::json to_json(const CoordinateChange& c) {
  nlohmann::json xs = nlohmann::json::array();
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& f : c.xprime) xs.push_back(print(f));
  for (const auto& f : c.pprime) ps.push_back(print(f));
  return {{"n", c.n}, {"xprime", xs}, {"pprime", ps}};
}

CoordinateChange coordinate_change_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("xprime") || !j.contains("pprime"))
    throw InvalidCoordinateChange("coordinate change JSON needs n, xprime and pprime");
  if (!j.at("n").is_number_integer()) throw InvalidCoordinateChange("n must be an integer");
  CoordinateChange c{j.at("n").get<int>(), {}, {}};
  if (c.n < 1 || c.n > kMaxPairs) throw InvalidCoordinateChange("n out of range");
  for (const auto& e : j.at("xprime")) c.xprime.push_back(parse(e.get<std::string>(), c.n));
  for (const auto& e : j.at("pprime")) c.pprime.push_back(parse(e.get<std::string>(), c.n));
  c.validate();
  return c;
}

}  // namespace bvf
