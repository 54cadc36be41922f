#include "mf/koszul.hpp"

#include <algorithm>
#include <bit>

namespace krh::mf {

namespace {

std::vector<Var> merge_vars(std::vector<Var> v, const std::vector<Row>& rows) {
  for (auto& r : rows) {
    for (Var x : r.a.variables()) v.push_back(x);
    for (Var x : r.b.variables()) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int sign_after(Mask J, int k) {
  return (std::popcount(J >> (k + 1)) & 1) ? -1 : 1;
}

} // namespace

KoszulFactorization::KoszulFactorization(int n_, std::vector<Row> rows_, std::vector<Var> vars_,
                                         int q, int z)
    : n(n_), rows(std::move(rows_)), vars(merge_vars(std::move(vars_), rows)), q_shift(q),
      z2_shift(z & 1) {
  for (auto& r : rows) {
    if (r.adeg >= 0) continue;
    if (!r.a.is_zero())
      r.adeg = r.a.degree();
    else if (!r.b.is_zero())
      r.adeg = 2 * (n + 1) - r.b.degree();
    else
      throw Error(ErrorCode::DegreeViolation, "zero row without an explicit degree");
  }
}

void KoszulFactorization::check_rows() const {
  for (size_t k = 0; k < rows.size(); ++k) {
    const Row& r = rows[k];
    if (!r.a.is_homogeneous() || !r.b.is_homogeneous())
      throw Error(ErrorCode::DegreeViolation, "inhomogeneous row " + std::to_string(k));
    if (!r.a.is_zero() && r.a.degree() != r.adeg)
      throw Error(ErrorCode::DegreeViolation, "a-entry degree mismatch in row " + std::to_string(k));
    if (!r.b.is_zero() && r.b.degree() != 2 * (n + 1) - r.adeg)
      throw Error(ErrorCode::DegreeViolation, "row degrees do not sum to 2(n+1)");
  }
}

int KoszulFactorization::generator_degree(Mask J) const {
  int d = q_shift;
  for (size_t k = 0; k < rows.size(); ++k)
    if (J >> k & 1) d += n + 1 - rows[k].adeg;
  return d;
}

int KoszulFactorization::generator_z2(Mask J) const {
  return (std::popcount(J) + z2_shift) & 1;
}

std::vector<Mask> KoszulFactorization::generators(int z2) const {
  std::vector<Mask> out;
  int r = rank();
  for (Mask J = 0; J < (Mask(1) << r); ++J)
    if (generator_z2(J) == (z2 & 1)) out.push_back(J);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lex on the sorted element lists
    while (a && b) {
      int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  return out;
}

std::vector<std::pair<Mask, Polynomial>> KoszulFactorization::d(Mask J) const {
  std::vector<std::pair<Mask, Polynomial>> out;
  for (int k = 0; k < rank(); ++k) {
    int s = sign_after(J, k);
    if (J >> k & 1) {
      if (!rows[k].b.is_zero()) out.push_back({J & ~(Mask(1) << k), rows[k].b * Rational(s)});
    } else {
      if (!rows[k].a.is_zero()) out.push_back({J | (Mask(1) << k), rows[k].a * Rational(s)});
    }
  }
  return out;
}

bool KoszulFactorization::operator==(const KoszulFactorization& o) const {
  if (n != o.n || q_shift != o.q_shift || z2_shift != o.z2_shift || rows.size() != o.rows.size())
    return false;
  for (size_t k = 0; k < rows.size(); ++k)
    if (rows[k].a != o.rows[k].a || rows[k].b != o.rows[k].b) return false;
  return vars == o.vars;
}

Polynomial potential(const KoszulFactorization& K) {
  Polynomial w;
  for (auto& r : K.rows) w += r.a * r.b;
  return w;
}

KoszulFactorization tensor(const KoszulFactorization& A, const KoszulFactorization& B) {
  if (A.n != B.n) throw Error(ErrorCode::LevelMismatch, "tensor of different levels");
  std::vector<Row> rows = A.rows;
  rows.insert(rows.end(), B.rows.begin(), B.rows.end());
  std::vector<Var> vars = A.vars;
  vars.insert(vars.end(), B.vars.begin(), B.vars.end());
  return KoszulFactorization(A.n, std::move(rows), std::move(vars), A.q_shift + B.q_shift,
                             A.z2_shift + B.z2_shift);
}

KoszulFactorization shift(const KoszulFactorization& K, int dq, int dz2) {
  KoszulFactorization r = K;
  r.q_shift += dq;
  r.z2_shift = (r.z2_shift + dz2) & 1;
  return r;
}

KoszulFactorization row_transform(const KoszulFactorization& K, int i, int j,
                                  const Polynomial& lambda) {
  if (i == j || i < 0 || j < 0 || i >= K.rank() || j >= K.rank())
    throw Error(ErrorCode::DegreeViolation, "row_transform needs two distinct rows");
  KoszulFactorization r = K;
  Polynomial na = r.rows[i].a + lambda * r.rows[j].a;
  Polynomial nb = r.rows[j].b - lambda * r.rows[i].b;
  if (!na.is_homogeneous() || !nb.is_homogeneous())
    throw Error(ErrorCode::DegreeViolation, "lambda breaks homogeneity");
  if (!lambda.is_zero() && !r.rows[i].a.is_zero() && na.degree() != r.rows[i].a.degree())
    throw Error(ErrorCode::DegreeViolation, "lambda changes the degree of a_i");
  r.rows[i].a = na;
  r.rows[j].b = nb;
  r.check_rows();
  return r;
}

namespace {

// entry = c*x + rest with rest free of x; returns psi(x) = x - entry/c
Polynomial solve_linear_in(const Polynomial& entry, Var x) {
  Rational c = 0;
  Polynomial rest;
  for (auto& [m, coef] : entry.terms()) {
    int e = m.exponent(x);
    if (e == 0) {
      rest.add_term(m, coef);
    } else if (e == 1 && m.total() == 1) {
      c = coef;
    } else {
      throw Error(ErrorCode::NotExcludable, "entry is not linear in " + poly::var_name(x));
    }
  }
  if (c == 0) throw Error(ErrorCode::NotExcludable, "entry does not involve " + poly::var_name(x));
  return rest * Rational(-1 / c);
}

Exclusion exclude_impl(const KoszulFactorization& K, int i, Var x, bool a_side) {
  if (i < 0 || i >= K.rank()) throw Error(ErrorCode::NotExcludable, "row out of range");
  const Polynomial& e = a_side ? K.rows[i].a : K.rows[i].b;
  Polynomial target = solve_linear_in(e, x);
  poly::Bindings psi = {{x, target}};
  std::vector<Row> rows;
  for (int k = 0; k < K.rank(); ++k) {
    if (k == i) continue;
    rows.push_back({poly::substitute(K.rows[k].a, psi), poly::substitute(K.rows[k].b, psi),
                    K.rows[k].adeg});
  }
  std::vector<Var> vars;
  for (Var v : K.vars)
    if (v != x) vars.push_back(v);
  int dq = 0, dz = 0;
  if (a_side) {
    dq = K.n + 1 - K.rows[i].adeg;
    dz = 1;
  }
  Exclusion out{KoszulFactorization(K.n, std::move(rows), std::move(vars), K.q_shift + dq,
                                    K.z2_shift + dz),
                psi};
  return out;
}

} // namespace

Exclusion exclude_variable(const KoszulFactorization& K, int i, Var x) {
  return exclude_impl(K, i, x, false);
}

Exclusion exclude_variable_a(const KoszulFactorization& K, int i, Var x) {
  return exclude_impl(K, i, x, true);
}

KoszulFactorization fiber(const KoszulFactorization& K, const std::vector<Var>& kill) {
  if (kill.empty()) return K;
  poly::Bindings b;
  for (Var v : kill) b[v] = Polynomial();
  KoszulFactorization r = K;
  for (auto& row : r.rows) {
    row.a = poly::substitute(row.a, b);
    row.b = poly::substitute(row.b, b);
  }
  std::vector<Var> vars;
  for (Var v : K.vars)
    if (std::find(kill.begin(), kill.end(), v) == kill.end()) vars.push_back(v);
  r.vars = vars;
  return r;
}

PolyMatrix differential_matrix(const KoszulFactorization& K, int z) {
  auto src = K.generators(z);
  auto tgt = K.generators(z + 1);
  PolyMatrix M(tgt.size(), std::vector<Polynomial>(src.size()));
  for (size_t c = 0; c < src.size(); ++c) {
    for (auto& [J, p] : K.d(src[c])) {
      size_t r = std::find(tgt.begin(), tgt.end(), J) - tgt.begin();
      M[r][c] += p;
    }
  }
  return M;
}

PolyMatrix matmul(const PolyMatrix& A, const PolyMatrix& B) {
  size_t rows = A.size(), inner = B.size();
  size_t cols = inner ? B[0].size() : 0;
  PolyMatrix C(rows, std::vector<Polynomial>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j)
        if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

namespace {

bool equal(const PolyMatrix& A, const PolyMatrix& B) {
  if (A.size() != B.size()) return false;
  for (size_t i = 0; i < A.size(); ++i)
    if (A[i] != B[i]) return false;
  return true;
}

PolyMatrix scaled(PolyMatrix A, const Rational& c) {
  for (auto& row : A)
    for (auto& e : row) e *= c;
  return A;
}

PolyMatrix added(PolyMatrix A, const PolyMatrix& B) {
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[i].size(); ++j) A[i][j] += B[i][j];
  return A;
}

} // namespace

bool commutes(const Morphism& f) {
  Rational sgn = f.z2_degree ? -1 : 1;
  for (int d = 0; d < 2; ++d) {
    PolyMatrix dt = differential_matrix(f.target, d + f.z2_degree);
    PolyMatrix ds = differential_matrix(f.source, d);
    PolyMatrix lhs = matmul(dt, f.m[d]);
    PolyMatrix rhs = scaled(matmul(f.m[(d + 1) & 1], ds), sgn);
    if (!equal(lhs, rhs)) return false;
  }
  return true;
}

bool degrees_consistent(const Morphism& f) {
  for (int d = 0; d < 2; ++d) {
    auto src = f.source.generators(d);
    auto tgt = f.target.generators(d + f.z2_degree);
    for (size_t r = 0; r < tgt.size(); ++r)
      for (size_t c = 0; c < src.size(); ++c) {
        const Polynomial& e = f.m[d][r][c];
        if (e.is_zero()) continue;
        int want = f.target.generator_degree(tgt[r]) - f.source.generator_degree(src[c]);
        // entry of degree e maps a generator of degree g to degree g + e;
        // the morphism raises degree by q_degree
        want = f.q_degree - want;
        if (!e.is_homogeneous() || e.degree() != want) return false;
      }
  }
  return true;
}

Morphism scalar_morphism(const KoszulFactorization& K, const Polynomial& p, int q_degree) {
  Morphism f{K, K, 0, q_degree, {}};
  for (int d = 0; d < 2; ++d) {
    size_t s = K.generators(d).size();
    f.m[d] = PolyMatrix(s, std::vector<Polynomial>(s));
    for (size_t i = 0; i < s; ++i) f.m[d][i][i] = p;
  }
  return f;
}

Morphism identity_morphism(const KoszulFactorization& K) { return scalar_morphism(K, 1, 0); }

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h{f.source, g.target, (f.z2_degree + g.z2_degree) & 1, f.q_degree + g.q_degree, {}};
  for (int d = 0; d < 2; ++d) h.m[d] = matmul(g.m[(d + f.z2_degree) & 1], f.m[d]);
  return h;
}

Morphism add_null_homotopy(const Morphism& f, const std::array<PolyMatrix, 2>& h) {
  if (f.z2_degree != 0) throw Error(ErrorCode::Internal, "null homotopy only for even maps");
  Morphism g = f;
  for (int d = 0; d < 2; ++d) {
    PolyMatrix dt = differential_matrix(f.target, (d + 1) & 1);
    PolyMatrix ds = differential_matrix(f.source, d);
    PolyMatrix term = added(matmul(dt, h[d]), matmul(h[(d + 1) & 1], ds));
    g.m[d] = added(g.m[d], term);
  }
  return g;
}

} // namespace krh::mf
