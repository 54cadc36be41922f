#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "poly/polynomial.hpp"

namespace krh::mf {

using poly::Polynomial;
using poly::Rational;
using poly::Var;
using Mask = std::uint64_t;

struct Row {
  Polynomial a, b;
  // degree of the a-slot; kept explicitly so rows that vanish after a
  // fiber or substitution still grade their generators. -1 = derive.
  int adeg = -1;
};

// Generators are indexed by subsets J of rows (bit k = row k). Row k acting
// on e_J picks up (-1)^{#(l in J, l > k)}: wedge with a_k if k not in J,
// contraction with b_k if k in J.
class KoszulFactorization {
public:
  KoszulFactorization() = default;
  KoszulFactorization(int n, std::vector<Row> rows, std::vector<Var> vars = {},
                      int q_shift = 0, int z2_shift = 0);

  int n = 1;
  std::vector<Row> rows;
  std::vector<Var> vars;  // sorted, includes every variable of every row
  int q_shift = 0;
  int z2_shift = 0;

  int rank() const { return static_cast<int>(rows.size()); }
  int generator_degree(Mask J) const;
  int generator_z2(Mask J) const;
  // graded-lex order over subsets, restricted to one Z/2 degree
  std::vector<Mask> generators(int z2) const;

  // d(e_J) as a list of (target subset, coefficient)
  std::vector<std::pair<Mask, Polynomial>> d(Mask J) const;

  void check_rows() const;  // DegreeViolation on a bad row
  bool operator==(const KoszulFactorization& o) const;
};

Polynomial potential(const KoszulFactorization& K);

KoszulFactorization tensor(const KoszulFactorization& A, const KoszulFactorization& B);
KoszulFactorization shift(const KoszulFactorization& K, int dq, int dz2);
KoszulFactorization row_transform(const KoszulFactorization& K, int i, int j,
                                  const Polynomial& lambda);

struct Exclusion {
  KoszulFactorization K;
  poly::Bindings psi;
};
// b-side: b_i = c*x + (terms free of x), c a nonzero constant
Exclusion exclude_variable(const KoszulFactorization& K, int i, Var x);
// a-side: same with a_i, result carries a <1> shift
Exclusion exclude_variable_a(const KoszulFactorization& K, int i, Var x);

KoszulFactorization fiber(const KoszulFactorization& K, const std::vector<Var>& kill);

// Dense matrix of the differential from Z/2 degree z to z+1, rows/columns in
// generators() order.
using PolyMatrix = std::vector<std::vector<Polynomial>>;
PolyMatrix differential_matrix(const KoszulFactorization& K, int z);

PolyMatrix matmul(const PolyMatrix& A, const PolyMatrix& B);

struct Morphism {
  KoszulFactorization source, target;
  int z2_degree = 0;
  int q_degree = 0;
  // m[d]: source degree d -> target degree d + z2_degree
  std::array<PolyMatrix, 2> m;
};

bool commutes(const Morphism& f);
// entries homogeneous of the degree forced by generator degrees and q_degree
bool degrees_consistent(const Morphism& f);

Morphism identity_morphism(const KoszulFactorization& K);
Morphism scalar_morphism(const KoszulFactorization& K, const Polynomial& p, int q_degree);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
// f + (d h + h d) for an odd map h given by matrices h[d]: source d -> target d+1
Morphism add_null_homotopy(const Morphism& f, const std::array<PolyMatrix, 2>& h);

} // namespace krh::mf
