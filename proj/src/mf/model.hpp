#pragma once

#include <map>
#include <vector>

#include "mf/koszul.hpp"

namespace krh::mf {

using PolyVector = std::map<Mask, Polynomial>;

struct ExclusionChoice {
  int row;      // row of the raw factorization
  bool a_side;  // exclude through a_row instead of b_row
  bool operator<(const ExclusionChoice& o) const { return row < o.row; }
  bool operator==(const ExclusionChoice& o) const { return row == o.row && a_side == o.a_side; }
};

// The raw factorization with a set of rows excluded simultaneously. The linear
// entries of the chosen rows are killed by the ring map psi, which eliminates
// the leading variable (smallest id) of each vector of their reduced echelon
// form and fixes every other variable. Generator J of the model corresponds to
// the raw generator expand(J) | a_mask, up to the sign canonical_sign().
struct QuotientModel {
  std::vector<ExclusionChoice> chosen;  // sorted by row
  std::vector<int> kept;                // raw rows kept, ascending
  Mask a_mask = 0, b_mask = 0;
  poly::Bindings psi;
  KoszulFactorization K;
};

bool is_linear_form(const Polynomial& p);

QuotientModel make_model(const KoszulFactorization& raw, std::vector<ExclusionChoice> chosen);

// Maximal set of linearly independent linear entries, greedy in row order,
// preferring the b-side. Rows in `skip` are not considered.
std::vector<ExclusionChoice> greedy_exclusions(const KoszulFactorization& raw, Mask skip = 0);

Mask model_to_raw(const QuotientModel& M, Mask J);
int canonical_sign(Mask raw_J, Mask a_mask);

// Quotient map between two models of the same raw factorization, where
// `from.chosen` is a subset of `to.chosen`.
PolyVector forward(const QuotientModel& from, const QuotientModel& to, const PolyVector& v);

// A right inverse of forward() on cocycles: lifts a cocycle of `to` to a
// cocycle of `from` whose forward image is exactly the input.
class Lifter {
public:
  Lifter(const QuotientModel& from, const QuotientModel& to);
  PolyVector lift(const PolyVector& v) const;

private:
  struct Step {
    KoszulFactorization before;
    int pos;
    bool a_side;
  };
  const QuotientModel* from_;
  const QuotientModel* to_;
  std::vector<Step> steps_;
};

} // namespace krh::mf
