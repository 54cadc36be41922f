#pragma once

#include <vector>

#include "poly/polynomial.hpp"

namespace krh::homology {

using poly::Rational;
using SparseVec = std::vector<std::pair<long, Rational>>;  // sorted by index, no zeros

void normalize(SparseVec& v);  // sort, merge, drop zeros

// Vectors in echelon form: each stored vector has a distinct leading (smallest)
// index with coefficient 1.
class Echelon {
public:
  explicit Echelon(long dim = 0);

  long dim() const { return dim_; }
  long rank() const { return static_cast<long>(vecs_.size()); }
  // reduce against the stored vectors until the leading index is new; store
  // and return true, or return false if v lies in the span
  bool insert(SparseVec v);
  // full reduction: the result has no entries at pivot indices
  SparseVec reduce(const SparseVec& v) const;
  bool is_pivot(long i) const { return pivot_of_[i] >= 0; }
  const std::vector<SparseVec>& vectors() const { return vecs_; }
  long pivot_vector(long i) const { return pivot_of_[i]; }

  // bring to reduced row echelon form (each vector has zeros at all other
  // pivot indices)
  void make_reduced();

private:
  long dim_;
  std::vector<SparseVec> vecs_;
  std::vector<long> pivot_of_;

  // work space for reductions
  mutable std::vector<Rational> acc_;
  mutable std::vector<char> touched_;
  SparseVec reduce_impl(const SparseVec& v, bool stop_at_new_lead) const;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

long rank_of(const DenseMatrix& M);
DenseMatrix multiply(const DenseMatrix& A, const DenseMatrix& B);
bool is_zero(const DenseMatrix& M);

} // namespace krh::homology
