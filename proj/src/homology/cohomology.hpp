#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "homology/gdim.hpp"
#include "homology/linalg.hpp"
#include "mf/koszul.hpp"

namespace krh::homology {

using mf::KoszulFactorization;
using mf::Mask;
using mf::Polynomial;
using PolyVector = std::map<Mask, Polynomial>;  // element of the free module

// d applied to a vector of polynomials
PolyVector apply_d(const KoszulFactorization& K, const PolyVector& v);
bool is_zero(const PolyVector& v);

// Basis of the graded piece K^{z,j}: pairs (generator, monomial) with the
// generator's degree plus the monomial's degree equal to j.
struct Piece {
  int z = 0, j = 0;
  std::vector<Mask> masks;
  std::vector<int> mono_deg;   // total exponent per mask
  std::vector<long> offset;    // first index per mask
  std::unordered_map<Mask, int> slot;
  long size = 0;
};

// A factorization compiled for fast piece assembly.
class Compiled {
public:
  explicit Compiled(KoszulFactorization K);

  const KoszulFactorization& K() const { return K_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  Piece piece(int z, int j) const;
  // image of basis element col of src under d, as a vector in tgt
  SparseVec d_column(const Piece& src, long col, const Piece& tgt) const;
  SparseVec to_sparse(const PolyVector& v, const Piece& p) const;
  PolyVector to_poly(const SparseVec& v, const Piece& p) const;

private:
  struct Term {
    std::vector<int> e;
    int tot;
    Rational c;
  };
  KoszulFactorization K_;
  std::vector<poly::Var> vars_;
  std::vector<std::vector<Term>> a_, b_;
  mutable std::map<int, std::vector<unsigned char>> mono_cache_;
  mutable std::mutex mono_mu_;
  std::vector<std::vector<unsigned long long>> binom_;

  unsigned long long count(int k, int d) const;
  long rank_mono(const unsigned char* e, int d) const;
  const std::vector<unsigned char>& monos(int d) const;
  long mask_slot(const Piece& p, Mask m) const;
  std::vector<Term> compile(const Polynomial& p) const;
};

// Cohomology at one (z, j).
class DegreePiece {
public:
  DegreePiece() = default;
  DegreePiece(const Compiled& C, int z, int j);

  int z() const { return piece_.z; }
  int j() const { return piece_.j; }
  int dim() const { return static_cast<int>(free_.size()); }
  const Piece& piece() const { return piece_; }
  // cocycle representatives as coordinate vectors in the piece
  const std::vector<SparseVec>& reps() const { return reps_; }
  // coordinates of a cocycle's class; throws ImageNotCocycle if the vector
  // is not a cocycle
  std::vector<Rational> express(const SparseVec& cocycle) const;

private:
  Piece piece_;
  std::shared_ptr<Echelon> im_;
  std::vector<long> cset_;           // piece indices outside the image pivots
  std::vector<long> free_;           // positions in cset_ that carry classes
  std::vector<long> pivots_;         // positions in cset_ with kernel pivots
  std::vector<std::vector<Rational>> rref_free_;  // per pivot: entries at free cols
  std::vector<SparseVec> reps_;
};

struct Window {
  int j_min = 0, j_max = 0;
};

// j_min from generator degrees; j_max = max(n*e, top generator degree)
Window degree_window(const KoszulFactorization& K, int edge_count);

class GradedBasis {
public:
  explicit GradedBasis(KoszulFactorization K);

  const KoszulFactorization& ambient() const { return C_->K(); }
  const Compiled& compiled() const { return *C_; }
  // computes the piece on first use
  const DegreePiece& at(int z, int j);
  const DegreePiece* find(int z, int j) const;
  std::vector<PolyVector> representatives(int z, int j);
  GdimPoly gdim() const;
  const std::map<std::pair<int, int>, DegreePiece>& pieces() const { return pieces_; }
  // mark everything outside the computed set as known-zero (contractible)
  void set_zero() { zero_ = true; }
  bool known_zero() const { return zero_; }

private:
  std::shared_ptr<Compiled> C_;
  std::map<std::pair<int, int>, DegreePiece> pieces_;
  bool zero_ = false;
};

// Full computation over a window, both Z/2 degrees (or only `parity`).
GradedBasis cohomology(const KoszulFactorization& K, Window w, std::optional<int> parity = {});

// Closed-graph variant: cohomology symmetric under q <-> 1/q; scans upward
// from the lowest generator degree to the first nonzero piece L and stops at
// -L. With `parity` only that Z/2 degree is computed.
GradedBasis cohomology_closed(const KoszulFactorization& K, std::optional<int> parity = {});

bool has_unit_row(const KoszulFactorization& K);

using InducedMaps = std::map<std::pair<int, int>, DenseMatrix>;
// keyed by source (z, j); matrix rows = target basis, columns = source basis
InducedMaps induced_map(const mf::Morphism& f, GradedBasis& src, GradedBasis& tgt);

mf::Morphism mult_endomorphism(const KoszulFactorization& K, poly::Var x);

} // namespace krh::homology
