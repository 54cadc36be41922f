#include "homology/cohomology.hpp"

#include <algorithm>
#include <bit>

namespace krh::homology {

PolyVector apply_d(const KoszulFactorization& K, const PolyVector& v) {
  PolyVector out;
  for (auto& [m, p] : v) {
    if (p.is_zero()) continue;
    for (auto& [J, c] : K.d(m)) {
      Polynomial& slot = out[J];
      slot += c * p;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

bool is_zero(const PolyVector& v) {
  for (auto& [m, p] : v)
    if (!p.is_zero()) return false;
  return true;
}

Compiled::Compiled(KoszulFactorization K) : K_(std::move(K)), vars_(K_.vars) {
  binom_.assign(160, std::vector<unsigned long long>(160, 0));
  for (int a = 0; a < 160; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
  }
  for (auto& r : K_.rows) {
    a_.push_back(compile(r.a));
    b_.push_back(compile(r.b));
  }
}

std::vector<Compiled::Term> Compiled::compile(const Polynomial& p) const {
  std::vector<Term> out;
  for (auto& [m, c] : p.terms()) {
    Term t{std::vector<int>(vars_.size(), 0), m.total(), c};
    for (auto& [v, e] : m.terms()) {
      auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
      if (it == vars_.end() || *it != v)
        throw Error(ErrorCode::UnknownVariable, poly::var_name(v) + " not in factorization");
      t.e[it - vars_.begin()] = e;
    }
    out.push_back(std::move(t));
  }
  return out;
}

unsigned long long Compiled::count(int k, int d) const {
  if (d < 0) return 0;
  if (k == 0) return d == 0 ? 1 : 0;
  if (d + k - 1 >= 160) throw Error(ErrorCode::Internal, "graded piece too large");
  return binom_[d + k - 1][k - 1];
}

long Compiled::rank_mono(const unsigned char* e, int d) const {
  int k = nvars();
  long r = 0;
  int left = d;
  for (int t = 0; t + 1 < k; ++t) {
    int M = left - e[t];
    int rr = k - t - 1;
    if (M > 0) r += static_cast<long>(binom_[M + rr - 1][rr]);
    left -= e[t];
  }
  return r;
}

const std::vector<unsigned char>& Compiled::monos(int d) const {
  std::lock_guard<std::mutex> lock(mono_mu_);
  auto it = mono_cache_.find(d);
  if (it != mono_cache_.end()) return it->second;
  int k = nvars();
  std::vector<unsigned char> out;
  std::vector<unsigned char> e(k, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (k == 0) {
      return;
    }
    if (pos + 1 == k) {
      e[pos] = static_cast<unsigned char>(left);
      out.insert(out.end(), e.begin(), e.end());
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = static_cast<unsigned char>(v);
      self(self, pos + 1, left - v);
    }
  };
  if (d > 255) throw Error(ErrorCode::Internal, "monomial degree too large");
  rec(rec, 0, d);
  return mono_cache_.emplace(d, std::move(out)).first->second;
}

Piece Compiled::piece(int z, int j) const {
  Piece p;
  p.z = z & 1;
  p.j = j;
  for (Mask m : K_.generators(p.z)) {
    int g = K_.generator_degree(m);
    int diff = j - g;
    if (diff < 0 || diff % 2 != 0) continue;
    int d = diff / 2;
    unsigned long long c = count(nvars(), d);
    if (c == 0) continue;
    p.slot[m] = static_cast<int>(p.masks.size());
    p.masks.push_back(m);
    p.mono_deg.push_back(d);
    p.offset.push_back(p.size);
    p.size += static_cast<long>(c);
  }
  return p;
}

long Compiled::mask_slot(const Piece& p, Mask m) const {
  auto it = p.slot.find(m);
  return it == p.slot.end() ? -1 : it->second;
}

SparseVec Compiled::d_column(const Piece& src, long col, const Piece& tgt) const {
  size_t s = std::upper_bound(src.offset.begin(), src.offset.end(), col) - src.offset.begin() - 1;
  Mask m = src.masks[s];
  int d = src.mono_deg[s];
  int k = nvars();
  const unsigned char* e = monos(d).data() + (col - src.offset[s]) * k;
  SparseVec out;
  std::vector<unsigned char> ne(k);
  for (int r = 0; r < K_.rank(); ++r) {
    bool in = m >> r & 1;
    const auto& terms = in ? b_[r] : a_[r];
    if (terms.empty()) continue;
    Mask tm = in ? (m & ~(Mask(1) << r)) : (m | (Mask(1) << r));
    long ts = mask_slot(tgt, tm);
    if (ts < 0) throw Error(ErrorCode::Internal, "target generator missing from piece");
    int sign = (std::popcount(m >> (r + 1)) & 1) ? -1 : 1;
    for (auto& t : terms) {
      int nd = d + t.tot;
      if (nd != tgt.mono_deg[ts]) throw Error(ErrorCode::Internal, "degree mismatch in d");
      for (int i = 0; i < k; ++i) ne[i] = static_cast<unsigned char>(e[i] + t.e[i]);
      long idx = tgt.offset[ts] + rank_mono(ne.data(), nd);
      out.push_back({idx, sign > 0 ? t.c : Rational(-t.c)});
    }
  }
  normalize(out);
  return out;
}

SparseVec Compiled::to_sparse(const PolyVector& v, const Piece& p) const {
  SparseVec out;
  int k = nvars();
  std::vector<unsigned char> e(k);
  for (auto& [m, poly] : v) {
    if (poly.is_zero()) continue;
    long s = mask_slot(p, m);
    if (s < 0) throw Error(ErrorCode::ImageNotCocycle, "vector leaves the graded piece");
    for (auto& [mono, c] : poly.terms()) {
      std::fill(e.begin(), e.end(), 0);
      for (auto& [var, ex] : mono.terms()) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
        if (it == vars_.end() || *it != var)
          throw Error(ErrorCode::AmbientMismatch, poly::var_name(var) + " not in ambient ring");
        e[it - vars_.begin()] = static_cast<unsigned char>(ex);
      }
      if (mono.total() != p.mono_deg[s])
        throw Error(ErrorCode::ImageNotCocycle, "vector is not homogeneous of the piece degree");
      out.push_back({p.offset[s] + rank_mono(e.data(), mono.total()), c});
    }
  }
  normalize(out);
  return out;
}

PolyVector Compiled::to_poly(const SparseVec& v, const Piece& p) const {
  PolyVector out;
  int k = nvars();
  for (auto& [idx, c] : v) {
    size_t s = std::upper_bound(p.offset.begin(), p.offset.end(), idx) - p.offset.begin() - 1;
    int d = p.mono_deg[s];
    const unsigned char* e = monos(d).data() + (idx - p.offset[s]) * k;
    std::vector<std::pair<poly::Var, int>> t;
    for (int i = 0; i < k; ++i)
      if (e[i]) t.push_back({vars_[i], e[i]});
    out[p.masks[s]].add_term(poly::Monomial::from_terms(t), c);
  }
  return out;
}

DegreePiece::DegreePiece(const Compiled& C, int z, int j) {
  piece_ = C.piece(z, j);
  im_ = std::make_shared<Echelon>(piece_.size);
  if (piece_.size == 0) return;
  int n = C.K().n;
  Piece in = C.piece(z + 1, j - (n + 1));
  for (long c = 0; c < in.size; ++c) im_->insert(C.d_column(in, c, piece_));
  for (long i = 0; i < piece_.size; ++i)
    if (!im_->is_pivot(i)) cset_.push_back(i);
  if (cset_.empty()) return;
  Piece out = C.piece(z + 1, j + n + 1);
  // rows of d restricted to the columns cset_
  std::vector<std::pair<long, std::pair<long, Rational>>> trip;
  for (size_t c = 0; c < cset_.size(); ++c)
    for (auto& [r, v] : C.d_column(piece_, cset_[c], out))
      trip.push_back({r, {static_cast<long>(c), v}});
  std::sort(trip.begin(), trip.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first < b.first : a.second.first < b.second.first;
            });
  Echelon E(static_cast<long>(cset_.size()));
  for (size_t t = 0; t < trip.size();) {
    size_t u = t;
    SparseVec row;
    while (u < trip.size() && trip[u].first == trip[t].first) {
      row.push_back(trip[u].second);
      ++u;
    }
    E.insert(std::move(row));
    t = u;
  }
  E.make_reduced();
  std::vector<long> free_index(cset_.size(), -1);
  for (long c = 0; c < static_cast<long>(cset_.size()); ++c) {
    if (E.is_pivot(c)) {
      pivots_.push_back(c);
    } else {
      free_index[c] = static_cast<long>(free_.size());
      free_.push_back(c);
    }
  }
  reps_.assign(free_.size(), SparseVec());
  for (size_t f = 0; f < free_.size(); ++f) reps_[f].push_back({cset_[free_[f]], Rational(1)});
  for (long p : pivots_) {
    const SparseVec& v = E.vectors()[E.pivot_vector(p)];
    std::vector<Rational> ent(free_.size(), Rational(0));
    for (size_t t = 1; t < v.size(); ++t) {
      long fi = free_index[v[t].first];
      if (fi < 0) throw Error(ErrorCode::Internal, "row echelon form not reduced");
      ent[fi] = v[t].second;
      reps_[fi].push_back({cset_[p], Rational(-v[t].second)});
    }
    rref_free_.push_back(std::move(ent));
  }
  for (auto& r : reps_) normalize(r);
}

std::vector<Rational> DegreePiece::express(const SparseVec& y) const {
  std::vector<Rational> coords(free_.size(), Rational(0));
  if (piece_.size == 0) {
    if (!y.empty()) throw Error(ErrorCode::ImageNotCocycle, "nonzero vector in empty piece");
    return coords;
  }
  SparseVec r = im_->reduce(y);
  // r is supported on cset_; read off free coordinates and check the rest
  std::vector<Rational> at_c(cset_.size(), Rational(0));
  for (auto& [idx, c] : r) {
    auto it = std::lower_bound(cset_.begin(), cset_.end(), idx);
    if (it == cset_.end() || *it != idx)
      throw Error(ErrorCode::Internal, "reduction left an image pivot");
    at_c[it - cset_.begin()] = c;
  }
  for (size_t f = 0; f < free_.size(); ++f) coords[f] = at_c[free_[f]];
  for (size_t k = 0; k < pivots_.size(); ++k) {
    Rational expect = 0;
    for (size_t f = 0; f < free_.size(); ++f)
      if (rref_free_[k][f] != 0) expect -= rref_free_[k][f] * coords[f];
    if (expect != at_c[pivots_[k]])
      throw Error(ErrorCode::ImageNotCocycle, "vector is not a cocycle");
  }
  return coords;
}

Window degree_window(const KoszulFactorization& K, int edge_count) {
  if (K.rank() == 0) return {K.q_shift, K.q_shift};
  int lo = 1 << 30, hi = -(1 << 30);
  for (Mask m = 0; m < (Mask(1) << K.rank()); ++m) {
    int g = K.generator_degree(m);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  return {lo, std::max(hi, K.n * edge_count)};
}

GradedBasis::GradedBasis(KoszulFactorization K)
    : C_(std::make_shared<Compiled>(std::move(K))) {}

const DegreePiece& GradedBasis::at(int z, int j) {
  auto key = std::make_pair(z & 1, j);
  auto it = pieces_.find(key);
  if (it != pieces_.end()) return it->second;
  if (zero_) {
    // contractible: every piece has zero cohomology; keep the ambient piece
    // shape so express() still validates inputs
    DegreePiece dp;
    return pieces_.emplace(key, dp).first->second;
  }
  return pieces_.emplace(key, DegreePiece(*C_, z & 1, j)).first->second;
}

const DegreePiece* GradedBasis::find(int z, int j) const {
  auto it = pieces_.find({z & 1, j});
  return it == pieces_.end() ? nullptr : &it->second;
}

std::vector<PolyVector> GradedBasis::representatives(int z, int j) {
  const DegreePiece& dp = at(z, j);
  std::vector<PolyVector> out;
  for (auto& r : dp.reps()) out.push_back(C_->to_poly(r, dp.piece()));
  return out;
}

GdimPoly GradedBasis::gdim() const {
  GdimPoly g;
  for (auto& [k, dp] : pieces_) g.add(k.first, k.second, dp.dim());
  return g;
}

bool has_unit_row(const KoszulFactorization& K) {
  for (auto& r : K.rows) {
    if (!r.a.is_zero() && r.a.is_constant()) return true;
    if (!r.b.is_zero() && r.b.is_constant()) return true;
  }
  return false;
}

GradedBasis cohomology(const KoszulFactorization& K, Window w, std::optional<int> parity) {
  if (!potential(K).is_zero())
    throw Error(ErrorCode::PotentialNonzero, "cohomology needs zero potential");
  GradedBasis B(K);
  if (has_unit_row(K)) {
    B.set_zero();
    return B;
  }
  for (int j = w.j_min; j <= w.j_max; ++j)
    for (int z = 0; z < 2; ++z)
      if (!parity || *parity == z) B.at(z, j);
  return B;
}

GradedBasis cohomology_closed(const KoszulFactorization& K, std::optional<int> parity) {
  if (!potential(K).is_zero())
    throw Error(ErrorCode::PotentialNonzero, "cohomology needs zero potential");
  GradedBasis B(K);
  if (has_unit_row(K)) {
    B.set_zero();
    return B;
  }
  Window w = degree_window(K, 0);
  int lowest = 1;
  for (int j = w.j_min; j <= 0 && lowest > 0; ++j) {
    for (int z = 0; z < 2; ++z) {
      if (parity && *parity != z) continue;
      if (B.at(z, j).dim() > 0) lowest = j;
    }
  }
  if (lowest > 0) return B;
  for (int j = lowest; j <= -lowest; ++j)
    for (int z = 0; z < 2; ++z)
      if (!parity || *parity == z) B.at(z, j);
  return B;
}

InducedMaps induced_map(const mf::Morphism& f, GradedBasis& src, GradedBasis& tgt) {
  if (!(f.source == src.ambient()) || !(f.target == tgt.ambient()))
    throw Error(ErrorCode::AmbientMismatch, "morphism and bases disagree on the ambient");
  InducedMaps out;
  std::vector<std::pair<int, int>> keys;
  for (auto& [k, dp] : src.pieces()) keys.push_back(k);
  for (auto [z, j] : keys) {
    const DegreePiece& sp = src.at(z, j);
    int tz = (z + f.z2_degree) & 1, tj = j + f.q_degree;
    const DegreePiece& tp = tgt.at(tz, tj);
    DenseMatrix M(tp.dim(), std::vector<Rational>(sp.dim(), Rational(0)));
    if (sp.dim() == 0 || tp.dim() == 0) {
      out[{z, j}] = M;
      continue;
    }
    auto sg = f.source.generators(z);
    auto tg = f.target.generators(tz);
    std::unordered_map<Mask, size_t> sidx;
    for (size_t c = 0; c < sg.size(); ++c) sidx[sg[c]] = c;
    auto reps = src.representatives(z, j);
    for (size_t col = 0; col < reps.size(); ++col) {
      PolyVector img;
      for (auto& [m, p] : reps[col]) {
        size_t c = sidx.at(m);
        for (size_t r = 0; r < tg.size(); ++r) {
          const Polynomial& e = f.m[z][r][c];
          if (!e.is_zero()) img[tg[r]] += e * p;
        }
      }
      SparseVec v = tgt.compiled().to_sparse(img, tp.piece());
      auto coords = tp.express(v);
      for (int r = 0; r < tp.dim(); ++r) M[r][col] = coords[r];
    }
    out[{z, j}] = M;
  }
  return out;
}

mf::Morphism mult_endomorphism(const KoszulFactorization& K, poly::Var x) {
  if (!std::binary_search(K.vars.begin(), K.vars.end(), x))
    throw Error(ErrorCode::UnknownVariable, poly::var_name(x));
  return mf::scalar_morphism(K, Polynomial::var(x), 2);
}

} // namespace krh::homology
