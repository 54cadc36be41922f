#include "link/khr.hpp"

#include <memory>
#include <sstream>

#include "common/parallel.hpp"
#include "graph/maps.hpp"
#include "homology/cohomology.hpp"
#include "mf/model.hpp"

namespace krh::link {

using homology::DenseMatrix;
using homology::Echelon;
using homology::SparseVec;
using mf::PolyVector;
using poly::Polynomial;
using poly::Rational;

namespace {

constexpr int kMaxCrossings = 24;

bool gamma1_at(const Crossing& c, std::uint64_t eps, int k) {
  bool bit = eps >> k & 1;
  return c.sign > 0 ? bit : !bit;
}

std::uint64_t gamma1_mask(const LinkDiagram& D, std::uint64_t eps) {
  std::uint64_t m = 0;
  for (int k = 0; k < D.crossing_count(); ++k)
    if (gamma1_at(D.crossings()[k], eps, k)) m |= std::uint64_t(1) << k;
  return m;
}

int popcount_below(std::uint64_t eps, int c) {
  return __builtin_popcountll(eps & ((std::uint64_t(1) << c) - 1));
}

struct StateData {
  mf::KoszulFactorization raw;
  mf::QuotientModel model;
  std::unique_ptr<homology::GradedBasis> H;
  std::map<int, std::vector<PolyVector>> reps;  // j -> representatives, parity p
};

// edge matrices keyed by source j: rows = target basis at j+1, cols = source basis
using EdgeMaps = std::map<int, DenseMatrix>;

class Engine {
public:
  Engine(const LinkDiagram& D, int n, int jobs, int mu = 0, int lambda = 0)
      : D_(D), n_(n), jobs_(jobs), mu_(mu), lambda_(lambda), cube_(build_cube(D, n)) {
    p_ = D.seifert_circles() & 1;
  }

  void compute_states() {
    states_.resize(cube_.states.size());
    parallel_for(static_cast<long>(states_.size()), jobs_, [&](long s) {
      StateData& S = states_[s];
      S.raw = graph::build(cube_.states[s].graph, n_);
      S.model = mf::make_model(S.raw, mf::greedy_exclusions(S.raw));
      S.H = std::make_unique<homology::GradedBasis>(homology::cohomology_closed(S.model.K, p_));
      std::vector<int> js;
      for (auto& [key, dp] : S.H->pieces())
        if (key.first == p_ && dp.dim() > 0) js.push_back(key.second);
      for (int j : js) S.reps[j] = S.H->representatives(p_, j);
    });
  }

  void compute_edges() {
    edge_maps_.assign(cube_.edges.size(), {});
    std::vector<std::vector<int>> incoming(states_.size());
    for (int e = 0; e < static_cast<int>(cube_.edges.size()); ++e) incoming[cube_.edges[e].to].push_back(e);
    // one task per target state: expressing classes touches the target's workspace
    parallel_for(static_cast<long>(states_.size()), jobs_, [&](long t) {
      for (int e : incoming[t]) edge_maps_[e] = edge_map(cube_.edges[e]);
    });
  }

  const ResolutionCube& cube() const { return cube_; }
  std::vector<StateData>& states() { return states_; }
  const std::vector<EdgeMaps>& edge_maps() const { return edge_maps_; }
  int parity() const { return p_; }

private:
  const LinkDiagram& D_;
  int n_, jobs_, mu_, lambda_, p_ = 0;
  ResolutionCube cube_;
  std::vector<StateData> states_;
  std::vector<EdgeMaps> edge_maps_;

  EdgeMaps edge_map(const CubeEdge& E) {
    StateData& S = states_[E.from];
    StateData& T = states_[E.to];
    EdgeMaps out;
    if (S.reps.empty()) return out;
    const int r0 = 2 * E.crossing;
    std::vector<mf::ExclusionChoice> common;
    for (auto& c : S.model.chosen)
      if (c.row != r0 && c.row != r0 + 1)
        for (auto& d : T.model.chosen)
          if (c == d) common.push_back(c);
    mf::QuotientModel Ms = mf::make_model(S.raw, common);
    mf::QuotientModel Mt = mf::make_model(T.raw, common);
    int pos = -1;
    for (int k = 0; k < static_cast<int>(Ms.kept.size()); ++k)
      if (Ms.kept[k] == r0) pos = k;
    if (pos < 0 || pos + 1 >= static_cast<int>(Ms.kept.size()) || Ms.kept[pos + 1] != r0 + 1)
      throw Error(ErrorCode::Internal, "crossing rows not kept in the edge model");

    auto ctx = D_.crossings()[E.crossing].marks();
    mf::Morphism f = E.chi1 ? graph::chi1(ctx, n_, lambda_) : graph::chi0(ctx, n_, mu_);
    // local generator -> (z, column); substituted matrix entries
    std::array<std::vector<mf::Mask>, 2> sg = {f.source.generators(0), f.source.generators(1)};
    std::array<std::vector<mf::Mask>, 2> tg = {f.target.generators(0), f.target.generators(1)};
    std::array<std::vector<std::vector<Polynomial>>, 2> m;
    for (int d = 0; d < 2; ++d) {
      m[d] = f.m[d];
      for (auto& row : m[d])
        for (auto& e : row) e = poly::substitute(e, Ms.psi);
    }

    mf::Lifter lifter(Ms, S.model);
    const mf::Mask local = mf::Mask(3) << pos;
    for (auto& [j, reps] : S.reps) {
      const homology::DegreePiece* tp = T.H->find(p_, j + 1);
      if (!tp || tp->dim() == 0) continue;
      DenseMatrix M(tp->dim(), std::vector<Rational>(reps.size(), Rational(0)));
      for (size_t col = 0; col < reps.size(); ++col) {
        PolyVector v = lifter.lift(reps[col]);
        PolyVector img;
        for (auto& [J, p] : v) {
          mf::Mask L = (J >> pos) & 3;
          int d = __builtin_popcount(L) & 1;
          int c = 0;
          while (sg[d][c] != L) ++c;
          for (size_t r = 0; r < tg[d].size(); ++r) {
            const Polynomial& e = m[d][r][c];
            if (e.is_zero()) continue;
            mf::Mask Jt = (J & ~local) | (tg[d][r] << pos);
            img[Jt] += e * p;
          }
        }
        PolyVector w = mf::forward(Mt, T.model, img);
        auto coords = tp->express(T.H->compiled().to_sparse(w, tp->piece()));
        for (int r = 0; r < tp->dim(); ++r) M[r][col] = coords[r];
      }
      out[j] = std::move(M);
    }
    return out;
  }
};

// Block data after optional reduction: per state, dims by j; per edge, maps.
struct Blocks {
  std::vector<std::map<int, int>> dims;
  std::vector<EdgeMaps> maps;
};

HomologyTable assemble(const ResolutionCube& cube, const Blocks& B, int n, int parity, int q_offset) {
  struct Slot {
    int state, j;
    long offset;
  };
  // (i, J) -> blocks in state order
  std::map<std::pair<int, int>, std::vector<Slot>> cells;
  std::map<std::pair<int, int>, long> size;
  std::map<std::pair<int, int>, long> where;  // (state, j) -> offset in its cell
  for (size_t s = 0; s < cube.states.size(); ++s)
    for (auto& [j, d] : B.dims[s]) {
      if (d == 0) continue;
      std::pair<int, int> key{cube.states[s].degree, j + cube.states[s].q_shift};
      long& sz = size[key];
      cells[key].push_back({static_cast<int>(s), j, sz});
      where[{static_cast<int>(s), j}] = sz;
      sz += d;
    }
  auto cell_size = [&](int i, int J) {
    auto it = size.find({i, J});
    return it == size.end() ? 0L : it->second;
  };
  // d: (i, J) -> (i+1, J)
  std::map<std::pair<int, int>, DenseMatrix> d;
  for (auto& [key, sz] : size) {
    auto [i, J] = key;
    long tsz = cell_size(i + 1, J);
    if (tsz == 0) continue;
    DenseMatrix M(tsz, std::vector<Rational>(sz, Rational(0)));
    bool any = false;
    for (size_t e = 0; e < cube.edges.size(); ++e) {
      const CubeEdge& E = cube.edges[e];
      if (cube.states[E.from].degree != i) continue;
      for (auto& [j, A] : B.maps[e]) {
        auto so = where.find({static_cast<int>(E.from), j});
        auto to = where.find({static_cast<int>(E.to), j + 1});
        if (so == where.end() || to == where.end()) continue;
        if (j + cube.states[E.from].q_shift != J) continue;
        for (size_t r = 0; r < A.size(); ++r)
          for (size_t c = 0; c < A[r].size(); ++c)
            if (A[r][c] != 0) {
              M[to->second + r][so->second + c] += E.sign * A[r][c];
              any = true;
            }
      }
    }
    if (any) d[key] = std::move(M);
  }
  for (auto& [key, M] : d) {
    auto nx = d.find({key.first + 1, key.second});
    if (nx != d.end() && !homology::is_zero(homology::multiply(nx->second, M)))
      throw Error(ErrorCode::Internal, "d^2 != 0 in the total complex");
  }
  std::map<std::pair<int, int>, long> rank;
  for (auto& [key, M] : d) rank[key] = homology::rank_of(M);
  auto rk = [&](int i, int J) {
    auto it = rank.find({i, J});
    return it == rank.end() ? 0L : it->second;
  };
  HomologyTable T;
  T.n = n;
  T.parity = parity;
  for (auto& [key, sz] : size) {
    long h = sz - rk(key.first, key.second) - rk(key.first - 1, key.second);
    if (h < 0) throw Error(ErrorCode::Internal, "negative homology dimension");
    if (h > 0) T.dims[{key.first, key.second + q_offset}] = h;
  }
  return T;
}

int table_parity(const LinkDiagram& D, int p) {
  // one <1> per crossing puts the homology in the parity of the component count
  int parity = (p + D.crossing_count()) & 1;
  if (parity != (D.component_count() & 1)) throw Error(ErrorCode::Internal, "parity mismatch");
  return parity;
}

void check_level(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDiagram, "level n must be positive");
}

} // namespace

ResolutionCube build_cube(const LinkDiagram& D, int n) {
  check_level(n);
  const int c = D.crossing_count();
  if (c > kMaxCrossings) throw Error(ErrorCode::InvalidDiagram, "too many crossings");
  ResolutionCube R;
  R.n = n;
  const std::uint64_t N = std::uint64_t(1) << c;
  R.states.resize(N);
  for (std::uint64_t eps = 0; eps < N; ++eps) {
    CubeState& S = R.states[eps];
    S.eps = eps;
    S.graph = D.resolution(gamma1_mask(D, eps));
    for (int k = 0; k < c; ++k) {
      bool pos = D.crossings()[k].sign > 0;
      int bit = eps >> k & 1;
      S.degree += bit - (pos ? 0 : 1);
      S.q_shift += (pos ? 1 - n : n) - bit;
    }
    for (int k = 0; k < c; ++k)
      if (!(eps >> k & 1)) {
        CubeEdge E;
        E.from = eps;
        E.to = eps | std::uint64_t(1) << k;
        E.crossing = k;
        E.chi1 = D.crossings()[k].sign < 0;
        E.sign = popcount_below(eps, k) & 1 ? -1 : 1;
        R.edges.push_back(E);
      }
  }
  return R;
}

long HomologyTable::total() const {
  long t = 0;
  for (auto& [k, d] : dims) t += d;
  return t;
}

HomologyTable kr_homology(const LinkDiagram& D, int n, int jobs) {
  Engine E(D, n, jobs);
  E.compute_states();
  E.compute_edges();
  Blocks B;
  for (auto& S : E.states()) {
    std::map<int, int> dims;
    for (auto& [j, r] : S.reps) dims[j] = static_cast<int>(r.size());
    B.dims.push_back(std::move(dims));
  }
  B.maps = E.edge_maps();
  return assemble(E.cube(), B, n, table_parity(D, E.parity()), 0);
}

HomologyTable reduced_kr_homology(const LinkDiagram& D, int n, int component, int jobs) {
  check_level(n);
  if (component < 0 || component >= D.component_count())
    throw Error(ErrorCode::InvalidDiagram, "no component " + std::to_string(component));
  const Var x = D.components()[component].front();
  Engine E(D, n, jobs);
  E.compute_states();
  E.compute_edges();
  auto& states = E.states();
  const int p = E.parity();

  // per state and j: echelon of x * H^{j-2} inside H^j, and the free coordinates
  struct Quot {
    std::map<int, Echelon> im;
    std::map<int, std::vector<long>> free;
  };
  std::vector<Quot> Q(states.size());
  parallel_for(static_cast<long>(states.size()), jobs, [&](long s) {
    StateData& S = states[s];
    Polynomial xs = poly::substitute(Polynomial::var(x), S.model.psi);
    for (auto& [j, reps] : S.reps) {
      Echelon ech(static_cast<long>(reps.size()));
      auto below = S.reps.find(j - 2);
      if (below != S.reps.end()) {
        const homology::DegreePiece* tp = S.H->find(p, j);
        for (auto& v : below->second) {
          PolyVector w;
          for (auto& [J, q] : v) w[J] = xs * q;
          auto coords = tp->express(S.H->compiled().to_sparse(w, tp->piece()));
          SparseVec sv;
          for (size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0) sv.push_back({static_cast<long>(k), coords[k]});
          ech.insert(sv);
        }
      }
      std::vector<long> fr;
      for (long k = 0; k < static_cast<long>(reps.size()); ++k)
        if (!ech.is_pivot(k)) fr.push_back(k);
      Q[s].free[j] = std::move(fr);
      Q[s].im.emplace(j, std::move(ech));
    }
  });

  Blocks B;
  for (auto& q : Q) {
    std::map<int, int> dims;
    for (auto& [j, fr] : q.free) dims[j] = static_cast<int>(fr.size());
    B.dims.push_back(std::move(dims));
  }
  const auto& cube = E.cube();
  for (size_t e = 0; e < cube.edges.size(); ++e) {
    const CubeEdge& CE = cube.edges[e];
    EdgeMaps out;
    for (auto& [j, A] : E.edge_maps()[e]) {
      const auto& sf = Q[CE.from].free.at(j);
      const auto& tf = Q[CE.to].free.at(j + 1);
      const Echelon& te = Q[CE.to].im.at(j + 1);
      DenseMatrix M(tf.size(), std::vector<Rational>(sf.size(), Rational(0)));
      for (size_t c = 0; c < sf.size(); ++c) {
        SparseVec col;
        for (size_t r = 0; r < A.size(); ++r)
          if (A[r][sf[c]] != 0) col.push_back({static_cast<long>(r), A[r][sf[c]]});
        SparseVec red = te.reduce(col);
        std::map<long, Rational> at(red.begin(), red.end());
        for (size_t r = 0; r < tf.size(); ++r) {
          auto it = at.find(tf[r]);
          if (it != at.end()) M[r][c] = it->second;
        }
      }
      out[j] = std::move(M);
    }
    B.maps.push_back(std::move(out));
  }
  return assemble(cube, B, n, table_parity(D, p), n - 1);
}

oracle::LaurentPoly euler(const HomologyTable& t) {
  oracle::LaurentPoly r;
  for (auto& [k, d] : t.dims) r.add(k.second, (k.first % 2 ? -1 : 1) * d);
  return r;
}

oracle::LaurentPoly PoincarePoly::at_t(int t) const {
  oracle::LaurentPoly r;
  for (auto& [k, d] : terms) {
    Rational c = d;
    for (int e = 0; e < (k.first < 0 ? -k.first : k.first); ++e) c = k.first < 0 ? Rational(c / t) : Rational(c * t);
    r.add(k.second, c);
  }
  return r;
}

std::string PoincarePoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [i, j] = it->first;
    if (!first) o << '+';
    first = false;
    bool bare = true;
    if (it->second != 1) o << it->second, bare = false;
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (!bare) o << '*';
      o << v;
      if (e != 1) o << '^' << e;
      bare = false;
    };
    var('t', i);
    var('q', j);
    if (bare) o << 1;
  }
  return o.str();
}

PoincarePoly poincare(const HomologyTable& t) {
  PoincarePoly p;
  p.terms = t.dims;
  return p;
}

std::vector<std::map<int, DenseMatrix>> cube_edge_maps(const LinkDiagram& D, int n, int mu, int lambda, int jobs) {
  Engine E(D, n, jobs, mu, lambda);
  E.compute_states();
  E.compute_edges();
  return E.edge_maps();
}

oracle::LaurentPoly state_gdim_sum(const LinkDiagram& D, int n, int jobs) {
  Engine E(D, n, jobs);
  E.compute_states();
  oracle::LaurentPoly r;
  const auto& cube = E.cube();
  for (size_t s = 0; s < cube.states.size(); ++s)
    for (auto& [j, reps] : E.states()[s].reps)
      r.add(j + cube.states[s].q_shift, (cube.states[s].degree % 2 ? -1 : 1) * static_cast<long>(reps.size()));
  return r;
}

} // namespace krh::link
