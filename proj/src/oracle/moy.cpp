#include "oracle/moy.hpp"

#include <map>
#include <set>

#include "common/error.hpp"
#include "link/khr.hpp"

namespace krh::oracle {

using poly::Var;

namespace {

// Wide edges with ports 4w+0, 4w+1 (leaving) and 4w+2, 4w+3 (entering);
// to[out port] = in port reached along the 1-edges.
struct Net {
  std::vector<char> alive;
  std::vector<int> to;
  int circles = 0;
};

int wide_of(int port) { return port / 4; }
bool is_in(int port) { return port % 4 >= 2; }

Net to_net(const graph::MoyGraph& g) {
  g.validate();
  if (!g.closed()) throw Error(ErrorCode::InvalidGraph, "moy_eval needs a closed graph");
  std::map<Var, int> in_port, out_port;
  std::map<Var, Var> arc;
  int w = 0;
  for (auto& it : g.items) {
    if (it.wide) {
      out_port[it.w.o1] = 4 * w;
      out_port[it.w.o2] = 4 * w + 1;
      in_port[it.w.i1] = 4 * w + 2;
      in_port[it.w.i2] = 4 * w + 3;
      ++w;
    } else {
      arc[it.arc.from] = it.arc.to;
    }
  }
  Net N;
  N.alive.assign(w, 1);
  N.to.assign(4 * w, -1);
  std::set<Var> used;
  for (auto& [m, p] : out_port) {
    Var x = m;
    while (!in_port.count(x)) {
      used.insert(x);
      x = arc.at(x);
    }
    N.to[p] = in_port.at(x);
  }
  for (auto& [from, to] : arc) {
    if (used.count(from)) continue;
    Var x = from;
    do {
      used.insert(x);
      x = arc.at(x);
    } while (x != from);
    ++N.circles;
  }
  N.circles += g.free_loops;
  return N;
}

// remove the edges in `dead`; strand[in port] = out port of a dead edge
Net splice(const Net& N, const std::set<int>& dead, const std::map<int, int>& strand) {
  Net R = N;
  for (int w : dead) R.alive[w] = 0;
  std::set<int> visited;
  for (size_t p = 0; p < N.to.size(); ++p) {
    if (!N.alive[wide_of(p)] || dead.count(wide_of(p)) || is_in(p)) continue;
    int t = N.to[p];
    while (dead.count(wide_of(t))) {
      visited.insert(t);
      t = N.to[strand.at(t)];
    }
    R.to[p] = t;
  }
  for (auto& [in, out] : strand) {
    if (visited.count(in)) continue;
    int t = in;
    do {
      visited.insert(t);
      t = N.to[strand.at(t)];
    } while (t != in);
    ++R.circles;
  }
  for (int w : dead)
    for (int k = 0; k < 4; ++k) R.to[4 * w + k] = -1;
  return R;
}

struct Term {
  LaurentPoly coeff;
  Net net;
};

class Evaluator {
public:
  Evaluator(int n, int order) : n_(n), order_(order) {}

  LaurentPoly eval(const Net& N) {
    std::vector<std::vector<Term>> options;
    const int W = static_cast<int>(N.alive.size());
    for (int w = 0; w < W; ++w) {
      if (!N.alive[w]) continue;
      for (int a = 0; a < 2; ++a) {
        int t = N.to[4 * w + a];
        if (wide_of(t) == w) {
          // digon: the other entering strand runs straight to the other exit
          int b = t - 4 * w - 2;
          options.push_back({{quantum_int(n_ - 1), splice(N, {w}, {{4 * w + 2 + (1 - b), 4 * w + (1 - a)}})}});
        }
      }
    }
    for (int w = 0; w < W && options.empty(); ++w) {
      if (!N.alive[w]) continue;
      int t0 = N.to[4 * w], t1 = N.to[4 * w + 1];
      int v = wide_of(t0);
      if (v != w && wide_of(t1) == v) {
        // ladder: merge into one wide edge with w's entries and v's exits
        Net R = N;
        R.to[4 * w] = N.to[4 * v];
        R.to[4 * w + 1] = N.to[4 * v + 1];
        R.alive[v] = 0;
        for (int k = 0; k < 4; ++k) R.to[4 * v + k] = -1;
        // exits of v that fed v's own entries are impossible (digons go first);
        // exits of v into w's entries are fine
        options.push_back({{quantum_int(2), R}});
      }
    }
    for (int w = 0; w < W && options.empty(); ++w) {
      if (!N.alive[w]) continue;
      for (int a = 0; a < 2; ++a) {
        int t = N.to[4 * w + a];
        int v = wide_of(t);
        if (v == w || wide_of(N.to[4 * w + 1 - a]) == v) continue;
        for (int c = 0; c < 2; ++c) {
          int s = N.to[4 * v + c];
          if (wide_of(s) != w || wide_of(N.to[4 * v + 1 - c]) == w) continue;
          // square: w -> v through t, v -> w through s; those two edges vanish
          int a1 = 4 * w + 1 - a, b1 = 4 * w + 2 + (1 - (s - 4 * w - 2));
          int a2 = 4 * v + 1 - c, b2 = 4 * v + 2 + (1 - (t - 4 * v - 2));
          std::map<int, int> st1 = {{b1, a1}, {b2, a2}};
          std::map<int, int> st2 = {{b2, a1}, {b1, a2}};
          options.push_back({{quantum_int(n_ - 2), splice(N, {w, v}, st1)}, {LaurentPoly(1), splice(N, {w, v}, st2)}});
        }
      }
    }
    bool any = false;
    for (int w = 0; w < W; ++w) any |= N.alive[w] != 0;
    if (!any) {
      LaurentPoly r(1);
      for (int k = 0; k < N.circles; ++k) r *= quantum_int(n_);
      return r;
    }
    if (options.empty()) throw Error(ErrorCode::IrreducibleGraph, "no relation applies");
    auto& pick = order_ == 0 ? options.front() : options.back();
    LaurentPoly r;
    for (auto& t : pick)
      if (!t.coeff.is_zero()) r += t.coeff * eval(t.net);
    return r;
  }

private:
  int n_, order_;
};

} // namespace

LaurentPoly moy_eval(const graph::MoyGraph& g, int n, int order) {
  if (n < 1) throw Error(ErrorCode::InvalidGraph, "level n must be positive");
  return Evaluator(n, order).eval(to_net(g));
}

LaurentPoly state_sum(const link::LinkDiagram& D, int n) {
  auto cube = link::build_cube(D, n);
  LaurentPoly r;
  for (auto& s : cube.states) {
    LaurentPoly v = LaurentPoly::q(s.q_shift) * moy_eval(s.graph, n);
    if (s.degree % 2) r -= v;
    else r += v;
  }
  return r;
}

} // namespace krh::oracle
