#include "graph/moy_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "homology/cohomology.hpp"
#include "mf/model.hpp"

namespace krh::graph {

using poly::Polynomial;
using poly::Rational;

MoyGraph& MoyGraph::arc(Var from, Var to) {
  Item it;
  it.arc = {from, to};
  items.push_back(it);
  return *this;
}

MoyGraph& MoyGraph::wide(Var o1, Var o2, Var i1, Var i2) {
  Item it;
  it.wide = true;
  it.w = {o1, o2, i1, i2};
  items.push_back(it);
  return *this;
}

MoyGraph& MoyGraph::loops(int k) {
  free_loops += k;
  return *this;
}

namespace {

// per mark: (number of segments ending at it, number starting at it)
std::map<Var, std::pair<int, int>> incidences(const MoyGraph& g) {
  std::map<Var, std::pair<int, int>> inc;
  for (auto& it : g.items) {
    if (it.wide) {
      inc[it.w.o1].first++;
      inc[it.w.o2].first++;
      inc[it.w.i1].second++;
      inc[it.w.i2].second++;
    } else {
      inc[it.arc.to].first++;
      inc[it.arc.from].second++;
    }
  }
  return inc;
}

struct UnionFind {
  std::map<Var, Var> p;
  Var find(Var x) {
    auto it = p.find(x);
    if (it == p.end()) {
      p[x] = x;
      return x;
    }
    if (it->second == x) return x;
    Var r = find(it->second);
    p[x] = r;
    return r;
  }
  void join(Var a, Var b) { p[find(a)] = find(b); }
};

} // namespace

std::vector<Var> MoyGraph::marks() const {
  std::vector<Var> out;
  for (auto& [m, c] : incidences(*this)) out.push_back(m);
  return out;
}

std::map<Var, int> MoyGraph::boundary() const {
  std::map<Var, int> b;
  for (auto& [m, c] : incidences(*this)) {
    if (c.first + c.second != 1) continue;
    b[m] = c.first ? 1 : -1;
  }
  return b;
}

int MoyGraph::wide_count() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](auto& i) { return i.wide; }));
}

int MoyGraph::arc_count() const { return static_cast<int>(items.size()) - wide_count(); }

int MoyGraph::edge_count() const { return arc_count() + 4 * wide_count() + free_loops; }

void MoyGraph::validate() const {
  for (auto& it : items) {
    std::vector<Var> ms = it.wide ? std::vector<Var>{it.w.o1, it.w.o2, it.w.i1, it.w.i2}
                                  : std::vector<Var>{it.arc.from, it.arc.to};
    for (Var m : ms)
      if (m < 0 || m >= poly::kFormalBase)
        throw Error(ErrorCode::InvalidGraph, "mark id out of range: " + std::to_string(m));
  }
  if (free_loops < 0) throw Error(ErrorCode::InvalidGraph, "negative loop count");
  for (auto& [m, c] : incidences(*this)) {
    if (c.first > 1 || c.second > 1)
      throw Error(ErrorCode::InvalidGraph, "mark " + std::to_string(m) + " has too many incidences");
  }
  if (!declared_boundary.empty() && declared_boundary != boundary())
    throw Error(ErrorCode::InvalidGraph, "declared boundary disagrees with incidences");
}

int MoyGraph::parity_circles() const {
  UnionFind uf;
  for (auto& it : items) {
    if (it.wide) {
      uf.join(it.w.i2, it.w.o1);
      uf.join(it.w.i1, it.w.o2);
    } else {
      uf.join(it.arc.from, it.arc.to);
    }
  }
  auto bd = boundary();
  std::set<Var> roots, open;
  for (Var m : marks()) {
    roots.insert(uf.find(m));
    if (bd.count(m)) open.insert(uf.find(m));
  }
  return static_cast<int>(roots.size() - open.size()) + free_loops;
}

MoyGraph MoyGraph::relabeled(const std::map<Var, Var>& m) const {
  auto f = [&](Var v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  MoyGraph g;
  g.free_loops = free_loops;
  for (auto& it : items) {
    if (it.wide)
      g.wide(f(it.w.o1), f(it.w.o2), f(it.w.i1), f(it.w.i2));
    else
      g.arc(f(it.arc.from), f(it.arc.to));
  }
  for (auto& [k, s] : declared_boundary) g.declared_boundary[f(k)] = s;
  return g;
}

MoyGraph parse_graph(const std::string& text) {
  MoyGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<long> v;
    long x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof()) fail("expected integers");
    if (tag == "a") {
      if (v.size() != 2) fail("arc needs 2 marks");
      g.arc(v[0], v[1]);
    } else if (tag == "w") {
      if (v.size() != 4) fail("wide edge needs 4 marks");
      g.wide(v[0], v[1], v[2], v[3]);
    } else if (tag == "b") {
      if (v.size() != 2 || (v[1] != 1 && v[1] != -1)) fail("boundary needs a mark and a sign");
      g.declared_boundary[v[0]] = static_cast<int>(v[1]);
    } else if (tag == "l") {
      if (v.size() != 1) fail("loop line needs a count");
      g.loops(static_cast<int>(v[0]));
    } else if (tag == "m") {
      // mark list: informational
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  g.validate();
  return g;
}

std::string to_literal(const MoyGraph& g) {
  std::ostringstream out;
  auto ms = g.marks();
  if (!ms.empty()) {
    out << "m";
    for (Var m : ms) out << ' ' << m;
    out << '\n';
  }
  for (auto& it : g.items) {
    if (it.wide)
      out << "w " << it.w.o1 << ' ' << it.w.o2 << ' ' << it.w.i1 << ' ' << it.w.i2 << '\n';
    else
      out << "a " << it.arc.from << ' ' << it.arc.to << '\n';
  }
  for (auto& [m, s] : g.boundary()) out << "b " << m << ' ' << s << '\n';
  if (g.free_loops) out << "l " << g.free_loops << '\n';
  return out.str();
}

KoszulFactorization build(const MoyGraph& g, int n) {
  g.validate();
  if (n < 1) throw Error(ErrorCode::InvalidGraph, "level must be positive");
  std::vector<mf::Row> rows;
  auto X = [](Var v) { return Polynomial::var(v); };
  for (auto& it : g.items) {
    if (it.wide) {
      auto w = poly::wide_edge_polys(n, it.w.o1, it.w.o2, it.w.i1, it.w.i2);
      rows.push_back({w.u1, w.b1, 2 * n});
      rows.push_back({w.u2, w.b2, 2 * n - 2});
    } else {
      rows.push_back({poly::pi(it.arc.to, it.arc.from, n), X(it.arc.to) - X(it.arc.from), 2 * n});
    }
  }
  auto ms = g.marks();
  Var next = ms.empty() ? 0 : ms.back() + 1;
  for (int k = 0; k < g.free_loops; ++k, ++next) rows.push_back({poly::pi(next, next, n), Polynomial(), 2 * n});
  std::vector<Var> vars = ms;
  for (Var v = ms.empty() ? 0 : ms.back() + 1; v < next; ++v) vars.push_back(v);
  return KoszulFactorization(n, std::move(rows), std::move(vars), -g.wide_count(), 0);
}

Polynomial boundary_potential(const MoyGraph& g, int n) {
  Polynomial w;
  for (auto& [m, s] : g.boundary()) w += poly::pow(Polynomial::var(m), n + 1) * Rational(s);
  return w;
}

homology::GdimPoly graph_gdim(const MoyGraph& g, int n) {
  KoszulFactorization K = build(g, n);
  auto bd = g.boundary();
  if (bd.empty()) {
    auto M = mf::make_model(K, mf::greedy_exclusions(K));
    return homology::cohomology_closed(M.K).gdim();
  }
  std::vector<Var> kill;
  for (auto& [m, s] : bd) kill.push_back(m);
  KoszulFactorization F = mf::fiber(K, kill);
  auto M = mf::make_model(F, mf::greedy_exclusions(F));
  return homology::cohomology(M.K, homology::degree_window(M.K, g.edge_count())).gdim();
}

} // namespace krh::graph
