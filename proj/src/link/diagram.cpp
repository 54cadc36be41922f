#include "link/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace krh::link {

graph::LocalCrossingContext Crossing::marks() const {
  // x1 top left, x2 top right (out), x3 bottom right, x4 bottom left (in),
  // both strands drawn upward
  const Var a = mark[0], b = mark[1], c = mark[2], d = mark[3];
  if (sign > 0) return {c, b, a, d};
  return {d, c, b, a};
}

namespace {

struct Occ {
  int k, slot;
};

} // namespace

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>>& pd, int loops,
                                 const std::vector<int>* signs) {
  if (loops < 0) throw Error(ErrorCode::InvalidDiagram, "negative loop count");
  std::map<int, std::vector<Occ>> occ;
  for (int k = 0; k < static_cast<int>(pd.size()); ++k)
    for (int s = 0; s < 4; ++s) {
      int e = pd[k][s];
      if (e <= 0 || e >= (1 << 20)) throw Error(ErrorCode::InvalidDiagram, "edge ids must be in [1, 2^20)");
      occ[e].push_back({k, s});
    }
  for (auto& [e, v] : occ)
    if (v.size() != 2)
      throw Error(ErrorCode::InvalidDiagram, "edge " + std::to_string(e) + " appears " +
                                                 std::to_string(v.size()) + " times");

  // in[k][s]: 1 = the edge enters crossing k at slot s, 0 = leaves, -1 unknown
  std::vector<std::array<int, 4>> in(pd.size(), {1, -1, 0, -1});
  if (signs) {
    if (signs->size() != pd.size()) throw Error(ErrorCode::InvalidDiagram, "one sign per crossing expected");
    for (size_t k = 0; k < pd.size(); ++k) {
      in[k][3] = (*signs)[k] > 0 ? 1 : 0;
      in[k][1] = 1 - in[k][3];
    }
  }
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InconsistentOrientation, m); };
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& r : in) {
        if (r[1] >= 0 && r[3] < 0) r[3] = 1 - r[1], changed = true;
        if (r[3] >= 0 && r[1] < 0) r[1] = 1 - r[3], changed = true;
        if (r[1] >= 0 && r[1] == r[3]) fail("over-strand enters twice");
      }
      for (auto& [e, v] : occ) {
        int& p = in[v[0].k][v[0].slot];
        int& q = in[v[1].k][v[1].slot];
        if (p >= 0 && q < 0) q = 1 - p, changed = true;
        if (q >= 0 && p < 0) p = 1 - q, changed = true;
        if (p >= 0 && p == q) fail("edge " + std::to_string(e) + " has inconsistent orientation");
      }
    }
  };
  propagate();
  for (size_t k = 0; k < pd.size(); ++k) {
    if (in[k][1] >= 0) continue;
    // only over-passages on this component: orient by the edge numbering
    int b = pd[k][1], d = pd[k][3];
    bool d_to_b = (b - d == 1) || (d - b > 1);
    in[k][3] = d_to_b ? 1 : 0;
    in[k][1] = d_to_b ? 0 : 1;
    propagate();
  }

  LinkDiagram D;
  for (size_t k = 0; k < pd.size(); ++k) {
    Crossing c;
    c.e = pd[k];
    c.mark = pd[k];
    c.sign = in[k][3] == 1 ? 1 : -1;
    D.crossings_.push_back(c);
  }
  int next = occ.empty() ? 1 : occ.rbegin()->first + 1;
  for (int i = 0; i < loops; ++i) {
    D.loops_.push_back(next + i);
    D.arcs_.push_back({next + i, next + i});
  }

  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return parent[x] = x;
    return it->second = find(it->second);
  };
  for (auto& [e, v] : occ) find(e);
  for (auto& x : pd) {
    parent[find(x[0])] = find(x[2]);
    parent[find(x[1])] = find(x[3]);
  }
  std::map<int, std::vector<Var>> comps;
  for (auto& [e, v] : occ) comps[find(e)].push_back(e);
  std::vector<std::vector<Var>> sorted;
  for (auto& [r, v] : comps) sorted.push_back(v);
  std::sort(sorted.begin(), sorted.end());
  for (Var m : D.loops_) sorted.push_back({m});
  D.components_ = std::move(sorted);
  return D;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (auto& c : crossings_) w += c.sign;
  return w;
}

graph::MoyGraph LinkDiagram::resolution(std::uint64_t gamma1_mask) const {
  graph::MoyGraph g;
  for (size_t k = 0; k < crossings_.size(); ++k) {
    auto m = crossings_[k].marks();
    if (gamma1_mask >> k & 1)
      g.wide(m.x1, m.x2, m.x3, m.x4);
    else
      g.arc(m.x4, m.x1).arc(m.x3, m.x2);
  }
  for (auto& a : arcs_) g.arc(a.from, a.to);
  return g;
}

LinkDiagram LinkDiagram::with_extra_marks() const {
  Var top = 0;
  for (auto& c : crossings_)
    for (Var m : c.mark) top = std::max(top, m);
  for (auto& a : arcs_) top = std::max({top, a.from, a.to});
  LinkDiagram D = *this;
  std::map<Var, Var> fresh;
  auto renew = [&](Var m) {
    auto it = fresh.find(m);
    if (it == fresh.end()) it = fresh.emplace(m, top + 1 + static_cast<Var>(fresh.size())).first;
    return it->second;
  };
  for (auto& c : D.crossings_) {
    int over_in = c.sign > 0 ? 3 : 1;
    for (int s : {0, over_in}) {
      Var m = renew(c.mark[s]);
      D.arcs_.push_back({c.mark[s], m});
      c.mark[s] = m;
    }
  }
  std::vector<graph::Arc> arcs;
  for (auto& a : D.arcs_) {
    if (a.from == a.to) {
      Var m = renew(a.from);
      arcs.push_back({a.from, m});
      arcs.push_back({m, a.to});
    } else {
      arcs.push_back(a);
    }
  }
  D.arcs_ = std::move(arcs);
  return D;
}

int LinkDiagram::seifert_circles() const { return resolution(0).parity_circles(); }

std::string LinkDiagram::to_pd_string() const {
  std::ostringstream o;
  o << "PD[";
  for (size_t k = 0; k < crossings_.size(); ++k) {
    auto& e = crossings_[k].e;
    o << (k ? "," : "") << "X[" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ']';
  }
  o << ']';
  return o.str();
}

} // namespace krh::link
