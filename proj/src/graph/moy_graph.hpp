#pragma once

#include <map>
#include <string>
#include <vector>

#include "homology/gdim.hpp"
#include "mf/koszul.hpp"

namespace krh::graph {

using mf::KoszulFactorization;
using poly::Var;

struct Arc {
  Var from, to;
};

// marks in the roles (x1, x2, x3, x4): x1, x2 leave the wide edge, x3, x4 enter it.
// Drawn with the wide edge vertical: x1 top left, x2 top right, x3 bottom
// right, x4 bottom left. C(wide) does not see this placement, the parity
// count below does.
struct Wide {
  Var o1, o2, i1, i2;
};

struct Item {
  bool wide = false;
  Arc arc{};
  Wide w{};
};

class MoyGraph {
public:
  std::vector<Item> items;
  int free_loops = 0;
  // declared boundary (mark -> sign); validate() checks it against incidences
  std::map<Var, int> declared_boundary;

  MoyGraph& arc(Var from, Var to);
  MoyGraph& wide(Var o1, Var o2, Var i1, Var i2);
  MoyGraph& loops(int k);

  std::vector<Var> marks() const;
  // marks with a single incidence; +1 where an edge ends, -1 where one starts
  std::map<Var, int> boundary() const;
  bool closed() const { return boundary().empty(); }
  int wide_count() const;
  int arc_count() const;
  // number of oriented 1-edges between marks, used for the degree bound
  int edge_count() const;
  // throws InvalidGraph
  void validate() const;
  // circles after replacing each wide edge by the arcs x4 -> x1 and x3 -> x2
  // (meaningful for planar placements only)
  int parity_circles() const;

  MoyGraph relabeled(const std::map<Var, Var>& m) const;
};

MoyGraph parse_graph(const std::string& text);
std::string to_literal(const MoyGraph& g);

// tensor product of the arc, wide-edge and loop factorizations, in item order
KoszulFactorization build(const MoyGraph& g, int n);

// sum of s(i) x_i^{n+1} over the boundary
poly::Polynomial boundary_potential(const MoyGraph& g, int n);

// cohomology of the fiber over the boundary marks (closed graphs: plain)
homology::GdimPoly graph_gdim(const MoyGraph& g, int n);

} // namespace krh::graph
