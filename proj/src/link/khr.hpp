#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graph/moy_graph.hpp"
#include "homology/linalg.hpp"
#include "link/diagram.hpp"
#include "oracle/laurent.hpp"

namespace krh::link {

struct CubeState {
  std::uint64_t eps = 0;
  graph::MoyGraph graph;
  int degree = 0;   // cohomological degree i
  int q_shift = 0;
};

struct CubeEdge {
  std::uint64_t from = 0, to = 0;
  int crossing = 0;
  bool chi1 = false;  // chi1 (wide -> arcs) for negative crossings, chi0 otherwise
  int sign = 1;
};

struct ResolutionCube {
  int n = 0;
  std::vector<CubeState> states;  // indexed by eps
  std::vector<CubeEdge> edges;
};

// Positive crossings: eps 0 -> Gamma0 {1-n} in degree 0, eps 1 -> Gamma1 {-n}
// in degree 1. Negative: eps 0 -> Gamma1 {n} in degree -1, eps 1 -> Gamma0
// {n-1} in degree 0.
ResolutionCube build_cube(const LinkDiagram& D, int n);

struct HomologyTable {
  int n = 0;
  int parity = 0;
  std::map<std::pair<int, int>, long> dims;  // (i, j) -> dim, no zero entries

  long total() const;
  bool operator==(const HomologyTable& o) const {
    return n == o.n && parity == o.parity && dims == o.dims;
  }
  bool operator!=(const HomologyTable& o) const { return !(*this == o); }
};

HomologyTable kr_homology(const LinkDiagram& D, int n, int jobs = 1);
// homology of the complex reduced at the smallest mark of `component`
HomologyTable reduced_kr_homology(const LinkDiagram& D, int n, int component = 0, int jobs = 1);

// sum (-1)^i q^j dim
oracle::LaurentPoly euler(const HomologyTable& t);

// sum t^i q^j dim
struct PoincarePoly {
  std::map<std::pair<int, int>, long> terms;  // (t power, q power)
  oracle::LaurentPoly at_t(int t) const;
  std::string to_string() const;
};
PoincarePoly poincare(const HomologyTable& t);

// Matrices of the cube edge maps on state cohomology, per edge of
// build_cube and keyed by source q-degree, with chi0 / chi1 built from the
// given mu / lambda.
std::vector<std::map<int, homology::DenseMatrix>> cube_edge_maps(const LinkDiagram& D, int n, int mu = 0,
                                                                  int lambda = 0, int jobs = 1);

// alternating q-weighted sum of the state graded dimensions
oracle::LaurentPoly state_gdim_sum(const LinkDiagram& D, int n, int jobs = 1);

} // namespace krh::link
