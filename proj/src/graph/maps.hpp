#pragma once

#include <array>

#include "graph/moy_graph.hpp"
#include "mf/koszul.hpp"

namespace krh::graph {

// Marks around one crossing site: x1, x2 leave, x3, x4 enter.
// Gamma0 = arcs 4->1 and 3->2, Gamma1 = wide edge (1,2,3,4).
struct LocalCrossingContext {
  Var x1, x2, x3, x4;
  MoyGraph gamma0() const;
  MoyGraph gamma1() const;
};

// C(Gamma0) -> C(Gamma1), q-degree 1
mf::Morphism chi0(const LocalCrossingContext& c, int n, int mu = 0);
// C(Gamma1) -> C(Gamma0), q-degree 1
mf::Morphism chi1(const LocalCrossingContext& c, int n, int lambda = 0);

// rows (v_k, alpha_k) over marks x1..x6, q-shift -3; x1..x3 outgoing
KoszulFactorization upsilon(int n, const std::array<Var, 6>& x);

} // namespace krh::graph
