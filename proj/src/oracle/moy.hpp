#pragma once

#include "graph/moy_graph.hpp"
#include "link/diagram.hpp"
#include "oracle/laurent.hpp"

namespace krh::oracle {

// P_n of a closed MOY graph by the circle, digon, ladder and square
// relations. `order` picks which applicable rewrite is used first (0 = first
// found, 1 = last found), for confluence checks. Throws IrreducibleGraph.
LaurentPoly moy_eval(const graph::MoyGraph& g, int n, int order = 0);

// sum over the cube of (-1)^i q^shift moy_eval(state)
LaurentPoly state_sum(const link::LinkDiagram& D, int n);

} // namespace krh::oracle
