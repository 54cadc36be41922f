#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph/moy_graph.hpp"

namespace krh::graph {

// Named test graphs with canonical marks 1..9. Open graphs: arc, wide,
// digon_I(+_gamma1), ladder_II(+_gamma1), square_III(+_gamma1, _gamma2),
// IV_gamma1..IV_gamma4. Closed graphs listed by closed_graph_names().
MoyGraph standard_graph(const std::string& name);
std::vector<std::string> standard_graph_names();
std::vector<std::string> closed_graph_names();

// Expected graded dimension where a closed form is known (fiber cohomology
// for open graphs, full cohomology for closed ones).
std::optional<homology::GdimPoly> expected_gdim(const std::string& name, int n);

} // namespace krh::graph
