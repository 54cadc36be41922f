#include "graph/library.hpp"

#include <functional>
#include <map>

namespace krh::graph {

using homology::GdimPoly;
using homology::one_plus_sq;
using homology::qint;

namespace {

MoyGraph ladder() {
  MoyGraph g;
  g.wide(1, 2, 5, 6).wide(6, 5, 3, 4);
  return g;
}

MoyGraph square() {
  MoyGraph g;
  g.wide(1, 5, 6, 4).wide(3, 6, 5, 2);
  return g;
}

// Three strands, top 1 2 3 (out), bottom 4 5 6 (in), left to right.
// gamma1: wide edges on the left pair, right pair, left pair (bottom up);
// gamma3 the mirror sequence; gamma4 / gamma2 one wide edge and a strand.
MoyGraph four_gamma1() {
  MoyGraph g;
  g.wide(7, 8, 5, 4).wide(9, 3, 6, 8).wide(1, 2, 9, 7);
  return g;
}

MoyGraph four_gamma3() {
  MoyGraph g;
  g.wide(8, 7, 6, 5).wide(1, 9, 8, 4).wide(2, 3, 7, 9);
  return g;
}

MoyGraph four_gamma4() {
  MoyGraph g;
  g.wide(1, 2, 5, 4).arc(6, 3);
  return g;
}

MoyGraph four_gamma2() {
  MoyGraph g;
  g.wide(2, 3, 6, 5).arc(4, 1);
  return g;
}

using Maker = std::function<MoyGraph()>;

const std::vector<std::pair<std::string, Maker>>& table() {
  static const std::vector<std::pair<std::string, Maker>> t = {
      {"arc", [] { return MoyGraph().arc(1, 2); }},
      {"wide", [] { return MoyGraph().wide(1, 2, 3, 4); }},
      {"digon_I", [] { return MoyGraph().wide(1, 2, 3, 4).arc(1, 4); }},
      {"digon_I_gamma1", [] { return MoyGraph().arc(3, 2); }},
      {"ladder_II", ladder},
      {"ladder_II_gamma1", [] { return MoyGraph().wide(1, 2, 3, 4); }},
      {"square_III", square},
      {"square_III_gamma1", [] { return MoyGraph().arc(2, 3).arc(4, 1); }},
      {"square_III_gamma2", [] { return MoyGraph().arc(2, 1).arc(4, 3); }},
      {"IV_gamma1", four_gamma1},
      {"IV_gamma2", four_gamma2},
      {"IV_gamma3", four_gamma3},
      {"IV_gamma4", four_gamma4},
      // closed
      {"circle", [] { return MoyGraph().arc(1, 1); }},
      {"two_circles", [] { return MoyGraph().arc(1, 1).arc(2, 2); }},
      {"free_loop", [] { return MoyGraph().loops(1); }},
      {"theta", [] { return MoyGraph().wide(1, 2, 3, 4).arc(1, 4).arc(2, 3); }},
      {"closed_ladder", [] { return ladder().arc(1, 4).arc(2, 3); }},
      {"closed_square_a", [] { return square().arc(1, 2).arc(3, 4); }},
      {"closed_square_b", [] { return square().arc(1, 4).arc(3, 2); }},
      {"closed_IV", [] { return four_gamma1().arc(1, 4).arc(2, 5).arc(3, 6); }},
      {"closed_IV_gamma4", [] { return four_gamma4().arc(1, 4).arc(2, 5).arc(3, 6); }},
  };
  return t;
}

GdimPoly s_pow(int p) { return GdimPoly::monomial(p & 1, 0); }

} // namespace

MoyGraph standard_graph(const std::string& name) {
  for (auto& [k, f] : table())
    if (k == name) return f();
  throw Error(ErrorCode::UnknownName, "unknown standard graph '" + name + "'");
}

std::vector<std::string> standard_graph_names() {
  std::vector<std::string> out;
  for (auto& [k, f] : table()) out.push_back(k);
  return out;
}

std::vector<std::string> closed_graph_names() {
  std::vector<std::string> out;
  for (auto& [k, f] : table())
    if (f().closed()) out.push_back(k);
  return out;
}

std::optional<GdimPoly> expected_gdim(const std::string& name, int n) {
  GdimPoly N = qint(n), N1 = qint(n - 1), N2 = qint(n - 2), two = qint(2);
  GdimPoly arc = one_plus_sq(1 - n);
  GdimPoly wide = GdimPoly::monomial(0, -1) * one_plus_sq(1 - n) * one_plus_sq(3 - n);
  GdimPoly s = GdimPoly::monomial(1, 0);
  std::map<std::string, GdimPoly> open = {
      {"arc", arc},
      {"wide", wide},
      {"digon_I", s * N1 * arc},
      {"digon_I_gamma1", arc},
      {"ladder_II", two * wide},
      {"ladder_II_gamma1", wide},
      {"square_III", s * N1 * wide},
      {"square_III_gamma1", arc * arc},
      {"square_III_gamma2", arc * arc},
  };
  if (auto it = open.find(name); it != open.end()) return it->second;
  std::map<std::string, GdimPoly> closed = {
      {"circle", N},
      {"two_circles", N * N},
      {"free_loop", N},
      {"theta", N * N1},
      {"closed_ladder", two * N * N1},
      {"closed_square_a", N * N + N2 * N},
      {"closed_square_b", N + N2 * N * N},
      {"closed_IV", N1 * N1 * two * N},
      {"closed_IV_gamma4", N * N1 * N},
  };
  if (auto it = closed.find(name); it != closed.end())
    return s_pow(standard_graph(name).parity_circles()) * it->second;
  return std::nullopt;
}

} // namespace krh::graph
