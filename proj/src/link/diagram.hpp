#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "graph/maps.hpp"
#include "graph/moy_graph.hpp"

namespace krh::link {

using poly::Var;

// PD crossing X[a,b,c,d]: edges counterclockwise from the incoming under-strand.
struct Crossing {
  std::array<int, 4> e{};
  std::array<Var, 4> mark{};  // mark used at each slot (the edge id unless extra marks were added)
  int sign = 0;  // +1 right-handed, -1 left-handed
  // the four incident edges in the roles of the wide edge marks
  graph::LocalCrossingContext marks() const;
};

class LinkDiagram {
public:
  // Orients the diagram (under-strands from the PD convention; components
  // running only over other strands follow the edge numbering), derives
  // crossing signs and components. Throws InvalidDiagram /
  // InconsistentOrientation. `signs`, when given, fixes the over-strand
  // direction of each crossing (used for braid closures).
  static LinkDiagram from_pd(const std::vector<std::array<int, 4>>& pd, int loops = 0,
                             const std::vector<int>* signs = nullptr);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  // marks of crossingless loops
  const std::vector<Var>& loop_marks() const { return loops_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  // edges (marks) of each component, ascending; loops come last
  const std::vector<std::vector<Var>>& components() const { return components_; }
  int writhe() const;

  // Resolution graph: crossing k resolved to Gamma0 (bit clear) or Gamma1
  // (bit set) of its local context, loops as one-mark circles.
  graph::MoyGraph resolution(std::uint64_t gamma1_mask) const;
  // number of circles of the oriented resolution
  int seifert_circles() const;

  std::string to_pd_string() const;

  // Same diagram with a second mark on every edge and loop: the entering end
  // of each edge gets a new mark joined to the old one by an arc.
  LinkDiagram with_extra_marks() const;

private:
  std::vector<Crossing> crossings_;
  std::vector<Var> loops_;
  std::vector<graph::Arc> arcs_;  // arcs outside the crossings (loops, extra marks)
  std::vector<std::vector<Var>> components_;
};

} // namespace krh::link
