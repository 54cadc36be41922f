#pragma once

#include <vector>

#include "link/diagram.hpp"
#include "oracle/laurent.hpp"

namespace krh::oracle {

// Combinatorial link: components as cyclic lists of passages through crossings.
struct Passage {
  int crossing;
  bool over;
};

struct SkeinDiagram {
  std::vector<int> sign;                       // per crossing id
  std::vector<std::vector<Passage>> components;  // empty list = crossingless loop

  static SkeinDiagram from_link(const link::LinkDiagram& D);
};

// P_n via  q^n P(L+) - q^-n P(L-) = (q - q^-1) P(L0),  unlink of k components -> [n]^k.
// Throws RecursionDepthExceeded.
LaurentPoly homfly_specialized(const link::LinkDiagram& D, int n);
LaurentPoly homfly_specialized(const SkeinDiagram& D, int n);

} // namespace krh::oracle
