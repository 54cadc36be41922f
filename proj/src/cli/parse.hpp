#pragma once

#include <string>

#include "link/diagram.hpp"

namespace krh::cli {

// PD[X[a,b,c,d],...] optionally followed by loops=k. Throws ParseError
// (with the character position), InvalidDiagram, InconsistentOrientation.
link::LinkDiagram parse_pd(const std::string& text);

// braid:<strands>:[g1,g2,...], generator +i crosses strands i and i+1
// positively. The closure is taken. Throws ParseError, GeneratorOutOfRange.
link::LinkDiagram parse_braid(const std::string& text);

// either of the above, chosen by prefix
link::LinkDiagram parse_link(const std::string& text);

} // namespace krh::cli
