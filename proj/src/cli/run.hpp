#pragma once

#include <optional>
#include <string>

#include "link/khr.hpp"
#include "oracle/laurent.hpp"

namespace krh::cli {

enum class Format { Text, Json };

struct Invocation {
  std::string subcommand;  // homology, graph-eval, polynomial, check
  int n = 2;
  std::string input;       // diagram or graph literal text
  std::optional<int> reduced;  // component
  Format format = Format::Text;
  int jobs = 1;
};

struct Outcome {
  int exit_code = 0;
  std::string out, err;
};

Outcome run(const Invocation& inv);

// JSON: {"n":..,"parity":..,"table":[{"i":..,"j":..,"dim":..},...]} sorted by (i, j)
std::string table_to_json(const link::HomologyTable& t);
link::HomologyTable table_from_json(const std::string& text);
std::string table_to_text(const link::HomologyTable& t);

} // namespace krh::cli
