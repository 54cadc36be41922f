#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "krh/krh.h"

namespace {

bool looks_literal(const std::string& s) {
  return s.rfind("PD", 0) == 0 || s.rfind("braid:", 0) == 0 || s.find('\n') != std::string::npos;
}

std::string read_input(const std::string& arg) {
  if (arg.empty() || arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  if (looks_literal(arg)) return arg;
  std::ifstream f(arg);
  if (!f) return arg;  // graph names and other short literals
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov-Rozansky sl(n) link homology"};
  app.require_subcommand(1);
  int n = 2, jobs = 1;
  std::string format = "text", input;
  int reduced = -1;
  std::string reduced_arg;
  CLI::Option* reduced_opt[4] = {};
  int k = 0;

  for (auto [name, help] : {std::pair{"homology", "homology table of a link"},
                            std::pair{"graph-eval", "cohomology of a MOY graph and its MOY value"},
                            std::pair{"polynomial", "P_n from the skein relation"},
                            std::pair{"check", "compare Euler characteristic, state sum and skein value"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "literal, file, or - for standard input");
    sub->add_option("--n", n, "level n")->check(CLI::Range(1, 64));
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    if (std::string(name) == "homology" || std::string(name) == "polynomial")
      reduced_opt[k] = sub->add_option("--reduced", reduced_arg, "reduce at a component (default 0)")->expected(0, 1);
    ++k;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  auto* sub = app.get_subcommands().front();
  for (auto* o : reduced_opt)
    if (o && o->count()) {
      reduced = 0;
      // "--reduced <input>" swallows the input when no component follows
      if (!reduced_arg.empty() && reduced_arg.find_first_not_of("0123456789") == std::string::npos)
        reduced = std::stoi(reduced_arg);
      else if (!reduced_arg.empty() && input.empty())
        input = reduced_arg;
    }

  std::string text = read_input(input);
  krh_invocation inv{};
  std::string subname = sub->get_name();
  inv.subcommand = subname.c_str();
  inv.n = n;
  inv.input = text.c_str();
  inv.reduced_component = reduced;
  inv.json = format == "json";
  inv.jobs = jobs;
  char *out = nullptr, *err = nullptr;
  int code = krh_run(&inv, &out, &err);
  if (out) std::fputs(out, stdout);
  if (err) std::fputs(err, stderr);
  krh_string_free(out);
  krh_string_free(err);
  return code;
}
