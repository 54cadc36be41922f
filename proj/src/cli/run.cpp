#include "cli/run.hpp"

#include <sstream>

#include "cli/parse.hpp"
#include "graph/library.hpp"
#include "graph/moy_graph.hpp"
#include "json.hpp"
#include "oracle/homfly.hpp"
#include "oracle/moy.hpp"

namespace krh::cli {

using ojson = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

graph::MoyGraph graph_input(const std::string& text) {
  std::string t = trim(text);
  for (auto& name : graph::standard_graph_names())
    if (t == name) return graph::standard_graph(name);
  return graph::parse_graph(text);
}

std::string dump(const ojson& j) { return j.dump() + "\n"; }

Outcome homology(const Invocation& inv) {
  auto D = parse_link(inv.input);
  auto T = inv.reduced ? link::reduced_kr_homology(D, inv.n, *inv.reduced, inv.jobs)
                       : link::kr_homology(D, inv.n, inv.jobs);
  Outcome o;
  if (inv.format == Format::Json) {
    o.out = table_to_json(T) + "\n";
  } else {
    o.out = table_to_text(T);
    o.out += "poincare: " + link::poincare(T).to_string() + "\n";
    o.out += "euler: " + link::euler(T).to_string() + "\n";
  }
  return o;
}

Outcome graph_eval(const Invocation& inv) {
  auto g = graph_input(inv.input);
  auto h = graph::graph_gdim(g, inv.n);
  Outcome o;
  std::string moy;
  if (g.closed()) {
    try {
      moy = oracle::moy_eval(g, inv.n).to_string();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IrreducibleGraph) throw;
      moy = "irreducible";
    }
  }
  if (inv.format == Format::Json) {
    ojson j;
    j["n"] = inv.n;
    j["gdim"] = h.to_string();
    if (g.closed()) j["moy"] = moy;
    o.out = dump(j);
  } else {
    o.out = "gdim: " + h.to_string() + "\n";
    if (g.closed()) o.out += "moy: " + moy + "\n";
  }
  return o;
}

Outcome polynomial(const Invocation& inv) {
  auto D = parse_link(inv.input);
  auto p = oracle::homfly_specialized(D, inv.n);
  if (inv.reduced) p = p.divided_by(oracle::quantum_int(inv.n));
  Outcome o;
  if (inv.format == Format::Json) {
    ojson j;
    j["n"] = inv.n;
    j["polynomial"] = p.to_string();
    o.out = dump(j);
  } else {
    o.out = p.to_string() + "\n";
  }
  return o;
}

Outcome check(const Invocation& inv) {
  auto D = parse_link(inv.input);
  auto T = link::kr_homology(D, inv.n, inv.jobs);
  auto eu = link::euler(T);
  auto hf = oracle::homfly_specialized(D, inv.n);
  std::string ss;
  bool ok = eu == hf;
  try {
    auto s = oracle::state_sum(D, inv.n);
    ss = s.to_string();
    ok = ok && s == hf;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IrreducibleGraph) throw;
    ss = "irreducible";
  }
  Outcome o;
  if (inv.format == Format::Json) {
    ojson j;
    j["n"] = inv.n;
    j["euler"] = eu.to_string();
    j["state_sum"] = ss;
    j["homfly"] = hf.to_string();
    j["ok"] = ok;
    o.out = dump(j);
  } else {
    o.out = "euler: " + eu.to_string() + "\nstate_sum: " + ss + "\nhomfly: " + hf.to_string() + "\n" +
            (ok ? "ok\n" : "MISMATCH\n");
  }
  o.exit_code = ok ? 0 : 1;
  return o;
}

} // namespace

Outcome run(const Invocation& inv) {
  try {
    if (inv.n < 1) throw Error(ErrorCode::InvalidDiagram, "--n must be at least 1");
    if (inv.jobs < 1) throw Error(ErrorCode::InvalidDiagram, "--jobs must be at least 1");
    if (inv.subcommand == "homology") return homology(inv);
    if (inv.subcommand == "graph-eval") return graph_eval(inv);
    if (inv.subcommand == "polynomial") return polynomial(inv);
    if (inv.subcommand == "check") return check(inv);
    return {2, "", "unknown subcommand '" + inv.subcommand + "'\n"};
  } catch (const Error& e) {
    return {e.code() == ErrorCode::Internal ? 3 : 2, "", std::string(e.what()) + "\n"};
  }
}

std::string table_to_json(const link::HomologyTable& t) {
  ojson j;
  j["n"] = t.n;
  j["parity"] = t.parity;
  j["table"] = ojson::array();
  for (auto& [k, d] : t.dims) {
    ojson e;
    e["i"] = k.first;
    e["j"] = k.second;
    e["dim"] = d;
    j["table"].push_back(e);
  }
  return j.dump();
}

link::HomologyTable table_from_json(const std::string& text) {
  link::HomologyTable t;
  try {
    auto j = ojson::parse(text);
    t.n = j.at("n").get<int>();
    t.parity = j.at("parity").get<int>();
    for (auto& e : j.at("table")) {
      long d = e.at("dim").get<long>();
      if (d <= 0) throw Error(ErrorCode::ParseError, "table dimensions must be positive");
      t.dims[{e.at("i").get<int>(), e.at("j").get<int>()}] = d;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return t;
}

std::string table_to_text(const link::HomologyTable& t) {
  std::ostringstream o;
  o << "n = " << t.n << ", parity = " << t.parity << "\n";
  if (t.dims.empty()) o << "(zero)\n";
  for (auto& [k, d] : t.dims) o << "i=" << k.first << " j=" << k.second << " dim=" << d << "\n";
  return o.str();
}

} // namespace krh::cli
