#include "doctest.h"

#include "cli/parse.hpp"
#include "cli/run.hpp"

using namespace krh;
using namespace krh::cli;

namespace {

Outcome go(const std::string& sub, const std::string& input, int n, Format f = Format::Text, int jobs = 1,
           std::optional<int> reduced = {}) {
  Invocation inv;
  inv.subcommand = sub;
  inv.input = input;
  inv.n = n;
  inv.format = f;
  inv.jobs = jobs;
  inv.reduced = reduced;
  return run(inv);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

} // namespace

TEST_CASE("parse_pd") {
  auto T = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(T.crossing_count() == 3);
  CHECK(T.component_count() == 1);
  auto W = parse_pd("  PD[ X[1, 4, 2, 5] ,X[3,6,4,1], X[5,2,6,3] ]\n");
  CHECK(W.to_pd_string() == T.to_pd_string());
  auto U = parse_pd("PD[] loops=1");
  CHECK(U.crossing_count() == 0);
  CHECK(U.component_count() == 1);
  CHECK(parse_pd("PD[X[1,1,2,2]], loops=2").component_count() == 3);
  CHECK(code_of([] { parse_pd("PD[X[1,4,2,5]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd("PD[X[1,4,2]]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd("PD[X[1,4,2,5]] junk"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd("PD[X[0,1,1,0]]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pd("PD[]"); }) == ErrorCode::InvalidDiagram);
  CHECK(code_of([] { parse_pd("PD[X[1,3,2,4],X[1,4,2,3]]"); }) == ErrorCode::InconsistentOrientation);
  try {
    parse_pd("PD[X[1;");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
}

TEST_CASE("parse_braid") {
  auto H = parse_braid("braid:2:[1,1]");
  CHECK(H.component_count() == 2);
  CHECK(H.writhe() == 2);
  auto T = parse_braid("braid:2:[1,1,1]");
  CHECK(T.component_count() == 1);
  CHECK(T.crossing_count() == 3);
  CHECK(T.writhe() == 3);
  auto L = parse_braid("braid:2:[]");
  CHECK(L.component_count() == 2);
  CHECK(L.crossing_count() == 0);
  auto F = parse_braid("braid:3:[1,-2,1,-2]");
  CHECK(F.writhe() == 0);
  CHECK(F.component_count() == 1);
  // a strand that never crosses is its own component
  CHECK(parse_braid("braid:3:[1,1,1]").component_count() == 2);
  CHECK(code_of([] { parse_braid("braid:2:[2]"); }) == ErrorCode::GeneratorOutOfRange);
  CHECK(code_of([] { parse_braid("braid:2:[0]"); }) == ErrorCode::GeneratorOutOfRange);
  CHECK(code_of([] { parse_braid("braid:2:[1,"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_braid("braid:x:[1]"); }) == ErrorCode::ParseError);
  CHECK(parse_link(" braid:2:[1]").crossing_count() == 1);
}

TEST_CASE("run: golden outputs") {
  auto h = go("homology", "PD[] loops=1", 2, Format::Json);
  CHECK(h.exit_code == 0);
  CHECK(h.out == "{\"n\":2,\"parity\":1,\"table\":[{\"i\":0,\"j\":-1,\"dim\":1},{\"i\":0,\"j\":1,\"dim\":1}]}\n");
  auto p = go("polynomial", "PD[] loops=1", 4);
  CHECK(p.out == "q^3+q+q^-1+q^-3\n");
  auto c = go("check", "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]", 2);
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("ok") != std::string::npos);
  auto g = go("graph-eval", "theta", 3);
  CHECK(g.out == "gdim: q^3+2*q+2*q^-1+q^-3\nmoy: q^3+2*q+2*q^-1+q^-3\n");
  auto r = go("homology", "PD[] loops=1", 3, Format::Json, 1, 0);
  CHECK(r.out == "{\"n\":3,\"parity\":1,\"table\":[{\"i\":0,\"j\":0,\"dim\":1}]}\n");
  auto rp = go("polynomial", "braid:2:[1,1]", 2, Format::Text, 1, 0);
  CHECK(rp.out == "q^-1+q^-5\n");
}

TEST_CASE("run: errors") {
  CHECK(go("homology", "PD[X[1,2", 2).exit_code == 2);
  CHECK(!go("homology", "PD[X[1,2", 2).err.empty());
  CHECK(go("frobnicate", "PD[] loops=1", 2).exit_code == 2);
  CHECK(go("homology", "PD[] loops=1", 0).exit_code == 2);
  CHECK(go("graph-eval", "nonsense 1 2", 2).exit_code == 2);
}

TEST_CASE("json round trip") {
  for (auto s : {"braid:2:[1,1,1]", "braid:2:[1,1]", "PD[] loops=2"}) {
    auto t = link::kr_homology(parse_link(s), 2);
    auto text = table_to_json(t);
    CHECK(table_from_json(text) == t);
    CHECK(table_to_json(table_from_json(text)) == text);
    auto e = link::euler(t);
    CHECK(oracle::LaurentPoly::parse(e.to_string()) == e);
  }
  CHECK_THROWS_AS(table_from_json("{\"n\":2}"), Error);
  CHECK_THROWS_AS(table_from_json("not json"), Error);
}

TEST_CASE("jobs give byte-identical output") {
  for (auto sub : {"homology", "check"}) {
    auto a = go(sub, "braid:3:[1,-2,1,-2]", 2, Format::Json, 1);
    for (int k : {2, 3, 8}) CHECK(go(sub, "braid:3:[1,-2,1,-2]", 2, Format::Json, k).out == a.out);
  }
}
