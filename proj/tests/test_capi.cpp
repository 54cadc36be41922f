#include "doctest.h"

#include <string>

#include "krh/krh.h"

namespace {

std::string take(char* s) {
  std::string r = s ? s : "";
  krh_string_free(s);
  return r;
}

} // namespace

TEST_CASE("diagram handles") {
  krh_diagram* d = nullptr;
  REQUIRE(krh_diagram_parse("braid:2:[1,1,1]", &d) == KRH_OK);
  CHECK(krh_diagram_crossings(d) == 3);
  CHECK(krh_diagram_components(d) == 1);
  CHECK(krh_diagram_writhe(d) == 3);
  char* p = nullptr;
  REQUIRE(krh_polynomial(d, 2, &p) == KRH_OK);
  CHECK(take(p) == "q^-1+q^-3+q^-5-q^-9");
  krh_diagram_free(d);
}

TEST_CASE("homology tables") {
  krh_diagram* d = nullptr;
  REQUIRE(krh_diagram_parse("PD[] loops=1", &d) == KRH_OK);
  krh_table* t = nullptr;
  REQUIRE(krh_homology(d, 3, -1, 2, &t) == KRH_OK);
  CHECK(krh_table_n(t) == 3);
  CHECK(krh_table_parity(t) == 1);
  REQUIRE(krh_table_size(t) == 3);
  int i, j;
  long dim;
  REQUIRE(krh_table_entry(t, 0, &i, &j, &dim) == KRH_OK);
  CHECK(i == 0);
  CHECK(j == -2);
  CHECK(dim == 1);
  CHECK(krh_table_entry(t, 3, &i, &j, &dim) == KRH_INVALID_ARGUMENT);
  char* e = nullptr;
  REQUIRE(krh_table_euler(t, &e) == KRH_OK);
  CHECK(take(e) == "q^2+1+q^-2");
  char* js = nullptr;
  REQUIRE(krh_table_json(t, &js) == KRH_OK);
  CHECK(take(js).find("\"parity\":1") != std::string::npos);
  krh_table_free(t);
  REQUIRE(krh_homology(d, 3, 0, 1, &t) == KRH_OK);
  CHECK(krh_table_size(t) == 1);
  krh_table_free(t);
  CHECK(krh_homology(d, 3, 5, 1, &t) == KRH_INVALID_DIAGRAM);
  CHECK(t == nullptr);
  krh_diagram_free(d);
}

TEST_CASE("error reporting") {
  krh_diagram* d = nullptr;
  CHECK(krh_diagram_parse("PD[X[1,2", &d) == KRH_PARSE_ERROR);
  CHECK(d == nullptr);
  CHECK(std::string(krh_last_error()).find("ParseError") != std::string::npos);
  CHECK(krh_diagram_parse("braid:2:[3]", &d) == KRH_GENERATOR_OUT_OF_RANGE);
  CHECK(krh_diagram_parse(nullptr, &d) == KRH_INVALID_ARGUMENT);
  CHECK(std::string(krh_status_name(KRH_IRREDUCIBLE_GRAPH)) == "IrreducibleGraph");
  CHECK(std::string(krh_status_name(KRH_INVALID_ARGUMENT)) == "InvalidArgument");
  REQUIRE(krh_diagram_parse("braid:2:[1]", &d) == KRH_OK);
  CHECK(std::string(krh_last_error()).empty());
  krh_table* t = nullptr;
  CHECK(krh_homology(d, 0, -1, 1, &t) == KRH_INVALID_ARGUMENT);
  krh_diagram_free(d);
}

TEST_CASE("graphs and run") {
  char *g = nullptr, *m = nullptr;
  REQUIRE(krh_graph_eval("a 1 1\n", 2, &g, &m) == KRH_OK);
  CHECK(take(g) == "s*q+s*q^-1");
  CHECK(take(m) == "q+q^-1");
  REQUIRE(krh_graph_eval("w 1 2 3 4\na 1 4\n", 2, &g, &m) == KRH_OK);
  CHECK(!take(g).empty());
  CHECK(m == nullptr);
  CHECK(krh_graph_eval("x", 2, &g, &m) == KRH_PARSE_ERROR);

  krh_invocation inv{"homology", 2, "PD[] loops=1", -1, 1, 1};
  char *out = nullptr, *err = nullptr;
  CHECK(krh_run(&inv, &out, &err) == 0);
  CHECK(take(out) == "{\"n\":2,\"parity\":1,\"table\":[{\"i\":0,\"j\":-1,\"dim\":1},{\"i\":0,\"j\":1,\"dim\":1}]}\n");
  CHECK(take(err).empty());
  inv.input = "PD[";
  CHECK(krh_run(&inv, &out, &err) != 0);
  take(out);
  CHECK(!take(err).empty());
}
