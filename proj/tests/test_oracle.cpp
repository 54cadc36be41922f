#include "doctest.h"

#include "cli/parse.hpp"
#include "graph/library.hpp"
#include "link/khr.hpp"
#include "oracle/homfly.hpp"
#include "oracle/laurent.hpp"
#include "oracle/moy.hpp"

using namespace krh;
using namespace krh::oracle;

namespace {

LaurentPoly q(int k) { return LaurentPoly::q(k); }

LaurentPoly P(const std::string& s, int n) { return homfly_specialized(cli::parse_link(s), n); }

} // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_int(1) == LaurentPoly(1));
  CHECK(quantum_int(2) == q(1) + q(-1));
  CHECK(quantum_int(4).to_string() == "q^3+q+q^-1+q^-3");
  CHECK(quantum_int(-2) == -quantum_int(2));
  // [a][b] = [a+b-1] + [a+b-3] + ... + [a-b+1]
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= a; ++b) {
      LaurentPoly s;
      for (int k = 0; k < b; ++k) s += quantum_int(a + b - 1 - 2 * k);
      CHECK(quantum_int(a) * quantum_int(b) == s);
    }
}

TEST_CASE("laurent polynomial text and division") {
  for (auto s : {"0", "1", "-1", "q", "-q^-1", "3*q^2-1", "q^3+q+q^-1+q^-3", "1/2*q^4-7/3"}) {
    CHECK(LaurentPoly::parse(s).to_string() == s);
  }
  CHECK(LaurentPoly::parse(" q ^ 2 + 2 * q ") == q(2) + q(1) * Rational(2));
  CHECK_THROWS_AS(LaurentPoly::parse("q^"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse("2q"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse(""), Error);
  LaurentPoly a = quantum_int(3) * (q(4) - q(-2) + LaurentPoly(5));
  CHECK(a.divided_by(quantum_int(3)) == q(4) - q(-2) + LaurentPoly(5));
  CHECK_THROWS_AS(quantum_int(3).divided_by(quantum_int(2)), Error);
  CHECK(a.mirrored().mirrored() == a);
  CHECK(a.nonnegative() == false);
}

TEST_CASE("skein oracle: normalization and unlinks") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(P("PD[] loops=1", n) == quantum_int(n));
    CHECK(P("braid:2:[]", n) == quantum_int(n) * quantum_int(n));
    CHECK(P("braid:3:[]", n) == quantum_int(n) * quantum_int(n) * quantum_int(n));
    CHECK(P("braid:2:[1,-1]", n) == quantum_int(n) * quantum_int(n));
  }
}

TEST_CASE("skein oracle: n = 1 gives 1") {
  for (auto s : {"braid:2:[1,1,1]", "braid:2:[1,1]", "braid:3:[1,-2,1,-2]", "braid:3:[1,2,1,2,2]", "braid:2:[1,1,1,1,1]"})
    CHECK(P(s, 1) == LaurentPoly(1));
}

TEST_CASE("skein oracle: Jones polynomial at n = 2") {
  // unnormalized Jones polynomial of the negative trefoil in the variable q
  CHECK(P("braid:2:[-1,-1,-1]", 2) == q(1) + q(3) + q(5) - q(9));
  CHECK(P("braid:3:[1,-2,1,-2]", 2) == q(5) + q(-5));
}

TEST_CASE("skein oracle: Reidemeister moves and mirrors") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(P("braid:2:[1,1,1]", n) == P("braid:3:[1,1,1,2]", n));
    CHECK(P("braid:2:[1,1,1]", n) == P("braid:3:[1,1,-2,1]", n));
    CHECK(P("braid:3:[1,2,1,2,2]", n) == P("braid:3:[2,1,2,2,2]", n));
    CHECK(P("braid:3:[-1,2,1,2]", n) == P("braid:3:[2,1,-2,2]", n));
    CHECK(P("braid:2:[1,1,1]", n) == P("braid:2:[-1,-1,-1]", n).mirrored());
    CHECK(P("braid:2:[1,1,1]", n) == P("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]", n).mirrored());
    // the figure-eight is amphichiral
    CHECK(P("braid:3:[1,-2,1,-2]", n) == P("braid:3:[1,-2,1,-2]", n).mirrored());
  }
}

TEST_CASE("MOY evaluation") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    graph::MoyGraph circles;
    circles.arc(1, 1).arc(2, 2).arc(3, 3);
    CHECK(moy_eval(circles, n) == quantum_int(n) * quantum_int(n) * quantum_int(n));
    CHECK(moy_eval(graph::MoyGraph().loops(2), n) == quantum_int(n) * quantum_int(n));
    // theta: one wide edge closed by two arcs, relation I then a circle
    CHECK(moy_eval(graph::standard_graph("theta"), n) == quantum_int(n) * quantum_int(n - 1));
    for (auto& name : graph::closed_graph_names()) {
      CAPTURE(name);
      auto g = graph::standard_graph(name);
      auto v = moy_eval(g, n);
      CHECK(v.nonnegative());
      CHECK(v == moy_eval(g, n, 1));
      CHECK(v == v.mirrored());
    }
  }
}

TEST_CASE("MOY evaluation: invalid and irreducible graphs") {
  CHECK_THROWS_AS(moy_eval(graph::standard_graph("wide"), 2), Error);
  // five wide edges, edge i feeding i+1 and i+2: no digon, ladder or square
  graph::MoyGraph g;
  auto out = [](int w, int k) { return 100 * (w + 1) + k; };
  // port marks: exits 100w+0, 100w+1, entries 100w+2, 100w+3
  for (int w = 0; w < 5; ++w) g.wide(out(w, 0), out(w, 1), out(w, 2), out(w, 3));
  for (int w = 0; w < 5; ++w) {
    g.arc(out(w, 0), out((w + 1) % 5, 2));
    g.arc(out(w, 1), out((w + 2) % 5, 3));
  }
  try {
    moy_eval(g, 3);
    FAIL("expected IrreducibleGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IrreducibleGraph);
  }
}

TEST_CASE("state sum equals the skein value") {
  for (int n = 2; n <= 3; ++n)
    for (auto s : {"braid:2:[1,1,1]", "braid:2:[-1,-1]", "braid:3:[1,-2,1,-2]", "PD[] loops=2"}) {
      auto D = cli::parse_link(s);
      CHECK(state_sum(D, n) == homfly_specialized(D, n));
      CHECK(state_sum(D, n) == link::state_gdim_sum(D, n));
    }
}
