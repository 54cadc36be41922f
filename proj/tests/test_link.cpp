#include "doctest.h"

#include "cli/parse.hpp"
#include "link/diagram.hpp"
#include "link/khr.hpp"
#include "oracle/homfly.hpp"

using namespace krh;
using namespace krh::link;
using oracle::LaurentPoly;
using oracle::quantum_int;

namespace {

using PD = std::vector<std::array<int, 4>>;

const PD kTrefoil = {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
const PD kHopf = {{4, 1, 3, 2}, {2, 3, 1, 4}};
const PD kFigureEight = {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};

LinkDiagram unknot() { return LinkDiagram::from_pd({}, 1); }

HomologyTable unknot_table(int n) {
  HomologyTable t;
  t.n = n;
  t.parity = 1;
  for (int k = 0; k < n; ++k) t.dims[{0, 1 - n + 2 * k}] = 1;
  return t;
}

} // namespace

TEST_CASE("diagram: signs, components, orientation") {
  auto T = LinkDiagram::from_pd(kTrefoil);
  CHECK(T.crossing_count() == 3);
  CHECK(T.component_count() == 1);
  CHECK(T.writhe() == -3);
  CHECK(T.seifert_circles() == 2);
  auto H = LinkDiagram::from_pd(kHopf);
  CHECK(H.component_count() == 2);
  CHECK(H.writhe() == -2);
  CHECK(H.components()[0] == std::vector<Var>{1, 2});
  auto F = LinkDiagram::from_pd(kFigureEight);
  CHECK(F.writhe() == 0);
  CHECK(F.to_pd_string() == "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
  auto U = LinkDiagram::from_pd({}, 2);
  CHECK(U.component_count() == 2);
  CHECK(U.loop_marks() == std::vector<Var>{1, 2});

  CHECK_THROWS_AS(LinkDiagram::from_pd({{1, 2, 3, 4}}), Error);
  CHECK_THROWS_AS(LinkDiagram::from_pd({{1, 1, 1, 2}}), Error);
  try {
    LinkDiagram::from_pd({{1, 3, 2, 4}, {1, 4, 2, 3}});
    FAIL("expected an orientation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentOrientation);
  }
}

TEST_CASE("crossing marks follow the strands") {
  // positive: under a -> c, over d -> b
  Crossing p{{1, 2, 3, 4}, {1, 2, 3, 4}, 1};
  auto m = p.marks();
  CHECK(m.x1 == 3);
  CHECK(m.x2 == 2);
  CHECK(m.x3 == 1);
  CHECK(m.x4 == 4);
  // negative: under a -> c, over b -> d
  Crossing q{{1, 2, 3, 4}, {1, 2, 3, 4}, -1};
  auto k = q.marks();
  CHECK(k.x1 == 4);
  CHECK(k.x2 == 3);
  CHECK(k.x3 == 2);
  CHECK(k.x4 == 1);
  // the oriented resolution of every crossing is a Seifert smoothing: the
  // circles of resolution(0) are the Seifert circles, so each arc goes in -> out
  auto D = LinkDiagram::from_pd(kFigureEight);
  auto g = D.resolution(0);
  CHECK_NOTHROW(g.validate());
  CHECK(g.closed());
}

TEST_CASE("cube structure") {
  auto D = LinkDiagram::from_pd(kTrefoil);
  auto C = build_cube(D, 2);
  CHECK(C.states.size() == 8);
  CHECK(C.edges.size() == 12);
  // all crossings negative: degrees -3..0, shifts n per crossing at eps = 0
  CHECK(C.states[0].degree == -3);
  CHECK(C.states[0].q_shift == 6);
  CHECK(C.states[7].degree == 0);
  CHECK(C.states[7].q_shift == 3);
  CHECK(C.states[0].graph.wide_count() == 3);
  CHECK(C.states[7].graph.wide_count() == 0);
  for (auto& e : C.edges) CHECK(e.chi1);
  // every square anticommutes
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> sign;
  for (auto& e : C.edges) sign[{e.from, e.to}] = e.sign;
  for (std::uint64_t s = 0; s < 8; ++s)
    for (int k = 0; k < 3; ++k)
      for (int l = k + 1; l < 3; ++l) {
        std::uint64_t a = 1ull << k, b = 1ull << l;
        if (s & (a | b)) continue;
        int p = sign[{s, s | a}] * sign[{s | a, s | a | b}];
        int q = sign[{s, s | b}] * sign[{s | b, s | a | b}];
        CHECK(p == -q);
      }
  auto P = build_cube(cli::parse_braid("braid:2:[1]"), 3);
  CHECK(P.states[0].degree == 0);
  CHECK(P.states[0].q_shift == -2);
  CHECK(P.states[1].degree == 1);
  CHECK(P.states[1].q_shift == -3);
  CHECK(P.states[1].graph.wide_count() == 1);
  CHECK(!P.edges[0].chi1);
}

TEST_CASE("unknot diagrams") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    auto t = kr_homology(unknot(), n);
    CHECK(t == unknot_table(n));
    CHECK(euler(t) == quantum_int(n));
  }
  for (int n = 2; n <= 3; ++n)
    for (auto s : {"braid:2:[1]", "braid:2:[-1]", "braid:3:[1,2,-2,2]", "braid:3:[1,-2]", "braid:2:[1,1,-1]"}) {
      CAPTURE(s);
      CHECK(kr_homology(cli::parse_link(s), n) == unknot_table(n));
    }
}

TEST_CASE("n = 1 collapse") {
  for (auto& pd : {kTrefoil, kHopf, kFigureEight}) {
    auto t = kr_homology(LinkDiagram::from_pd(pd), 1);
    CHECK(t.dims == std::map<std::pair<int, int>, long>{{{0, 0}, 1}});
  }
}

TEST_CASE("known tables at n = 2") {
  auto T = kr_homology(LinkDiagram::from_pd(kTrefoil), 2);
  CHECK(T.dims == std::map<std::pair<int, int>, long>{{{-3, 9}, 1}, {{-2, 5}, 1}, {{0, 1}, 1}, {{0, 3}, 1}});
  CHECK(T.parity == 1);
  auto H = kr_homology(LinkDiagram::from_pd(kHopf), 2);
  CHECK(H.dims == std::map<std::pair<int, int>, long>{{{-2, 4}, 1}, {{-2, 6}, 1}, {{0, 0}, 1}, {{0, 2}, 1}});
  CHECK(H.parity == 0);
}

TEST_CASE("euler characteristic: state sum and skein value") {
  for (int n = 2; n <= 3; ++n)
    for (auto& pd : {kTrefoil, kHopf, kFigureEight}) {
      auto D = LinkDiagram::from_pd(pd);
      auto e = euler(kr_homology(D, n));
      CHECK(e == state_gdim_sum(D, n));
      CHECK(e == oracle::homfly_specialized(D, n));
    }
}

TEST_CASE("parity concentration") {
  for (auto s : {"braid:2:[1,1]", "braid:2:[]", "braid:3:[1,1,2,2]", "braid:2:[1,1,1]"}) {
    auto D = cli::parse_link(s);
    CHECK(kr_homology(D, 2).parity == D.component_count() % 2);
  }
}

TEST_CASE("mark placement independence") {
  for (auto s : {"braid:2:[1,1,1]", "braid:2:[1,-1]", "braid:2:[1]", "braid:2:[1,1]"}) {
    auto D = cli::parse_link(s);
    auto E = D.with_extra_marks();
    CHECK(E.resolution(0).marks().size() == 2 * D.resolution(0).marks().size());
    CHECK(kr_homology(D, 2) == kr_homology(E, 2));
    CHECK(kr_homology(D, 3) == kr_homology(E.with_extra_marks(), 3));
  }
  auto U = unknot();
  CHECK(kr_homology(U.with_extra_marks(), 3) == unknot_table(3));
}

TEST_CASE("Reidemeister invariance") {
  // R1 and R2 added to the trefoil; R3 on a five-crossing braid
  auto base = kr_homology(cli::parse_link("braid:2:[1,1,1]"), 2);
  CHECK(kr_homology(cli::parse_link("braid:3:[1,1,1,2]"), 2) == base);
  CHECK(kr_homology(cli::parse_link("braid:2:[1,1,-1,1,1]"), 2) == base);
  CHECK(kr_homology(cli::parse_link("braid:3:[1,2,1,2]"), 2) == kr_homology(cli::parse_link("braid:3:[2,1,2,2]"), 2));
}

TEST_CASE("jobs do not change the result") {
  auto D = LinkDiagram::from_pd(kFigureEight);
  auto a = kr_homology(D, 2, 1);
  CHECK(kr_homology(D, 2, 3) == a);
  CHECK(reduced_kr_homology(D, 2, 0, 4) == reduced_kr_homology(D, 2, 0, 1));
}

TEST_CASE("reduced homology") {
  for (int n = 1; n <= 5; ++n) {
    auto t = reduced_kr_homology(unknot(), n);
    CHECK(t.dims == std::map<std::pair<int, int>, long>{{{0, 0}, 1}});
  }
  for (int n = 2; n <= 3; ++n)
    for (auto& pd : {kTrefoil, kHopf, kFigureEight}) {
      auto D = LinkDiagram::from_pd(pd);
      for (int c = 0; c < D.component_count(); ++c) {
        auto r = reduced_kr_homology(D, n, c);
        CHECK(euler(r) * quantum_int(n) == euler(kr_homology(D, n)));
      }
    }
  // reduced Khovanov homology of the trefoil has three classes
  CHECK(reduced_kr_homology(LinkDiagram::from_pd(kTrefoil), 2).total() == 3);
  CHECK_THROWS_AS(reduced_kr_homology(unknot(), 2, 1), Error);
}

TEST_CASE("euler and poincare") {
  HomologyTable empty;
  CHECK(euler(empty).is_zero());
  CHECK(poincare(empty).to_string() == "0");
  auto t = kr_homology(LinkDiagram::from_pd(kHopf), 3);
  CHECK(poincare(t).at_t(-1) == euler(t));
  LaurentPoly total;
  for (auto& [k, d] : t.dims) total.add(k.second, d);
  CHECK(poincare(t).at_t(1) == total);
  HomologyTable u = unknot_table(2);
  CHECK(poincare(u).to_string() == "q+q^-1");
  u.dims[{2, -5}] = 3;
  CHECK(poincare(u).to_string() == "3*t^2*q^-5+q+q^-1");
}
