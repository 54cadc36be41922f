#include "graph/maps.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace krh::graph {

using poly::formal;
using poly::Polynomial;
using poly::Rational;

MoyGraph LocalCrossingContext::gamma0() const {
  MoyGraph g;
  g.arc(x4, x1).arc(x3, x2);
  return g;
}

MoyGraph LocalCrossingContext::gamma1() const {
  MoyGraph g;
  g.wide(x1, x2, x3, x4);
  return g;
}

namespace {

Polynomial X(Var v) { return Polynomial::var(v); }

// (u1 + x1 u2 - pi23) / (x1 - x4) in formal marks, then specialized
Polynomial crossing_quotient(int n, const LocalCrossingContext& c) {
  static std::mutex mu;
  static std::map<int, Polynomial> cache;
  const Var y1 = formal(41), y2 = formal(42), y3 = formal(43), y4 = formal(44);
  Polynomial q;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
      auto w = poly::wide_edge_polys(n, y1, y2, y3, y4);
      Polynomial num = w.u1 + X(y1) * w.u2 - poly::pi(y2, y3, n);
      it = cache.emplace(n, poly::exact_divide(num, X(y1) - X(y4))).first;
    }
    q = it->second;
  }
  return poly::substitute(q, {{y1, X(c.x1)}, {y2, X(c.x2)}, {y3, X(c.x3)}, {y4, X(c.x4)}});
}

} // namespace

mf::Morphism chi0(const LocalCrossingContext& c, int n, int mu) {
  Polynomial x1 = X(c.x1), x2 = X(c.x2), x3 = X(c.x3), x4 = X(c.x4);
  Rational m(mu);
  auto w = poly::wide_edge_polys(n, c.x1, c.x2, c.x3, c.x4);
  Polynomial a1 = w.u2 * Rational(mu - 1) + crossing_quotient(n, c);
  mf::Morphism f;
  f.source = build(c.gamma0(), n);
  f.target = build(c.gamma1(), n);
  f.z2_degree = 0;
  f.q_degree = 1;
  f.m[0] = {{x4 - x2 + m * (x1 + x2 - x3 - x4), Polynomial()}, {a1, Polynomial(1)}};
  f.m[1] = {{x4 + m * (x1 - x4), m * (x2 - x3) - x2}, {Polynomial(-1), Polynomial(1)}};
  return f;
}

mf::Morphism chi1(const LocalCrossingContext& c, int n, int lambda) {
  Polynomial x1 = X(c.x1), x2 = X(c.x2), x3 = X(c.x3), x4 = X(c.x4);
  Rational l(lambda);
  auto w = poly::wide_edge_polys(n, c.x1, c.x2, c.x3, c.x4);
  Polynomial a2 = l * w.u2 - crossing_quotient(n, c);
  Polynomial a3 = l * (x3 + x4 - x1 - x2) + x1 - x3;
  mf::Morphism f;
  f.source = build(c.gamma1(), n);
  f.target = build(c.gamma0(), n);
  f.z2_degree = 0;
  f.q_degree = 1;
  f.m[0] = {{Polynomial(1), Polynomial()}, {a2, a3}};
  f.m[1] = {{Polynomial(1), x3 + l * (x2 - x3)}, {Polynomial(1), x1 + l * (x4 - x1)}};
  return f;
}

namespace {

// x1^{n+1}+x2^{n+1}+x3^{n+1} as a polynomial in the elementary symmetric
// functions e1, e2, e3 (Newton's identities)
Polynomial power_sum_in_e(int n, Var e1, Var e2, Var e3) {
  Polynomial E1 = X(e1), E2 = X(e2), E3 = X(e3);
  std::vector<Polynomial> p = {Polynomial(3), E1, E1 * E1 - E2 * Rational(2),
                               poly::pow(E1, 3) - E1 * E2 * Rational(3) + E3 * Rational(3)};
  for (int k = 4; k <= n + 1; ++k) p.push_back(E1 * p[k - 1] - E2 * p[k - 2] + E3 * p[k - 3]);
  return p[n + 1];
}

} // namespace

KoszulFactorization upsilon(int n, const std::array<Var, 6>& x) {
  if (n < 2) throw Error(ErrorCode::LevelMismatch, "upsilon needs n >= 2");
  Var S[7];
  for (int k = 1; k <= 6; ++k) S[k] = formal(50 + k);
  auto h = [&](Var a, Var b, Var c) { return power_sum_in_e(n, a, b, c); };
  Polynomial v1 = poly::exact_divide(h(S[1], S[2], S[3]) - h(S[4], S[2], S[3]), X(S[1]) - X(S[4]));
  Polynomial v2 = poly::exact_divide(h(S[4], S[2], S[3]) - h(S[4], S[5], S[3]), X(S[2]) - X(S[5]));
  Polynomial v3 = poly::exact_divide(h(S[4], S[5], S[3]) - h(S[4], S[5], S[6]), X(S[3]) - X(S[6]));
  Polynomial a = X(x[0]), b = X(x[1]), c = X(x[2]), d = X(x[3]), e = X(x[4]), f = X(x[5]);
  poly::Bindings sym = {{S[1], a + b + c}, {S[2], a * b + a * c + b * c}, {S[3], a * b * c},
                        {S[4], d + e + f}, {S[5], d * e + d * f + e * f}, {S[6], d * e * f}};
  std::vector<mf::Row> rows = {
      {poly::compose(v1, sym), sym[S[1]] - sym[S[4]], 2 * n},
      {poly::compose(v2, sym), sym[S[2]] - sym[S[5]], 2 * n - 2},
      {poly::compose(v3, sym), sym[S[3]] - sym[S[6]], 2 * n - 4},
  };
  std::vector<Var> vars(x.begin(), x.end());
  std::sort(vars.begin(), vars.end());
  return KoszulFactorization(n, std::move(rows), vars, -3, 0);
}

} // namespace krh::graph
