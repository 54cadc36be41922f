#include "poly/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace krh::poly {

Monomial::Monomial(Var v, int e) {
  if (e > 0) e_.push_back({v, e});
}

Monomial Monomial::from_terms(std::vector<std::pair<Var, int>> t) {
  std::sort(t.begin(), t.end());
  Monomial m;
  for (auto& [v, e] : t) {
    if (e == 0) continue;
    if (!m.e_.empty() && m.e_.back().first == v)
      m.e_.back().second += e;
    else
      m.e_.push_back({v, e});
  }
  return m;
}

int Monomial::total() const {
  int s = 0;
  for (auto& p : e_) s += p.second;
  return s;
}

int Monomial::exponent(Var v) const {
  for (auto& p : e_)
    if (p.first == v) return p.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
      ++i, ++j;
    }
  }
  return r;
}

bool Monomial::divides_into(const Monomial& o, Monomial& quotient) const {
  // does *this divide o ?
  quotient = Monomial();
  size_t i = 0;
  for (auto& [v, e] : o.e_) {
    int mine = 0;
    while (i < e_.size() && e_[i].first < v) return false;
    if (i < e_.size() && e_[i].first == v) mine = e_[i++].second;
    if (mine > e) return false;
    if (e - mine > 0) quotient.e_.push_back({v, e - mine});
  }
  return i == e_.size();
}

bool glex_before(const Monomial& a, const Monomial& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta > tb;
  const auto& x = a.terms();
  const auto& y = b.terms();
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    Var v;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first))
      v = x[i].first;
    else
      v = y[j].first;
    int ea = (i < x.size() && x[i].first == v) ? x[i].second : 0;
    int eb = (j < y.size() && y[j].first == v) ? y[j].second : 0;
    if (ea != eb) return ea > eb;
    if (i < x.size() && x[i].first == v) ++i;
    if (j < y.size() && y[j].first == v) ++j;
  }
  return false;
}

Polynomial::Polynomial(long c) {
  if (c != 0) t_.emplace(Monomial(), Rational(c));
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

Polynomial Polynomial::var(Var v) { return monomial(Monomial(v), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coeff(Monomial()); }

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  if (t_.empty()) return -1;
  return t_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_.begin()->first.total();
  for (auto& [m, c] : t_)
    if (m.total() != d) return false;
  return true;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vs;
  for (auto& [m, c] : t_)
    for (auto& [v, e] : m.terms()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Polynomial::involves(Var v) const {
  for (auto& [m, c] : t_)
    if (m.exponent(v) > 0) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.t_) v = -v;
  return r;
}

std::string var_name(Var v) {
  if (v >= kFormalBase) {
    int k = v - kFormalBase;
    if (k == 1) return "s1";
    if (k == 2) return "s2";
    if (k > 10 && k < 20) return "y" + std::to_string(k - 10);
    return "t" + std::to_string(k);
  }
  return "x" + std::to_string(v);
}

std::string Polynomial::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool one = (a == 1);
    if (!one || m.is_one()) os << a.get_str();
    bool star = !one;
    for (auto& [v, e] : m.terms()) {
      if (star) os << "*";
      os << var_name(v);
      if (e > 1) os << "^" << e;
      star = true;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
  case ArithOp::Add: return p + q;
  case ArithOp::Sub: return p - q;
  case ArithOp::Mul: return p * q;
  case ArithOp::Neg: return -p;
  case ArithOp::Scale:
    if (!q.is_constant()) throw Error(ErrorCode::Internal, "scale by non-constant");
    return p * q.constant_term();
  }
  return {};
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero polynomial");
  Polynomial rem = p, quo;
  const Monomial& lq = q.leading_monomial();
  const Rational& cq = q.leading_coeff();
  while (!rem.is_zero()) {
    Monomial qm;
    if (!lq.divides_into(rem.leading_monomial(), qm))
      throw Error(ErrorCode::NotDivisible, p.to_string() + " by " + q.to_string());
    Rational c = rem.leading_coeff() / cq;
    Polynomial t = Polynomial::monomial(qm, c);
    quo += t;
    rem -= t * q;
  }
  return quo;
}

namespace {

Polynomial compose_impl(const Polynomial& p, const Bindings& b) {
  Polynomial r;
  // cache powers per variable
  std::map<std::pair<Var, int>, Polynomial> powers;
  auto power = [&](Var v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto bit = b.find(v);
    Polynomial base = bit == b.end() ? Polynomial::var(v) : bit->second;
    return powers.emplace(key, pow(base, e)).first->second;
  };
  for (auto& [m, c] : p.terms()) {
    Polynomial t(c);
    for (auto& [v, e] : m.terms()) t *= power(v, e);
    r += t;
  }
  return r;
}

} // namespace

Polynomial substitute(const Polynomial& p, const Bindings& b) {
  for (auto& [v, q] : b) {
    if (q.is_zero()) continue;
    if (!q.is_homogeneous() || q.degree() != 2)
      throw Error(ErrorCode::InhomogeneousBinding,
                  var_name(v) + " -> " + q.to_string());
  }
  return compose_impl(p, b);
}

Polynomial compose(const Polynomial& p, const Bindings& b) { return compose_impl(p, b); }

std::vector<Monomial> graded_monomials(const std::vector<Var>& vars_in, int degree) {
  if (degree < 0 || degree % 2 != 0)
    throw Error(ErrorCode::DegreeViolation, "graded_monomials needs an even degree >= 0");
  std::vector<Var> vars = vars_in;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  int d = degree / 2;
  std::vector<Monomial> out;
  if (vars.empty()) {
    if (d == 0) out.push_back(Monomial());
    return out;
  }
  std::vector<int> e(vars.size(), 0);
  // descending lex on exponent vectors with fixed total
  auto rec = [&](auto&& self, size_t pos, int left) -> void {
    if (pos + 1 == vars.size()) {
      e[pos] = left;
      std::vector<std::pair<Var, int>> t;
      for (size_t k = 0; k < vars.size(); ++k)
        if (e[k]) t.push_back({vars[k], e[k]});
      out.push_back(Monomial::from_terms(t));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

Polynomial pi(Var i, Var j, int n) {
  Polynomial r;
  for (int k = 0; k <= n; ++k) {
    Monomial m = Monomial(i, k) * Monomial(j, n - k);
    r.add_term(m, 1);
  }
  return r;
}

Var g_s1() { return formal(1); }
Var g_s2() { return formal(2); }

namespace {

mpz_class binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

} // namespace

Polynomial g_poly(int n) {
  Polynomial r = Polynomial::monomial(Monomial(g_s1(), n + 1), 1);
  for (int i = 1; 2 * i <= n + 1; ++i) {
    Rational c = Rational(n + 1) * Rational(i % 2 ? -1 : 1, i) * Rational(binom(n - i, i - 1));
    c.canonicalize();
    r.add_term(Monomial(g_s2(), i) * Monomial(g_s1(), n + 1 - 2 * i), c);
  }
  return r;
}

namespace {

struct FormalWide {
  Polynomial u1, u2;
};

const FormalWide& formal_wide(int n) {
  static std::mutex mu;
  static std::map<int, FormalWide> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Var y1 = formal(11), y2 = formal(12), y3 = formal(13), y4 = formal(14);
  Polynomial Y1 = Polynomial::var(y1), Y2 = Polynomial::var(y2);
  Polynomial Y3 = Polynomial::var(y3), Y4 = Polynomial::var(y4);
  Polynomial g = g_poly(n);
  auto gat = [&](const Polynomial& s1, const Polynomial& s2) {
    return compose(g, {{g_s1(), s1}, {g_s2(), s2}});
  };
  Polynomial e12 = Y1 + Y2, p12 = Y1 * Y2, e34 = Y3 + Y4, p34 = Y3 * Y4;
  FormalWide f;
  f.u1 = exact_divide(gat(e12, p12) - gat(e34, p12), e12 - e34);
  f.u2 = exact_divide(gat(e34, p12) - gat(e34, p34), p12 - p34);
  return cache.emplace(n, std::move(f)).first->second;
}

} // namespace

WideEdgePolys wide_edge_polys(int n, Var x1, Var x2, Var x3, Var x4) {
  if (n < 1) throw Error(ErrorCode::DegreeViolation, "level must be >= 1");
  const FormalWide& f = formal_wide(n);
  Bindings b = {{formal(11), Polynomial::var(x1)},
                {formal(12), Polynomial::var(x2)},
                {formal(13), Polynomial::var(x3)},
                {formal(14), Polynomial::var(x4)}};
  Polynomial X1 = Polynomial::var(x1), X2 = Polynomial::var(x2);
  Polynomial X3 = Polynomial::var(x3), X4 = Polynomial::var(x4);
  WideEdgePolys w;
  w.u1 = substitute(f.u1, b);
  w.u2 = substitute(f.u2, b);
  w.b1 = X1 + X2 - X3 - X4;
  w.b2 = X1 * X2 - X3 * X4;
  return w;
}

} // namespace krh::poly
