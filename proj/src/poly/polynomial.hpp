#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "common/error.hpp"

namespace krh::poly {

using Rational = mpq_class;
using Var = int;

// Marks are non-negative ids. Formal helper variables (s1, s2, y1..y6, ...)
// live far above any mark id.
constexpr Var kFormalBase = 1 << 24;
inline Var formal(int k) { return kFormalBase + k; }

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(Var v, int e = 1);

  // sorted by variable id, exponents > 0
  const std::vector<std::pair<Var, int>>& terms() const { return e_; }
  int total() const;
  int degree() const { return 2 * total(); }
  int exponent(Var v) const;
  bool is_one() const { return e_.empty(); }

  Monomial operator*(const Monomial& o) const;
  // nullopt-like: returns false if o does not divide *this
  bool divides_into(const Monomial& o, Monomial& quotient) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  static Monomial from_terms(std::vector<std::pair<Var, int>> t);

private:
  std::vector<std::pair<Var, int>> e_;
};

// graded-lex: higher total degree first, then larger exponent of the
// smallest variable id first. Used as "a comes before b".
bool glex_before(const Monomial& a, const Monomial& b);

struct GlexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return glex_before(a, b); }
};

class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GlexOrder>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT: constants convert implicitly
  Polynomial(const Rational& c);  // NOLINT
  static Polynomial var(Var v);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  // leading term in glex order; requires nonzero
  const Monomial& leading_monomial() const { return t_.begin()->first; }
  const Rational& leading_coeff() const { return t_.begin()->second; }

  // degree in the grading deg x = 2; -1 for zero
  int degree() const;
  bool is_homogeneous() const;
  std::vector<Var> variables() const;
  bool involves(Var v) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial& o) const { return t_ == o.t_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  void add_term(const Monomial& m, const Rational& c);

  std::string to_string() const;

private:
  TermMap t_;
};

Polynomial pow(const Polynomial& p, int e);

enum class ArithOp { Add, Sub, Mul, Neg, Scale };
// generic entry point; Scale multiplies p by the constant polynomial q
Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op);

// r with p = q*r, NotDivisible otherwise
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

using Bindings = std::map<Var, Polynomial>;

// ring map fixing unbound variables; every binding must be homogeneous of
// degree 2
Polynomial substitute(const Polynomial& p, const Bindings& b);
// same without the degree check (weighted helper variables such as s2)
Polynomial compose(const Polynomial& p, const Bindings& b);

// all monomials of the given (even) degree, graded-lex order
std::vector<Monomial> graded_monomials(const std::vector<Var>& vars, int degree);

Polynomial pi(Var i, Var j, int n);

// g(s1,s2) with g(x+y,xy) = x^{n+1}+y^{n+1}, in formal variables s1,s2
Var g_s1();
Var g_s2();
Polynomial g_poly(int n);

struct WideEdgePolys {
  Polynomial u1, u2, b1, b2;
};
WideEdgePolys wide_edge_polys(int n, Var x1, Var x2, Var x3, Var x4);

// variable naming used by to_string
std::string var_name(Var v);

} // namespace krh::poly
