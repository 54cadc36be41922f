#pragma once

#include <map>
#include <string>

#include "poly/polynomial.hpp"

namespace krh::oracle {

using poly::Rational;

// Laurent polynomial in q with rational coefficients; no zero coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT
  static LaurentPoly q(int k, const Rational& c = 1);

  const std::map<int, Rational>& terms() const { return c_; }
  Rational coeff(int k) const;
  void add(int k, const Rational& c);
  bool is_zero() const { return c_.empty(); }
  bool nonnegative() const;
  int min_degree() const;  // requires nonzero
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const { return LaurentPoly() - *this; }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }
  bool operator<(const LaurentPoly& o) const { return c_ < o.c_; }

  // q -> q^{-1}
  LaurentPoly mirrored() const;
  // exact division; throws NotDivisible
  LaurentPoly divided_by(const LaurentPoly& d) const;

  // descending powers: "q^3+q+q^-1+q^-3", "3*q^2-1", "0"
  std::string to_string() const;
  // inverse of to_string; throws ParseError
  static LaurentPoly parse(const std::string& s);

private:
  std::map<int, Rational> c_;
};

// [i] = q^{i-1} + q^{i-3} + ... + q^{1-i}; [0] = 0, [-i] = -[i]
LaurentPoly quantum_int(int i);

} // namespace krh::oracle
