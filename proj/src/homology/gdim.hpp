#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace krh::homology {

// Laurent polynomial in q and s with s^2 = 1. Key (s exponent 0|1, q exponent).
class GdimPoly {
public:
  GdimPoly() = default;
  static GdimPoly monomial(int s, int q, long c = 1);
  static GdimPoly one() { return monomial(0, 0, 1); }

  const std::map<std::pair<int, int>, long>& terms() const { return c_; }
  long coeff(int s, int q) const;
  void add(int s, int q, long c);
  bool is_zero() const { return c_.empty(); }
  bool nonnegative() const;
  // parity where all terms live, -1 if mixed or empty
  int single_parity() const;

  GdimPoly& operator+=(const GdimPoly& o);
  GdimPoly& operator-=(const GdimPoly& o);
  friend GdimPoly operator+(GdimPoly a, const GdimPoly& b) { return a += b; }
  friend GdimPoly operator-(GdimPoly a, const GdimPoly& b) { return a -= b; }
  friend GdimPoly operator*(const GdimPoly& a, const GdimPoly& b);
  bool operator==(const GdimPoly& o) const { return c_ == o.c_; }
  bool operator!=(const GdimPoly& o) const { return c_ != o.c_; }

  GdimPoly shifted(int dq, int ds) const;
  // forget s (set s = 1)
  std::map<int, long> at_s_one() const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& o, const GdimPoly& g) { return o << g.to_string(); }

private:
  std::map<std::pair<int, int>, long> c_;
};

// [i] as a GdimPoly without s
GdimPoly qint(int i);
// 1 + s q^k
GdimPoly one_plus_sq(int k);

} // namespace krh::homology
