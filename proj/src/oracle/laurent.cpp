#include "oracle/laurent.hpp"

#include <cctype>
#include <sstream>

#include "common/error.hpp"

namespace krh::oracle {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly LaurentPoly::q(int k, const Rational& c) {
  LaurentPoly p;
  p.add(k, c);
  return p;
}

Rational LaurentPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add(int k, const Rational& c) {
  if (c == 0) return;
  Rational& r = c_[k];
  r += c;
  if (r == 0) c_.erase(k);
}

bool LaurentPoly::nonnegative() const {
  for (auto& [k, c] : c_)
    if (c < 0) return false;
  return true;
}

int LaurentPoly::min_degree() const {
  if (c_.empty()) throw Error(ErrorCode::Internal, "degree of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (c_.empty()) throw Error(ErrorCode::Internal, "degree of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [k, c] : o.c_) add(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [k, c] : o.c_) add(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (auto& [a, x] : c_)
    for (auto& [b, y] : o.c_) r.add(a + b, x * y);
  return *this = r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (auto& [k, c] : c_) r.c_[-k] = c;
  return r;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero");
  LaurentPoly rem = *this, quo;
  int dmax = d.max_degree(), dmin = d.min_degree();
  const Rational& lead = d.c_.rbegin()->second;
  while (!rem.is_zero()) {
    int k = rem.max_degree();
    if (k - dmax + dmin < rem.min_degree()) throw Error(ErrorCode::NotDivisible, to_string() + " by " + d.to_string());
    LaurentPoly t = q(k - dmax, rem.c_.rbegin()->second / lead);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rational c = it->second;
    int k = it->first;
    if (c < 0) {
      o << '-';
      c = -c;
    } else if (!first) {
      o << '+';
    }
    first = false;
    if (k == 0) {
      o << c.get_str();
      continue;
    }
    if (c != 1) o << c.get_str() << '*';
    o << 'q';
    if (k != 1) o << '^' << k;
  }
  return o.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](size_t pos) -> LaurentPoly {
    throw Error(ErrorCode::ParseError, "bad polynomial '" + text + "' at " + std::to_string(pos));
  };
  if (s == "0") return {};
  if (s.empty()) return fail(0);
  LaurentPoly r;
  size_t i = 0;
  auto read_int = [&](std::string& out) {
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    out = s.substr(st, i - st);
    return i > st;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      return fail(i);
    }
    Rational c = 1;
    std::string num;
    bool has_num = read_int(num);
    if (has_num) {
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den;
        if (!read_int(den)) return fail(i);
        c = Rational(num + "/" + den);
        c.canonicalize();
      } else {
        c = Rational(num);
      }
    }
    int k = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
      if (s[i] == '*') {
        if (!has_num) return fail(i);
        ++i;
      } else if (has_num) {
        return fail(i);
      }
      if (i >= s.size() || s[i] != 'q') return fail(i);
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int es = 1;
        if (i < s.size() && s[i] == '-') es = -1, ++i;
        std::string e;
        if (!read_int(e)) return fail(i);
        k = es * std::stoi(e);
      }
    } else if (!has_num) {
      return fail(i);
    }
    r.add(k, sign * c);
  }
  return r;
}

LaurentPoly quantum_int(int i) {
  LaurentPoly r;
  int a = i < 0 ? -i : i;
  for (int k = 0; k < a; ++k) r.add(a - 1 - 2 * k, i < 0 ? -1 : 1);
  return r;
}

} // namespace krh::oracle
