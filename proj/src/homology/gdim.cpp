#include "homology/gdim.hpp"

#include <sstream>

namespace krh::homology {

GdimPoly GdimPoly::monomial(int s, int q, long c) {
  GdimPoly g;
  g.add(s, q, c);
  return g;
}

long GdimPoly::coeff(int s, int q) const {
  auto it = c_.find({s & 1, q});
  return it == c_.end() ? 0 : it->second;
}

void GdimPoly::add(int s, int q, long c) {
  if (c == 0) return;
  auto key = std::make_pair(((s % 2) + 2) % 2, q);
  long& v = c_[key];
  v += c;
  if (v == 0) c_.erase(key);
}

bool GdimPoly::nonnegative() const {
  for (auto& [k, v] : c_)
    if (v < 0) return false;
  return true;
}

int GdimPoly::single_parity() const {
  int p = -1;
  for (auto& [k, v] : c_) {
    if (p == -1)
      p = k.first;
    else if (p != k.first)
      return -1;
  }
  return p;
}

GdimPoly& GdimPoly::operator+=(const GdimPoly& o) {
  for (auto& [k, v] : o.c_) add(k.first, k.second, v);
  return *this;
}

GdimPoly& GdimPoly::operator-=(const GdimPoly& o) {
  for (auto& [k, v] : o.c_) add(k.first, k.second, -v);
  return *this;
}

GdimPoly operator*(const GdimPoly& a, const GdimPoly& b) {
  GdimPoly r;
  for (auto& [ka, va] : a.c_)
    for (auto& [kb, vb] : b.c_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

GdimPoly GdimPoly::shifted(int dq, int ds) const {
  GdimPoly r;
  for (auto& [k, v] : c_) r.add(k.first + ds, k.second + dq, v);
  return r;
}

std::map<int, long> GdimPoly::at_s_one() const {
  std::map<int, long> r;
  for (auto& [k, v] : c_) {
    r[k.second] += v;
    if (r[k.second] == 0) r.erase(k.second);
  }
  return r;
}

std::string GdimPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending q, s-free terms first
  for (int s = 0; s < 2; ++s) {
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (it->first.first != s) continue;
      long v = it->second;
      int q = it->first.second;
      if (!first) os << (v < 0 ? "-" : "+");
      else if (v < 0) os << "-";
      first = false;
      long a = v < 0 ? -v : v;
      bool bare = true;
      if (a != 1) {
        os << a;
        bare = false;
      }
      if (s) {
        os << (bare ? "" : "*") << "s";
        bare = false;
      }
      if (q != 0) {
        os << (bare ? "" : "*") << "q";
        if (q != 1) os << "^" << q;
        bare = false;
      }
      if (bare) os << "1";
    }
  }
  return os.str();
}

GdimPoly qint(int i) {
  if (i < 0) return GdimPoly() - qint(-i);
  GdimPoly g;
  for (int k = 0; k < i; ++k) g.add(0, i - 1 - 2 * k, 1);
  return g;
}

GdimPoly one_plus_sq(int k) {
  GdimPoly g = GdimPoly::one();
  g.add(1, k, 1);
  return g;
}

} // namespace krh::homology
