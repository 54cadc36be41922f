#include "oracle/homfly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "common/error.hpp"

namespace krh::oracle {

namespace {

constexpr int kMaxDepth = 4096;

// renumber crossings by first appearance so equal diagrams share a memo key
SkeinDiagram normalized(const SkeinDiagram& D) {
  SkeinDiagram R;
  std::map<int, int> id;
  for (auto& c : D.components) {
    std::vector<Passage> v;
    for (auto& p : c) {
      auto it = id.find(p.crossing);
      if (it == id.end()) {
        it = id.emplace(p.crossing, static_cast<int>(id.size())).first;
        R.sign.push_back(D.sign[p.crossing]);
      }
      v.push_back({it->second, p.over});
    }
    R.components.push_back(std::move(v));
  }
  return R;
}

std::string key(const SkeinDiagram& D) {
  std::ostringstream o;
  for (int s : D.sign) o << (s > 0 ? '+' : '-');
  for (auto& c : D.components) {
    o << '|';
    for (auto& p : c) o << p.crossing << (p.over ? 'o' : 'u') << ',';
  }
  return o.str();
}

// rotate so that the passage at index i is last
std::vector<Passage> rotated_last(const std::vector<Passage>& c, size_t i) {
  std::vector<Passage> r(c.begin() + i + 1, c.end());
  r.insert(r.end(), c.begin(), c.begin() + i + 1);
  return r;
}

SkeinDiagram switched(SkeinDiagram D, int x) {
  D.sign[x] = -D.sign[x];
  for (auto& c : D.components)
    for (auto& p : c)
      if (p.crossing == x) p.over = !p.over;
  return D;
}

// oriented smoothing: arriving on one strand, leave on the other
SkeinDiagram smoothed(const SkeinDiagram& D, int x) {
  int cu = -1, co = -1;
  size_t iu = 0, io = 0;
  for (size_t c = 0; c < D.components.size(); ++c)
    for (size_t i = 0; i < D.components[c].size(); ++i)
      if (D.components[c][i].crossing == x) {
        if (D.components[c][i].over)
          co = static_cast<int>(c), io = i;
        else
          cu = static_cast<int>(c), iu = i;
      }
  SkeinDiagram R;
  R.sign = D.sign;
  auto strip = [&](std::vector<Passage> v) {
    v.erase(std::remove_if(v.begin(), v.end(), [&](const Passage& p) { return p.crossing == x; }), v.end());
    return v;
  };
  for (size_t c = 0; c < D.components.size(); ++c)
    if (static_cast<int>(c) != cu && static_cast<int>(c) != co) R.components.push_back(D.components[c]);
  if (cu == co) {
    auto v = rotated_last(D.components[cu], iu);
    auto at = std::find_if(v.begin(), v.end(), [&](const Passage& p) { return p.crossing == x && p.over; });
    R.components.push_back(strip(std::vector<Passage>(v.begin(), at)));
    R.components.push_back(strip(std::vector<Passage>(at + 1, v.end())));
  } else {
    auto a = rotated_last(D.components[cu], iu);
    auto b = rotated_last(D.components[co], io);
    a.pop_back();
    b.pop_back();
    a.insert(a.end(), b.begin(), b.end());
    R.components.push_back(strip(a));
  }
  // crossing x is gone; drop its sign slot by renumbering
  return normalized(R);
}

class Skein {
public:
  explicit Skein(int n) : n_(n) {}

  LaurentPoly eval(const SkeinDiagram& D0, int depth) {
    if (depth > kMaxDepth) throw Error(ErrorCode::RecursionDepthExceeded, "skein recursion too deep");
    SkeinDiagram D = normalized(D0);
    std::string k = key(D);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    // first crossing met as an under-passage on its first visit
    std::vector<char> seen(D.sign.size(), 0);
    int bad = -1;
    for (auto& c : D.components) {
      for (auto& p : c) {
        if (!seen[p.crossing] && !p.over) {
          bad = p.crossing;
          break;
        }
        seen[p.crossing] = 1;
      }
      if (bad >= 0) break;
    }
    LaurentPoly r;
    if (bad < 0) {
      r = LaurentPoly(1);
      for (size_t c = 0; c < D.components.size(); ++c) r *= quantum_int(n_);
    } else {
      const LaurentPoly z = LaurentPoly::q(1) - LaurentPoly::q(-1);
      LaurentPoly other = eval(switched(D, bad), depth + 1);
      LaurentPoly zero = eval(smoothed(D, bad), depth + 1);
      if (D.sign[bad] > 0)
        r = LaurentPoly::q(-2 * n_) * other + LaurentPoly::q(-n_) * z * zero;
      else
        r = LaurentPoly::q(2 * n_) * other - LaurentPoly::q(n_) * z * zero;
    }
    memo_[k] = r;
    return r;
  }

private:
  int n_;
  std::map<std::string, LaurentPoly> memo_;
};

} // namespace

SkeinDiagram SkeinDiagram::from_link(const link::LinkDiagram& D) {
  SkeinDiagram S;
  // edge -> (crossing, entering as over?)
  std::map<int, std::pair<int, bool>> enters;
  std::map<std::pair<int, bool>, int> leaves;  // (crossing, over) -> outgoing edge
  const auto& cr = D.crossings();
  for (int k = 0; k < static_cast<int>(cr.size()); ++k) {
    auto& e = cr[k].e;
    S.sign.push_back(cr[k].sign);
    int oin = cr[k].sign > 0 ? e[3] : e[1], oout = cr[k].sign > 0 ? e[1] : e[3];
    enters[e[0]] = {k, false};
    enters[oin] = {k, true};
    leaves[{k, false}] = e[2];
    leaves[{k, true}] = oout;
  }
  for (auto& comp : D.components()) {
    std::vector<Passage> v;
    auto it = enters.find(comp.front());
    if (it != enters.end()) {
      int start = comp.front(), e = start;
      do {
        auto [k, over] = enters.at(e);
        v.push_back({k, over});
        e = leaves.at({k, over});
      } while (e != start);
    }
    S.components.push_back(std::move(v));
  }
  return S;
}

LaurentPoly homfly_specialized(const SkeinDiagram& D, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDiagram, "level n must be positive");
  Skein s(n);
  return s.eval(D, 0);
}

LaurentPoly homfly_specialized(const link::LinkDiagram& D, int n) {
  return homfly_specialized(SkeinDiagram::from_link(D), n);
}

} // namespace krh::oracle
