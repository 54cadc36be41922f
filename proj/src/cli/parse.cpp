#include "cli/parse.hpp"

#include <cctype>
#include <climits>
#include <map>

namespace krh::cli {

namespace {

class Scanner {
public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(const std::string& w) {
    skip_ws();
    if (s_.compare(i_, w.size(), w) != 0) fail("expected '" + w + "'");
    i_ += w.size();
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(i_, w.size(), w) != 0) return false;
    i_ += w.size();
    return true;
  }
  long integer() {
    skip_ws();
    size_t st = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = st;
      fail("expected an integer");
    }
    if (i_ - digits > 9) fail("integer too large");
    return std::stol(s_.substr(st, i_ - st));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(i_));
  }

private:
  const std::string& s_;
  size_t i_ = 0;
};

} // namespace

link::LinkDiagram parse_pd(const std::string& text) {
  Scanner sc(text);
  sc.expect_word("PD");
  sc.expect('[');
  std::vector<std::array<int, 4>> pd;
  if (!sc.accept(']')) {
    do {
      sc.expect('X');
      sc.expect('[');
      std::array<int, 4> x{};
      for (int k = 0; k < 4; ++k) {
        if (k) sc.expect(',');
        long v = sc.integer();
        if (v <= 0) sc.fail("edge ids must be positive");
        x[k] = static_cast<int>(v);
      }
      sc.expect(']');
      pd.push_back(x);
    } while (sc.accept(','));
    sc.expect(']');
  }
  int loops = 0;
  sc.accept(',') || sc.accept(';');
  if (sc.accept_word("loops")) {
    sc.expect('=');
    long v = sc.integer();
    if (v < 0 || v > 64) sc.fail("loop count out of range");
    loops = static_cast<int>(v);
  }
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  if (pd.empty() && loops == 0) throw Error(ErrorCode::InvalidDiagram, "empty diagram");
  return link::LinkDiagram::from_pd(pd, loops);
}

link::LinkDiagram parse_braid(const std::string& text) {
  Scanner sc(text);
  sc.expect_word("braid");
  sc.expect(':');
  long strands = sc.integer();
  if (strands < 1 || strands > 64) sc.fail("strand count out of range");
  sc.expect(':');
  sc.expect('[');
  std::vector<long> word;
  if (!sc.accept(']')) {
    do {
      word.push_back(sc.integer());
    } while (sc.accept(','));
    sc.expect(']');
  }
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  for (long g : word)
    if (g == 0 || g >= strands || -g >= strands)
      throw Error(ErrorCode::GeneratorOutOfRange,
                  "generator " + std::to_string(g) + " on " + std::to_string(strands) + " strands");

  // strands run upward; cur[p] is the edge currently at position p
  std::vector<int> start(strands), cur(strands);
  int next = 1;
  for (long p = 0; p < strands; ++p) start[p] = cur[p] = next++;
  std::vector<std::array<int, 4>> pd;
  std::vector<int> signs;
  std::vector<char> touched(strands, 0);
  for (long g : word) {
    long p = (g > 0 ? g : -g) - 1;
    int bl = cur[p], br = cur[p + 1];
    int tl = next++, tr = next++;
    // the strand from the bottom left ends top right
    if (g > 0)
      pd.push_back({br, tr, tl, bl});
    else
      pd.push_back({bl, br, tr, tl});
    signs.push_back(g > 0 ? 1 : -1);
    cur[p] = tl;
    cur[p + 1] = tr;
    touched[p] = touched[p + 1] = 1;
  }
  // closure: the top edge at each position is the bottom edge
  std::map<int, int> rename;
  int loops = 0;
  for (long p = 0; p < strands; ++p) {
    if (!touched[p]) ++loops;
    rename[cur[p]] = start[p];
  }
  for (auto& x : pd)
    for (int& e : x) {
      auto it = rename.find(e);
      if (it != rename.end()) e = it->second;
    }
  // compact edge ids
  std::map<int, int> compact;
  for (auto& x : pd)
    for (int e : x) compact.emplace(e, 0);
  int id = 1;
  for (auto& [e, v] : compact) v = id++;
  for (auto& x : pd)
    for (int& e : x) e = compact[e];
  return link::LinkDiagram::from_pd(pd, loops, &signs);
}

link::LinkDiagram parse_link(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.compare(i, 5, "braid") == 0) return parse_braid(text);
  return parse_pd(text);
}

} // namespace krh::cli
