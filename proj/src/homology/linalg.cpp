#include "homology/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace krh::homology {

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.push_back({i, c});
    if (out.back().second == 0) out.pop_back();
  }
  v.swap(out);
}

Echelon::Echelon(long dim) : dim_(dim), pivot_of_(dim, -1) {}

SparseVec Echelon::reduce_impl(const SparseVec& v, bool stop_at_new_lead) const {
  if (acc_.size() != static_cast<size_t>(dim_)) {
    acc_.assign(dim_, Rational(0));
    touched_.assign(dim_, 0);
  }
  std::priority_queue<long, std::vector<long>, std::greater<long>> heap;
  std::vector<long> all;
  for (auto& [i, c] : v) {
    acc_[i] = c;
    touched_[i] = 1;
    heap.push(i);
    all.push_back(i);
  }
  SparseVec out;
  bool lead_found = false;
  Rational t;
  while (!heap.empty()) {
    long i = heap.top();
    heap.pop();
    while (!heap.empty() && heap.top() == i) heap.pop();
    if (acc_[i] == 0) continue;
    long p = pivot_of_[i];
    if (p >= 0 && !(stop_at_new_lead && lead_found)) {
      Rational c = acc_[i];
      for (auto& [k, pv] : vecs_[p]) {
        if (!touched_[k]) {
          touched_[k] = 1;
          all.push_back(k);
        }
        if (acc_[k] == 0) heap.push(k);
        t = c * pv;
        acc_[k] -= t;
      }
      continue;
    }
    lead_found = true;
    out.push_back({i, acc_[i]});
  }
  for (long k : all) {
    acc_[k] = 0;
    touched_[k] = 0;
  }
  return out;
}

bool Echelon::insert(SparseVec v) {
  SparseVec r = reduce_impl(v, true);
  if (r.empty()) return false;
  Rational inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;
  pivot_of_[r.front().first] = static_cast<long>(vecs_.size());
  vecs_.push_back(std::move(r));
  return true;
}

SparseVec Echelon::reduce(const SparseVec& v) const { return reduce_impl(v, false); }

void Echelon::make_reduced() {
  // process in descending pivot order so later vectors are already reduced
  std::vector<long> order(vecs_.size());
  for (size_t k = 0; k < vecs_.size(); ++k) order[k] = static_cast<long>(k);
  std::sort(order.begin(), order.end(),
            [&](long a, long b) { return vecs_[a].front().first > vecs_[b].front().first; });
  for (long k : order) {
    SparseVec& v = vecs_[k];
    long lead = v.front().first;
    SparseVec tail(v.begin() + 1, v.end());
    SparseVec red = reduce_impl(tail, false);
    SparseVec nv;
    nv.reserve(red.size() + 1);
    nv.push_back({lead, Rational(1)});
    for (auto& e : red) nv.push_back(e);
    v.swap(nv);
  }
}

long rank_of(const DenseMatrix& M) {
  if (M.empty()) return 0;
  Echelon E(static_cast<long>(M[0].size()));
  long r = 0;
  for (auto& row : M) {
    SparseVec v;
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) v.push_back({static_cast<long>(j), row[j]});
    if (E.insert(v)) ++r;
  }
  return r;
}

DenseMatrix multiply(const DenseMatrix& A, const DenseMatrix& B) {
  size_t n = A.size(), k = B.size(), m = k ? B[0].size() : 0;
  DenseMatrix C(n, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        if (B[t][j] != 0) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

bool is_zero(const DenseMatrix& M) {
  for (auto& r : M)
    for (auto& e : r)
      if (e != 0) return false;
  return true;
}

} // namespace krh::homology
