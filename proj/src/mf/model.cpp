#include "mf/model.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace krh::mf {

namespace {

using LinForm = std::map<Var, Rational>;

LinForm to_form(const Polynomial& p) {
  LinForm f;
  for (auto& [m, c] : p.terms()) f[m.terms().front().first] = c;
  return f;
}

Polynomial from_form(const LinForm& f) {
  Polynomial p;
  for (auto& [v, c] : f) p.add_term(poly::Monomial(v), c);
  return p;
}

void axpy(LinForm& y, const Rational& a, const LinForm& x) {
  for (auto& [v, c] : x) {
    Rational& t = y[v];
    t += a * c;
    if (t == 0) y.erase(v);
  }
}

// reduced echelon form over linear forms, pivot = smallest variable
class FormEchelon {
public:
  // returns false if f is in the span
  bool insert(LinForm f) {
    reduce(f);
    if (f.empty()) return false;
    Var p = f.begin()->first;
    Rational inv = 1 / f.begin()->second;
    for (auto& [v, c] : f) c *= inv;
    for (auto& [q, g] : rows_) {
      auto it = g.find(p);
      if (it != g.end()) {
        Rational c = it->second;
        axpy(g, -c, f);
      }
    }
    rows_[p] = f;
    return true;
  }
  bool independent(LinForm f) const {
    reduce(f);
    return !f.empty();
  }
  const std::map<Var, LinForm>& rows() const { return rows_; }

private:
  std::map<Var, LinForm> rows_;
  void reduce(LinForm& f) const {
    for (auto& [p, g] : rows_) {
      auto it = f.find(p);
      if (it != f.end()) {
        Rational c = it->second;
        axpy(f, -c, g);
      }
    }
  }
};

Mask compress(Mask J, const std::vector<int>& kept) {
  Mask m = 0;
  for (size_t t = 0; t < kept.size(); ++t)
    if (J >> kept[t] & 1) m |= Mask(1) << t;
  return m;
}

Mask insert_bit(Mask m, int pos, int bit) {
  Mask low = m & ((Mask(1) << pos) - 1);
  Mask high = m >> pos;
  return low | (Mask(bit) << pos) | (high << (pos + 1));
}

} // namespace

bool is_linear_form(const Polynomial& p) {
  return !p.is_zero() && p.is_homogeneous() && p.degree() == 2;
}

QuotientModel make_model(const KoszulFactorization& raw, std::vector<ExclusionChoice> chosen) {
  std::sort(chosen.begin(), chosen.end());
  QuotientModel M;
  M.chosen = chosen;
  FormEchelon E;
  std::set<int> rows;
  for (auto& c : chosen) {
    if (c.row < 0 || c.row >= raw.rank() || !rows.insert(c.row).second)
      throw Error(ErrorCode::NotExcludable, "bad exclusion row");
    const Polynomial& e = c.a_side ? raw.rows[c.row].a : raw.rows[c.row].b;
    if (!is_linear_form(e)) throw Error(ErrorCode::NotExcludable, "entry is not a linear form");
    if (!E.insert(to_form(e)))
      throw Error(ErrorCode::NotExcludable, "linear entries are dependent");
    if (c.a_side)
      M.a_mask |= Mask(1) << c.row;
    else
      M.b_mask |= Mask(1) << c.row;
  }
  for (auto& [p, f] : E.rows()) {
    LinForm rest = f;
    rest.erase(p);
    M.psi[p] = -from_form(rest);
  }
  std::vector<Row> krows;
  int dq = 0, dz = 0;
  for (int k = 0; k < raw.rank(); ++k) {
    if (rows.count(k)) {
      if (M.a_mask >> k & 1) {
        dq += raw.n + 1 - raw.rows[k].adeg;
        dz += 1;
      }
      continue;
    }
    M.kept.push_back(k);
    krows.push_back({poly::substitute(raw.rows[k].a, M.psi), poly::substitute(raw.rows[k].b, M.psi),
                     raw.rows[k].adeg});
  }
  std::vector<Var> vars;
  for (Var v : raw.vars)
    if (!M.psi.count(v)) vars.push_back(v);
  M.K = KoszulFactorization(raw.n, std::move(krows), std::move(vars), raw.q_shift + dq,
                            raw.z2_shift + dz);
  return M;
}

std::vector<ExclusionChoice> greedy_exclusions(const KoszulFactorization& raw, Mask skip) {
  FormEchelon E;
  std::vector<ExclusionChoice> out;
  for (int k = 0; k < raw.rank(); ++k) {
    if (skip >> k & 1) continue;
    for (int side = 0; side < 2; ++side) {
      const Polynomial& e = side ? raw.rows[k].a : raw.rows[k].b;
      if (!is_linear_form(e)) continue;
      if (E.insert(to_form(e))) {
        out.push_back({k, side == 1});
        break;
      }
    }
  }
  return out;
}

Mask model_to_raw(const QuotientModel& M, Mask J) {
  Mask r = M.a_mask;
  for (size_t t = 0; t < M.kept.size(); ++t)
    if (J >> t & 1) r |= Mask(1) << M.kept[t];
  return r;
}

int canonical_sign(Mask J, Mask A) {
  Mask rest = J & ~A;
  int s = 0;
  for (Mask a = A; a; a &= a - 1) {
    int i = std::countr_zero(a);
    s += std::popcount(rest & ((Mask(1) << i) - 1));
  }
  return (s & 1) ? -1 : 1;
}

PolyVector forward(const QuotientModel& from, const QuotientModel& to, const PolyVector& v) {
  PolyVector out;
  for (auto& [m, p] : v) {
    if (p.is_zero()) continue;
    Mask J = model_to_raw(from, m);
    if (J & to.b_mask) continue;
    if ((J & to.a_mask) != to.a_mask) continue;
    Mask ms = compress(J & ~to.a_mask, to.kept);
    int s = canonical_sign(J, to.a_mask) * canonical_sign(J, from.a_mask);
    Polynomial q = poly::substitute(p, to.psi);
    if (s < 0) q = -q;
    out[ms] += q;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

Lifter::Lifter(const QuotientModel& from, const QuotientModel& to) : from_(&from), to_(&to) {
  for (auto& c : from.chosen)
    if (std::find(to.chosen.begin(), to.chosen.end(), c) == to.chosen.end())
      throw Error(ErrorCode::Internal, "lift needs nested exclusion sets");
  KoszulFactorization cur = from.K;
  std::vector<int> rows = from.kept;
  for (auto& c : to.chosen) {
    if (std::find(from.chosen.begin(), from.chosen.end(), c) != from.chosen.end()) continue;
    int pos = static_cast<int>(std::find(rows.begin(), rows.end(), c.row) - rows.begin());
    const Polynomial& e = c.a_side ? cur.rows[pos].a : cur.rows[pos].b;
    Var x = -1;
    for (Var v : e.variables())
      if (to.psi.count(v)) {
        x = v;
        break;
      }
    if (x < 0) throw Error(ErrorCode::Internal, "no pivot variable for a lift step");
    steps_.push_back({cur, pos, c.a_side});
    cur = c.a_side ? exclude_variable_a(cur, pos, x).K : exclude_variable(cur, pos, x).K;
    rows.erase(rows.begin() + pos);
  }
  if (!(cur == to.K)) throw Error(ErrorCode::Internal, "stepwise exclusion disagrees with model");
}

namespace {

PolyVector apply_d_local(const KoszulFactorization& K, const PolyVector& v) {
  PolyVector out;
  for (auto& [m, p] : v)
    for (auto& [J, c] : K.d(m)) out[J] += c * p;
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

} // namespace

PolyVector Lifter::lift(const PolyVector& v) const {
  PolyVector z = v;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    const KoszulFactorization& K = it->before;
    int pos = it->pos;
    Mask bit = Mask(1) << pos;
    PolyVector z0;
    for (auto& [m, p] : z) {
      if (it->a_side) {
        int s = (std::popcount(m & (bit - 1)) & 1) ? -1 : 1;
        z0[insert_bit(m, pos, 1)] = s > 0 ? p : -p;
      } else {
        z0[insert_bit(m, pos, 0)] = p;
      }
    }
    PolyVector dz = apply_d_local(K, z0);
    const Polynomial& div = it->a_side ? K.rows[pos].a : K.rows[pos].b;
    for (auto& [J, c] : dz) {
      bool has = J & bit;
      if (has != it->a_side) continue;
      Mask W = it->a_side ? (J & ~bit) : (J | bit);
      int s = (std::popcount(J >> (pos + 1)) & 1) ? -1 : 1;
      Polynomial num = s > 0 ? -c : c;
      z0[W] += poly::exact_divide(num, div);
    }
    if (!apply_d_local(K, z0).empty())
      throw Error(ErrorCode::Internal, "lifted vector is not a cocycle");
    z.swap(z0);
  }
  PolyVector back = forward(*from_, *to_, z);
  if (back == v) return z;
  for (auto& [m, p] : back) p = -p;
  if (back == v) {
    for (auto& [m, p] : z) p = -p;
    return z;
  }
  throw Error(ErrorCode::Internal, "lift does not invert the quotient map");
}

} // namespace krh::mf
