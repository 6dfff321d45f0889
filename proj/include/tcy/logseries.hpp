#pragma once

#include <map>

#include "tcy/rational.hpp"

namespace tcy {

// monomial in the commuting formal symbols log q_1, ..., log q_m
using LogMono = std::vector<int>;

struct LogMonoLess {
  bool operator()(const LogMono& a, const LogMono& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Truncated multivariate series: sum over exponent tuples e (rational) of
// q^e * (polynomial in log q_1..log q_m) with coefficients in K.
// Terms with total exponent degree <= bound are exact; higher terms dropped.
template <class K>
struct LogSeries {
  using Term = std::map<LogMono, K, LogMonoLess>;

  long nvars = 0;
  Rat bound = 0;
  std::map<RatVec, Term, RatVecLess> t;

  LogSeries() = default;
  LogSeries(long vars, const Rat& b) : nvars(vars), bound(b) {}

  static Rat total_degree(const RatVec& e) {
    Rat s = 0;
    for (const auto& x : e) s += x;
    return s;
  }

  static LogSeries constant(long vars, const Rat& b, const K& value) {
    LogSeries s(vars, b);
    if (!(value == K(0))) s.t[RatVec(vars, Rat(0))][LogMono(vars, 0)] = value;
    return s;
  }

  static LogSeries monomial(long vars, const Rat& b, const RatVec& e, const K& value) {
    LogSeries s(vars, b);
    if (!(value == K(0)) && total_degree(e) <= b) s.t[e][LogMono(vars, 0)] = value;
    return s;
  }

  static LogSeries log_var(long vars, const Rat& b, long axis) {
    LogSeries s(vars, b);
    LogMono m(vars, 0);
    m[axis] = 1;
    s.t[RatVec(vars, Rat(0))][m] = K(1);
    return s;
  }

  bool is_zero() const { return t.empty(); }

  void add_term(const RatVec& e, const LogMono& m, const K& coef) {
    if (coef == K(0)) return;
    if (total_degree(e) > bound) return;
    auto& slot = t[e][m];
    slot = slot + coef;
    if (slot == K(0)) {
      t[e].erase(m);
      if (t[e].empty()) t.erase(e);
    }
  }

  K coeff(const RatVec& e, const LogMono& m) const {
    auto it = t.find(e);
    if (it == t.end()) return K(0);
    auto jt = it->second.find(m);
    return jt == it->second.end() ? K(0) : jt->second;
  }

  K coeff_plain(const RatVec& e) const { return coeff(e, LogMono(nvars, 0)); }

  Rat min_degree() const {
    bool first = true;
    Rat best = 0;
    for (const auto& [e, terms] : t) {
      Rat d = total_degree(e);
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
    return first ? bound : best;  // empty series: no terms below the bound
  }

  bool has_log_terms() const {
    for (const auto& [e, terms] : t)
      for (const auto& [m, coef] : terms)
        for (int d : m)
          if (d != 0) return true;
    return false;
  }

  friend LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    LogSeries r(a.nvars ? a.nvars : b.nvars, std::min(a.bound, b.bound));
    if (a.is_zero()) r.bound = b.bound;
    if (b.is_zero()) r.bound = a.bound;
    for (const auto& [e, terms] : a.t)
      for (const auto& [m, coef] : terms) r.add_term(e, m, coef);
    for (const auto& [e, terms] : b.t)
      for (const auto& [m, coef] : terms) r.add_term(e, m, coef);
    return r;
  }
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b) {
    return a + (K(-1) * b);
  }
  friend LogSeries operator*(const K& k, const LogSeries& s) {
    LogSeries r(s.nvars, s.bound);
    if (k == K(0)) return r;
    for (const auto& [e, terms] : s.t)
      for (const auto& [m, coef] : terms) r.add_term(e, m, k * coef);
    return r;
  }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    // exactness: a term of a*b at degree d mixes a-terms of degree
    // d - mindeg(b) and below, so the product is exact through
    // min(bound_a + mindeg_b, bound_b + mindeg_a).
    LogSeries r(a.nvars ? a.nvars : b.nvars, Rat(0));
    if (a.is_zero() || b.is_zero()) {
      r.bound = std::max(a.bound + b.min_degree(), b.bound + a.min_degree());
      return r;
    }
    r.bound = std::min(a.bound + b.min_degree(), b.bound + a.min_degree());
    for (const auto& [ea, ta] : a.t)
      for (const auto& [eb, tb] : b.t) {
        RatVec e(r.nvars);
        for (long i = 0; i < r.nvars; ++i) e[i] = ea[i] + eb[i];
        if (total_degree(e) > r.bound) continue;
        for (const auto& [ma, ca] : ta)
          for (const auto& [mb, cb] : tb) {
            LogMono m(r.nvars);
            for (long i = 0; i < r.nvars; ++i) m[i] = ma[i] + mb[i];
            r.add_term(e, m, ca * cb);
          }
      }
    return r;
  }

  // q_a d/dq_a acting on q^e log^m: e_a q^e log^m + m_a q^e log^m / log_a
  LogSeries theta(long axis) const {
    LogSeries r(nvars, bound);
    for (const auto& [e, terms] : t)
      for (const auto& [m, coef] : terms) {
        if (!(e[axis] == 0)) r.add_term(e, m, K(e[axis]) * coef);
        if (m[axis] > 0) {
          LogMono m2 = m;
          m2[axis] -= 1;
          r.add_term(e, m2, K(m[axis]) * coef);
        }
      }
    return r;
  }

  LogSeries truncated(const Rat& new_bound) const {
    LogSeries r(nvars, std::min(bound, new_bound));
    for (const auto& [e, terms] : t) {
      if (total_degree(e) > r.bound) continue;
      for (const auto& [m, coef] : terms) r.add_term(e, m, coef);
    }
    return r;
  }

  // zero through the given order?
  bool vanishes_to_order(const Rat& order) const {
    require(bound >= order, ErrorKind::OrderTooSmall, "series not exact through requested order");
    for (const auto& [e, terms] : t)
      if (total_degree(e) <= order && !terms.empty()) return false;
    return true;
  }

  friend bool operator==(const LogSeries& a, const LogSeries& b) {
    return (a - b).vanishes_to_order(std::min(a.bound, b.bound));
  }
};

// theta with rational coefficient vector: sum_a coef[a] * theta_a
template <class K>
LogSeries<K> theta_combo(const LogSeries<K>& s, const RatVec& coef) {
  LogSeries<K> r(s.nvars, s.bound);
  for (long a = 0; a < s.nvars; ++a) {
    if (coef[a] == 0) continue;
    r = r + (K(coef[a]) * s.theta(a));
  }
  return r;
}

}  // namespace tcy
