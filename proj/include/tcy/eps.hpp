#pragma once

#include <array>

#include "tcy/rational.hpp"

namespace tcy {

// Truncated Laurent expansion in a formal deformation variable eps with
// exact coefficients.  Value = sum c[i] * eps^(lo+i), exact through
// eps^(lo + len - 1); higher orders unknown.
template <class K>
struct EpsLaurent {
  static constexpr int kWindow = 12;

  int lo = 0;
  std::vector<K> c;  // length <= kWindow

  EpsLaurent() : lo(0), c(kWindow, K(0)) {}
  explicit EpsLaurent(const K& v) : lo(0), c(kWindow, K(0)) { c[0] = v; }
  static EpsLaurent monomial(const K& v, int power) {
    EpsLaurent e;
    e.lo = power;
    e.c.assign(kWindow, K(0));
    e.c[0] = v;
    return e;
  }

  int hi() const { return lo + static_cast<int>(c.size()); }  // exclusive

  bool is_zero() const {
    for (const auto& x : c)
      if (!(x == K(0))) return false;
    return true;
  }

  // lowest exponent with nonzero coefficient, or hi() if none in window
  int valuation() const {
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == K(0))) return lo + static_cast<int>(i);
    return hi();
  }

  K coeff(int power) const {
    if (power < lo) return K(0);
    require(power < hi(), ErrorKind::OrderTooSmall, "eps expansion not exact at requested order");
    return c[power - lo];
  }

  bool has_negative_part() const { return valuation() < 0; }

  // value at eps -> 0; requires no pole in the tracked window
  K eps0() const {
    require(!has_negative_part(), ErrorKind::PoleAtRestriction,
            "negative eps power survives at restriction");
    return coeff(0);
  }

  friend EpsLaurent operator+(const EpsLaurent& a, const EpsLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    EpsLaurent r;
    r.lo = std::min(a.lo, b.lo);
    int end = std::min(a.hi(), b.hi());
    r.c.assign(end - r.lo, K(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      int p = a.lo + static_cast<int>(i);
      if (p < end) r.c[p - r.lo] = r.c[p - r.lo] + a.c[i];
    }
    for (size_t i = 0; i < b.c.size(); ++i) {
      int p = b.lo + static_cast<int>(i);
      if (p < end) r.c[p - r.lo] = r.c[p - r.lo] + b.c[i];
    }
    r.normalize();
    return r;
  }
  friend EpsLaurent operator-(const EpsLaurent& a, const EpsLaurent& b) { return a + (-b); }
  EpsLaurent operator-() const {
    EpsLaurent r = *this;
    for (auto& x : r.c) x = K(0) - x;
    return r;
  }
  friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
    EpsLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    int alen = static_cast<int>(a.c.size()), blen = static_cast<int>(b.c.size());
    r.lo = a.lo + b.lo;
    int len = std::min({alen, blen, kWindow});
    r.c.assign(len, K(0));
    for (int i = 0; i < alen; ++i) {
      if (a.c[i] == K(0)) continue;
      for (int j = 0; j < blen && i + j < len; ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
  }
  EpsLaurent& operator+=(const EpsLaurent& o) { return *this = *this + o; }
  EpsLaurent& operator*=(const EpsLaurent& o) { return *this = *this * o; }

  EpsLaurent inverse() const {
    int v = valuation();
    require(v < hi(), ErrorKind::SingularDirection,
            "inverting an eps expansion with no visible nonzero term");
    int shift = v - lo;
    int len = static_cast<int>(c.size()) - shift;
    // series (c[shift] + c[shift+1] eps + ...)^{-1}
    std::vector<K> inv(len, K(0));
    K lead_inv = K(1) / c[shift];
    inv[0] = lead_inv;
    for (int k = 1; k < len; ++k) {
      K acc(0);
      for (int j = 1; j <= k; ++j) acc = acc + c[shift + j] * inv[k - j];
      inv[k] = K(0) - acc * lead_inv;
    }
    EpsLaurent r;
    r.lo = -v;
    r.c = std::move(inv);
    return r;
  }

  friend EpsLaurent operator/(const EpsLaurent& a, const EpsLaurent& b) { return a * b.inverse(); }

  void normalize() {
    // drop leading zeros, preserving the exact end of the window
    int end = hi();
    size_t lead = 0;
    while (lead < c.size() && c[lead] == K(0)) ++lead;
    if (lead == c.size()) {
      // exactly zero through end-1 (and below lo by construction)
      lo = end - kWindow;
      c.assign(kWindow, K(0));
      return;
    }
    if (lead > 0) {
      c.erase(c.begin(), c.begin() + static_cast<long>(lead));
      lo += static_cast<int>(lead);
    }
  }
};

// Truncated expansion in y = 1/z up to y^2 (orders z^0, z^-1, z^-2).
template <class T>
struct ZSeries {
  std::array<T, 3> c;  // c[k] multiplies z^{-k}

  ZSeries() : c{T(0), T(0), T(0)} {}
  explicit ZSeries(const T& unit) : c{unit, T(0), T(0)} {}
  static ZSeries linear(const T& c0, const T& c1) {
    ZSeries r;
    r.c[0] = c0;
    r.c[1] = c1;
    return r;
  }

  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    ZSeries r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; i + j < 3; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return r;
  }
  friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    ZSeries r;
    for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }
  ZSeries& operator+=(const ZSeries& o) { return *this = *this + o; }

  // multiply by y^k (shift towards deeper z^{-1} orders, truncating)
  ZSeries shifted(int k) const {
    ZSeries r;
    for (int i = 0; i + k < 3; ++i)
      if (i + k >= 0) r.c[i + k] = c[i];
    return r;
  }

  // series inverse assuming c[0] invertible
  ZSeries inverse() const {
    ZSeries r;
    T i0 = T(1) / c[0];
    r.c[0] = i0;
    r.c[1] = T(0) - i0 * c[1] * i0;
    r.c[2] = T(0) - i0 * (c[2] * i0 + c[1] * r.c[1]);
    return r;
  }
};

}  // namespace tcy
