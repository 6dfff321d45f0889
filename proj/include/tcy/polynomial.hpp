#pragma once

#include <vector>

#include "tcy/rational.hpp"

namespace tcy {

// Dense univariate polynomial over a field K (needs 0/1 construction from
// int, +,-,*,/, ==).
template <class K>
struct Poly {
  std::vector<K> c;  // c[i] * x^i

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly constant(const K& k) { return Poly(std::vector<K>{k}); }

  void trim() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const K& leading() const { return c.back(); }

  K eval(const K& x) const {
    K acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<K> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * K(static_cast<int>(i));
    return Poly(std::move(r));
  }

  // Euclidean remainder (K a field).
  friend Poly rem(Poly num, const Poly& den) {
    long dd = den.degree();
    while (num.degree() >= dd && !num.is_zero()) {
      K f = num.leading() / den.leading();
      long shift = num.degree() - dd;
      for (long i = 0; i <= dd; ++i)
        num.c[shift + i] = num.c[shift + i] - f * den.c[i];
      num.trim();
    }
    return num;
  }

  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) {
      K inv = K(1) / a.leading();
      for (auto& x : a.c) x = x * inv;
    }
    return a;
  }
};

// Resultant via the Sylvester matrix (fraction Gaussian elimination in K).
template <class K>
K resultant(const Poly<K>& a, const Poly<K>& b) {
  long m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return K(0);
  if (m == 0) return [&] {
    K acc(1);
    for (long i = 0; i < n; ++i) acc = acc * a.c[0];
    return acc;
  }();
  if (n == 0) {
    K acc(1);
    for (long i = 0; i < m; ++i) acc = acc * b.c[0];
    return acc;
  }
  long size = m + n;
  std::vector<std::vector<K>> s(size, std::vector<K>(size, K(0)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) s[i][i + j] = a.c[m - j];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) s[n + i][i + j] = b.c[n - j];
  K det(1);
  for (long k = 0; k < size; ++k) {
    long p = -1;
    for (long i = k; i < size; ++i)
      if (!(s[i][k] == K(0))) {
        p = i;
        break;
      }
    if (p < 0) return K(0);
    if (p != k) {
      std::swap(s[p], s[k]);
      det = K(0) - det;
    }
    det = det * s[k][k];
    K inv = K(1) / s[k][k];
    for (long i = k + 1; i < size; ++i) {
      if (s[i][k] == K(0)) continue;
      K f = s[i][k] * inv;
      for (long j = k; j < size; ++j) s[i][j] = s[i][j] - f * s[k][j];
    }
  }
  return det;
}

}  // namespace tcy
