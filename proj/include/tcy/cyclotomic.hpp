#pragma once

#include <complex>
#include <map>
#include <memory>

#include "tcy/rational.hpp"

namespace tcy {

// Dense univariate polynomial over Q, used for cyclotomic moduli.
using QPoly = std::vector<Rat>;

namespace qpoly {

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// exact division, remainder must vanish
inline QPoly divexact(QPoly num, const QPoly& den) {
  QPoly q(num.size(), Rat(0));
  long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
  while (dn >= dd) {
    Rat f = num[dn] / den[dd];
    q[dn - dd] = f;
    for (long i = 0; i <= dd; ++i) num[dn - dd + i] -= f * den[i];
    while (dn >= 0 && num[dn] == 0) --dn;
  }
  for (long i = 0; i <= dn; ++i)
    require(num[i] == 0, ErrorKind::InvalidInput, "inexact polynomial division");
  trim(q);
  return q;
}

inline QPoly rem(QPoly num, const QPoly& den) {
  long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
  while (dn >= dd) {
    Rat f = num[dn] / den[dd];
    for (long i = 0; i <= dd; ++i) num[dn - dd + i] -= f * den[i];
    while (dn >= 0 && num[dn] == 0) --dn;
  }
  num.resize(dn + 1);
  return num;
}

}  // namespace qpoly

// n-th cyclotomic polynomial, computed by the recursive division
// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline QPoly cyclotomic_polynomial(long n) {
  static std::map<long, QPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  QPoly xn1(n + 1, Rat(0));
  xn1[0] = -1;
  xn1[n] = 1;
  QPoly div = {Rat(1)};
  for (long d = 1; d < n; ++d)
    if (n % d == 0) div = qpoly::mul(div, cyclotomic_polynomial(d));
  QPoly phi = qpoly::divexact(xn1, div);
  cache[n] = phi;
  return phi;
}

// The field Q(zeta_n); elements are polynomials in zeta reduced mod Phi_n.
struct CycField {
  long n;        // zeta = exp(2 pi i / n)
  QPoly phi;     // minimal polynomial of zeta
  long deg;      // degree of the extension

  explicit CycField(long order) : n(order), phi(cyclotomic_polynomial(order)) {
    deg = static_cast<long>(phi.size()) - 1;
  }
};

class CycNumber {
 public:
  CycNumber() : field_(nullptr), c_{} {}
  // field-free constants act as plain rationals under mixed arithmetic
  CycNumber(int k) : field_(nullptr) {  // NOLINT: implicit by design
    if (k != 0) c_ = QPoly{Rat(k)};
  }
  explicit CycNumber(const Rat& r) : field_(nullptr) {
    if (r != 0) c_ = QPoly{r};
  }
  CycNumber(const CycField* f, QPoly coeffs) : field_(f), c_(std::move(coeffs)) { reduce(); }

  static CycNumber from_rat(const CycField* f, const Rat& r) {
    return CycNumber(f, QPoly{r});
  }
  static CycNumber zeta_power(const CycField* f, long k) {
    long n = f->n;
    k %= n;
    if (k < 0) k += n;
    QPoly p(static_cast<size_t>(k) + 1, Rat(0));
    p[k] = 1;
    return CycNumber(f, std::move(p));
  }

  const CycField* field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }
  Rat as_rational() const {
    require(is_rational(), ErrorKind::InvalidInput, "cyclotomic number is not rational");
    return rational_part();
  }
  const QPoly& coeffs() const { return c_; }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    const CycField* f = a.field_ ? a.field_ : b.field_;
    QPoly c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return CycNumber(f, std::move(c));
  }
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    const CycField* f = a.field_ ? a.field_ : b.field_;
    QPoly c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return CycNumber(f, std::move(c));
  }
  CycNumber operator-() const {
    QPoly c = c_;
    for (auto& x : c) x = -x;
    return CycNumber(field_, std::move(c));
  }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    const CycField* f = a.field_ ? a.field_ : b.field_;
    return CycNumber(f, qpoly::mul(a.c_, b.c_));
  }
  friend CycNumber operator*(const Rat& r, const CycNumber& a) {
    QPoly c = a.c_;
    for (auto& x : c) x *= r;
    return CycNumber(a.field_, std::move(c));
  }
  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return (a - b).is_zero();
  }

  CycNumber inverse() const {
    require(!is_zero(), ErrorKind::InvalidInput, "division by zero cyclotomic number");
    if (is_rational()) return from_rat(field_, Rat(1) / c_[0]);
    // extended Euclid in Q[x] against the modulus
    QPoly r0 = field_->phi, r1 = c_;
    QPoly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
      // r0 = q r1 + r
      QPoly q(r0.size(), Rat(0));
      QPoly r = r0;
      long dn = static_cast<long>(r.size()) - 1, dd = static_cast<long>(r1.size()) - 1;
      while (dn >= dd) {
        Rat f = r[dn] / r1[dd];
        q[dn - dd] += f;
        for (long i = 0; i <= dd; ++i) r[dn - dd + i] -= f * r1[i];
        while (dn >= 0 && r[dn] == 0) --dn;
      }
      r.resize(dn + 1);
      qpoly::trim(q);
      // s = s0 - q s1
      QPoly qs = qpoly::mul(q, s1);
      QPoly s(std::max(s0.size(), qs.size()), Rat(0));
      for (size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
      for (size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
      qpoly::trim(s);
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 = gcd (a unit in Q since phi is irreducible over Q)
    require(r0.size() == 1, ErrorKind::InvalidInput, "non-invertible cyclotomic element");
    Rat inv = Rat(1) / r0[0];
    for (auto& x : s0) x *= inv;
    return CycNumber(field_, std::move(s0));
  }

  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  std::complex<double> embed() const {
    if (!field_ || c_.empty()) return {0.0, 0.0};
    const double pi = 3.14159265358979323846;
    std::complex<double> z = std::polar(1.0, 2.0 * pi / static_cast<double>(field_->n));
    std::complex<double> acc{0.0, 0.0}, zp{1.0, 0.0};
    for (const auto& coef : c_) {
      acc += coef.get_d() * zp;
      zp *= z;
    }
    return acc;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      std::string term;
      if (i == 0) {
        term = rat_str(c_[i]);
      } else {
        Rat coef = c_[i];
        std::string mono = i == 1 ? "zeta" : "zeta^" + std::to_string(i);
        if (coef == 1)
          term = mono;
        else if (coef == -1)
          term = "-" + mono;
        else
          term = rat_str(coef) + "*" + mono;
      }
      if (out.empty()) {
        out = term;
      } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  const CycField* field_;
  QPoly c_;

  void reduce() {
    if (!field_) {
      qpoly::trim(c_);
      return;
    }
    if (static_cast<long>(c_.size()) > field_->deg) c_ = qpoly::rem(std::move(c_), field_->phi);
    qpoly::trim(c_);
  }
};

}  // namespace tcy
