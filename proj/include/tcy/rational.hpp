#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcy {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorKind {
  InvalidInput,
  NonPrimitive,
  NotOuterBrane,
  MissingLatticePoint,
  NotATriangulation,
  DegenerateFraming,
  BraneNotOnChain,
  NoValidBasis,
  UserBasisInvalid,
  UnboundedDegree,
  NonIntegralPairing,
  OrderTooSmall,
  SingularDirection,
  OpenMapContaminated,
  NonIntegralTailGap,
  PoleAtRestriction,
  Mismatch,
  NewtonPolytopeCollapse,
  RegularityFailure,
  ReductionFailure,
  NonSimpleRoots,
  NoMatchingRoot,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::NotOuterBrane: return "NotOuterBrane";
    case ErrorKind::MissingLatticePoint: return "MissingLatticePoint";
    case ErrorKind::NotATriangulation: return "NotATriangulation";
    case ErrorKind::DegenerateFraming: return "DegenerateFraming";
    case ErrorKind::BraneNotOnChain: return "BraneNotOnChain";
    case ErrorKind::NoValidBasis: return "NoValidBasis";
    case ErrorKind::UserBasisInvalid: return "UserBasisInvalid";
    case ErrorKind::UnboundedDegree: return "UnboundedDegree";
    case ErrorKind::NonIntegralPairing: return "NonIntegralPairing";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::SingularDirection: return "SingularDirection";
    case ErrorKind::OpenMapContaminated: return "OpenMapContaminated";
    case ErrorKind::NonIntegralTailGap: return "NonIntegralTailGap";
    case ErrorKind::PoleAtRestriction: return "PoleAtRestriction";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NewtonPolytopeCollapse: return "NewtonPolytopeCollapse";
    case ErrorKind::RegularityFailure: return "RegularityFailure";
    case ErrorKind::ReductionFailure: return "ReductionFailure";
    case ErrorKind::NonSimpleRoots: return "NonSimpleRoots";
    case ErrorKind::NoMatchingRoot: return "NoMatchingRoot";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// fractional part in [0,1)
inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) fail(ErrorKind::InvalidInput, "integer out of machine range");
  return n.get_si();
}

inline long to_long(const Rat& r) {
  require(is_integer(r), ErrorKind::NonIntegralPairing, "expected an integer value");
  return to_long(Int(r.get_num()));
}

inline Int factorial(long n) {
  require(n >= 0, ErrorKind::InvalidInput, "factorial of negative number");
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Rat acc = 1;
  Rat cur = b;
  while (k) {
    if (k & 1) acc *= cur;
    cur *= cur;
    k >>= 1;
  }
  if (neg) {
    require(acc != 0, ErrorKind::InvalidInput, "zero to negative power");
    acc = Rat(1) / acc;
  }
  return acc;
}

inline Rat parse_rat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail(ErrorKind::InvalidInput, "empty rational literal");
  try {
    Rat r(t);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline int cmp_ratvec(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return cmp_ratvec(a, b) < 0; }
};

// small deterministic generator for property tests and direction redraws
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace tcy
