#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "realnorm/errors.hpp"

namespace realnorm {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline int sign(const BigRat& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

inline BigInt floor_of(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_of(const BigRat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

/// Canonical text: "n" or "n/d" with d > 1.
inline std::string to_string(const BigRat& q) { return q.get_str(); }

/// Accepts "n", "-n", "n/d" with d != 0. The result is canonicalized.
inline BigRat parse_rational(std::string_view text) {
  std::string s(text);
  BigRat q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw Error(ErrorKind::parse, "malformed rational literal '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw Error(ErrorKind::parse, "zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

/// The rational with least denominator in the closed interval [lo, hi].
inline BigRat simplest_rational_between(BigRat lo, BigRat hi) {
  if (lo > hi) std::swap(lo, hi);
  if (sign(lo) <= 0 && sign(hi) >= 0) return BigRat(0);
  if (sign(hi) < 0) return -simplest_rational_between(-hi, -lo);
  BigInt c = ceil_of(lo);
  if (BigRat(c) <= hi) return BigRat(c);
  BigInt f = floor_of(lo);
  BigRat inner = simplest_rational_between(1 / (hi - f), 1 / (lo - f));
  BigRat r = BigRat(f) + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace realnorm
