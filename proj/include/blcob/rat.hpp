#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blcob {

// Exact arbitrary-precision arithmetic. Int/Rat are GMP-backed; every Rat is
// kept canonical (lowest terms, positive denominator) by mpq_class itself.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// round-trips with parse_rat; integers print without "/1"
std::string rat_str(const Rat& x);
std::string int_str(const Int& x);

// accepts "p", "-p", "p/q" with optional sign; rejects everything else
Rat parse_rat(const std::string& s);

inline Int abs_int(const Int& x) { return abs(x); }

// floor of the exact square root; x must be >= 0
Int isqrt(const Int& x);

bool is_perfect_square(const Int& x);

// true iff x is a square of a rational
bool is_rational_square(const Rat& x);

// exact square root of a rational square; throws if not a square
Rat rational_sqrt(const Rat& x);

}  // namespace blcob
