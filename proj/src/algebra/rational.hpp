#pragma once

#include <string>

#include <gmpxx.h>

namespace tanlift::algebra {

using Integer = mpz_class;
// mpq_class keeps gcd(|num|, den) = 1 and den > 0 after every arithmetic op.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace tanlift::algebra
