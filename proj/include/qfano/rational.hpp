#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qfano {

// Arbitrary precision rationals, always kept canonical by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p/q", and surrounding blanks.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qfano
