#pragma once

#include <gmpxx.h>

#include <string>

namespace alexandria {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "3", "-3", "3/2"
inline std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace alexandria
