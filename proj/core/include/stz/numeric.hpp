#pragma once

#include <gmpxx.h>

#include <string>

namespace stz {

// Exact arithmetic everywhere except the sostar module: arbitrary precision
// integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

std::string to_string(const Int& v);
// "35/18", or "3" when the denominator is one.
std::string to_string(const Rat& v);
// Decimal rendering with the given number of fractional digits, e.g. "1.944444".
std::string to_decimal(const Rat& v, int digits = 6);

}  // namespace stz
