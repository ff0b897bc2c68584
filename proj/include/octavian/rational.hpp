#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace octavian {

/// Exact rational scalar. Every value-bearing computation in the workbench is
/// exact; floating point never appears on a value path.
using Rational = mpq_class;

/// Arbitrary-precision integer (group orders, determinants).
using BigInt = mpz_class;

[[nodiscard]] inline bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

/// Nearest integer, ties toward +infinity (used by basis size reduction).
[[nodiscard]] inline BigInt round_nearest(const Rational& q) {
  Rational shifted = q + Rational(1, 2);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  return fl;
}

/// Renders as "a" or "a/b" in lowest terms.
[[nodiscard]] inline std::string to_string(const Rational& q) {
  return q.get_str();
}

/// Exact conversion when the rational is an integer fitting in int64.
[[nodiscard]] inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw std::invalid_argument("rational is not a machine integer: " +
                                q.get_str());
  }
  return q.get_num().get_si();
}

}  // namespace octavian
