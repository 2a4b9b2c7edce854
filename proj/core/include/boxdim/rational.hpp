#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace boxdim {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced, positive denominator) as long as arithmetic starts from
// canonical operands; every entry point below canonicalizes.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p" or "p/q" with q > 0 after reduction. "1/0" and garbage are
// rejected with a diagnostic.
inline Rational parse_rational(const std::string& text) {
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  }
  Rational q(raw);
  mpq_clear(raw);
  q.canonicalize();
  return q;
}

// Canonical serialization: "p/q" with q > 0, or just "p" when q = 1.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// floor(x) for a rational x.
inline BigInt rational_floor(const Rational& x) {
  return floor_div(BigInt(x.get_num()), BigInt(x.get_den()));
}

// ceil(x) for a rational x.
inline BigInt rational_ceil(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// floor(a / b) over rationals.
inline BigInt rational_floor_quotient(const Rational& a, const Rational& b) {
  Rational r = a / b;
  return rational_floor(r);
}

inline Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

// Largest power of two (possibly negative exponent) that is <= x; x must be
// positive.
inline Rational largest_pow2_at_most(const Rational& x) {
  if (sgn(x) <= 0) throw std::invalid_argument("largest_pow2_at_most: x <= 0");
  long nbits = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
  long dbits = static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
  long e = nbits - dbits + 1;  // estimate, then fix up exactly
  Rational p = pow2(e);
  while (p > x) {
    --e;
    p = pow2(e);
  }
  while (pow2(e + 1) <= x) {
    ++e;
    p = pow2(e + 1);
  }
  return pow2(e);
}

}  // namespace boxdim
