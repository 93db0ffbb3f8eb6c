#ifndef CLUSPAT_BIGINT_HPP
#define CLUSPAT_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cluspat/errors.hpp"

namespace cluspat {

// All matrix entries and polynomial coefficients are exact integers; there is
// no floating point anywhere in the library.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline int sign_of(const BigInt& v) { return sgn(v); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Exact quotient; throws NotDivisible when b does not divide a.
inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DivisionByZero("exact_quotient: division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw NotDivisible("exact_quotient: remainder is nonzero");
  return q;
}

inline BigInt positive_part(const BigInt& v) { return v > 0 ? v : BigInt(0); }

// Narrowing helpers used where exponents must fit machine integers.
inline std::int32_t to_int32(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) throw InvalidArgument(std::string(what) + ": value exceeds machine range");
  long l = v.get_si();
  if (l < INT32_MIN || l > INT32_MAX)
    throw InvalidArgument(std::string(what) + ": value exceeds 32-bit range");
  return static_cast<std::int32_t>(l);
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace cluspat

#endif
