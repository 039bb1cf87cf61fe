#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace sandflower {

using BigInt = mpz_class;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Floor division; the divisor must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigInt gcd_of(std::span<const BigInt> values);
BigInt product_of(std::span<const BigInt> values);

// gcd over all k-element products of distinct entries (k = 0 gives 1).
// Enumerates every k-subset, so cost is binomial(n, k).
BigInt gcd_of_k_products(std::span<const BigInt> values, std::size_t k);

std::string to_string(const BigInt& value);

}  // namespace sandflower
