#pragma once

// Exact integer primitives: sieving, factorization, multiplicative
// functions, modular arithmetic and the logarithmic integral.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cyclogcd {

using BigInt = mpz_class;
using Rational = mpq_class;
using u64 = std::uint64_t;

std::vector<u64> sieve_primes(u64 limit);

// Primes in [lo, hi]; `base` must contain every prime up to sqrt(hi).
std::vector<u64> sieve_segment(u64 lo, u64 hi, std::span<const u64> base);

// Primes up to `limit`, sieved in independent segments on `threads`
// workers. Output identical to sieve_primes(limit).
std::vector<u64> sieve_primes_parallel(u64 limit, unsigned threads);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);
bool is_probable_prime(const BigInt& n);

// A positive integer with its prime factorization.
class FactoredInt {
 public:
  FactoredInt() = default;
  // Throws InvalidArgument unless the factors multiply to value and every
  // key is prime.
  FactoredInt(BigInt value, std::map<BigInt, unsigned> factors);

  const BigInt& value() const { return value_; }
  const std::map<BigInt, unsigned>& factors() const { return factors_; }

  unsigned exponent(const BigInt& p) const;
  std::vector<u64> primes() const;
  bool is_squarefree() const;
  BigInt radical() const;
  // True when value = c^l for some integer c (value 1 counts).
  bool is_perfect_power(unsigned l) const;

  std::string to_string() const;

 private:
  BigInt value_ = 1;
  std::map<BigInt, unsigned> factors_;
};

// Trial division up to 1e6, then Brent's variant of Pollard rho.
FactoredInt factorize(const BigInt& n);
FactoredInt factorize(u64 n);

int moebius(u64 n);
u64 euler_phi(u64 n);
std::vector<u64> divisors(u64 n);

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}
u64 powmod(u64 base, u64 exponent, u64 modulus);
u64 powmod(u64 base, const BigInt& exponent, u64 modulus);
BigInt powmod(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

// Smallest e >= 1 with a^e = 1 (mod p). Throws if p | a.
u64 mult_order(u64 a, u64 p);

// Integral of dt / log t from 2 to x.
double li(double x);

// Natural log of a positive big integer, valid far beyond double range.
double log_big(const BigInt& v);

bool fits_u64(const BigInt& v);
u64 to_u64(const BigInt& v);
BigInt big(u64 v);

}  // namespace cyclogcd
