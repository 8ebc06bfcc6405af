#pragma once

// Power-residue predicates and the prime-divisibility lemma: a prime p = 1
// (mod N) at which neither a nor b is an l-th power for any prime l | N, and
// p != 1 (mod N l), divides Phi_N(a^n) and Phi_N(b^n) whenever n is prime to
// N and divisible by (p - 1) / N.

#include "cyclogcd/arith.hpp"
#include "cyclogcd/cyclotomic.hpp"

#include <vector>

namespace cyclogcd {

// True iff a^((p-1)/l) = 1 (mod p), i.e. a is an l-th power residue.
// Requires l | p - 1 and p not dividing a.
bool is_lth_power_mod(u64 a, u64 l, u64 p);

struct PrimeFlags {
  u64 l = 0;
  bool not_one_mod_Nl = false;
  // One entry per base, same order as QualifiedPrime::bases.
  std::vector<bool> non_residue;
};

struct QualifiedPrime {
  u64 p = 0;
  u64 N = 1;
  std::vector<u64> bases;
  std::vector<PrimeFlags> flags;

  bool qualified() const;
};

QualifiedPrime qualifies_prime(u64 p, u64 N, u64 a, u64 b);
QualifiedPrime qualifies_prime(u64 p, u64 N, u64 a);

// Checks p | Phi_N(base^n) for every base of a qualified prime, by direct
// evaluation. Returns true; a failed check throws VerificationFailure.
// Precondition failures throw InvalidArgument with distinct messages.
bool lemma_divides(const QualifiedPrime& qp, const BigInt& n);
bool lemma_divides(const QualifiedPrime& qp, const BigInt& n, const CyclotomicPoly& phi);

// True iff a^n mod p has multiplicative order exactly `target`.
// Requires target | p - 1.
bool order_exact(u64 a, const BigInt& n, u64 p, u64 target);

enum class Coprimality { Required, Waived };

// Integer-side hypotheses for a pair (a, b) against modulus L: gcd(ab, L) = 1
// and neither a nor b is a perfect l-th power for a prime l | L. Throws
// HypothesisViolation naming the failing condition. With Waived, only the
// power condition is enforced; scans then skip primes dividing ab.
void validate_integer_pair(u64 a, u64 b, u64 L, Coprimality coprimality = Coprimality::Required);

struct LemmaSweep {
  u64 primes_scanned = 0;   // primes p <= p_max with p = 1 (mod N), p not dividing ab
  u64 qualified_primes = 0;
  u64 cases = 0;            // (p, m) pairs checked for both bases
};

// Runs lemma_divides over every qualified p <= p_max and every
// n = m (p - 1) / N with m <= m_max and gcd(n, N) = 1. Any failure throws.
LemmaSweep verify_lemma_range(u64 N, u64 a, u64 b, u64 p_max, u64 m_max, unsigned threads = 1);

}  // namespace cyclogcd
