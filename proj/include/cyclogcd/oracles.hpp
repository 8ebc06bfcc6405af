#pragma once

// Brute-force ground truth: exact gcd sequences, divisor counters of the
// form p - 1, and the log-gcd growth monitor for a^n - 1, b^n - 1.

#include "cyclogcd/arith.hpp"

#include <optional>
#include <vector>

namespace cyclogcd {

struct GcdSeqRow {
  u64 n = 0;
  BigInt gcd_value;
  double log_gcd = 0.0;
  // Present when the gcd is small enough to factor (<= 64 bits).
  std::optional<u64> distinct_prime_count;
};

// Largest operand size, in bits, gcd_seq_exact agrees to evaluate.
inline constexpr double kGcdSeqBitCap = 1e6;

// gcd(Phi_M(a^n), Phi_N(b^n)) for n = 1..n_max, evaluated exactly.
std::vector<GcdSeqRow> gcd_seq_exact(u64 a, u64 b, u64 M, u64 N, u64 n_max, unsigned threads = 1);

// Exact gcd(Phi_M(a^n), Phi_N(b^n)) for a single n.
BigInt gcd_exact(u64 a, u64 b, u64 M, u64 N, u64 n);

// #{d | n : d + 1 prime}, via divisor enumeration with Miller-Rabin.
u64 delta_count_divisors(u64 n);
// Same count via a sieve of primes p <= n + 1 with (p - 1) | n.
u64 delta_count_primes(u64 n);
// Both routes, cross-checked; disagreement throws VerificationFailure.
u64 delta_count(u64 n);
// #{d | n : d + 1 prime, d squarefree}
u64 delta_squarefree_count(u64 n);

struct DeltaRow {
  u64 n = 0;
  u64 delta = 0;
  u64 delta_squarefree = 0;
};

// delta for every n <= limit: divisor route per n against a sieve that
// credits each prime p to the multiples of p - 1. Cross-checked.
std::vector<DeltaRow> delta_table(u64 limit, unsigned threads = 1);

struct MonitorResult {
  double max_ratio = 0.0;
  u64 argmax = 0;
};

// max over n in [n_min, n_max] of log gcd(a^n - 1, b^n - 1) / n. Throws
// HypothesisViolation when a, b are multiplicatively dependent.
MonitorResult upper_bound_monitor(u64 a, u64 b, u64 n_min, u64 n_max, unsigned threads = 1);

bool multiplicatively_independent(u64 a, u64 b);

}  // namespace cyclogcd
