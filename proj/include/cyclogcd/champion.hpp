#pragma once

// Pigeonhole construction of integers n <= x^2 with many representations
// n = m (p - 1) / N, each of which certifies a prime factor of
// gcd(Phi_M(a^n), Phi_N(b^n)).

#include "cyclogcd/arith.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cyclogcd {

struct ChampionParams {
  u64 a = 2;
  u64 b = 3;
  u64 N = 1;
  // Index applied to a; 0 means M = N.
  u64 M = 0;
  u64 x = 10000;
  double delta = 0.9;
  // Constant in the reference curve exp(c log n / log log n).
  double curve_c = 1.0;

  u64 index_a() const { return M == 0 ? N : M; }
  u64 index_b() const { return N; }
  // lcm(M, N); equals N when M = N.
  u64 modulus() const;
};

// Throws HypothesisViolation / InvalidArgument before any work starts.
void validate(const ChampionParams& params);

struct Kernel {
  BigInt K = 1;
  u64 omega = 0;
  std::vector<u64> primes;
};

// Product of the primes q <= delta * log x with q not dividing N.
Kernel build_K(double x, double delta, u64 N);

struct Pair {
  u64 m = 0;
  u64 p = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
};

// All (m, p) with m, p <= x, gcd(m, L) = 1, K | m (p - 1) / L and p admitted:
// for M = N the qualification predicate, otherwise the congruence filter
// followed by direct order checks of a^n and b^n. Ordered by p, then m.
std::vector<Pair> enumerate_A(const ChampionParams& params, unsigned threads = 1);
std::vector<Pair> enumerate_A(const ChampionParams& params, const Kernel& kernel, unsigned threads = 1);

struct Certificate {
  u64 p = 0;
  u64 m = 0;
  bool divides_a = false;
  bool divides_b = false;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ChampionReport {
  BigInt n;
  std::vector<Pair> representations;  // ascending p
  std::vector<u64> distinct_primes;   // ascending
  double log_gcd_lower_bound = 0.0;
  BigInt pigeonhole_floor;
  u64 pair_count = 0;
  BigInt K;
  u64 omega = 0;
  std::optional<double> curve_value;
  std::optional<double> curve_ratio;
  std::vector<Certificate> certificates;
  bool verified = false;

  friend bool operator==(const ChampionReport&, const ChampionReport&) = default;
};

// Groups pairs by n = m (p - 1) / L, picks the n with most representations
// (ties: smallest n), and checks the structural invariants. Throws
// InvalidArgument on empty input.
ChampionReport pigeonhole_champion(std::span<const Pair> A, const BigInt& K, u64 L, u64 x);

// Checks every distinct prime against Phi_M(a^n) and Phi_N(b^n) and fills
// the log-gcd bound. A failed check throws VerificationFailure.
ChampionReport verify_champion(ChampionReport report, const ChampionParams& params, unsigned threads = 1);

// Full pipeline for arbitrary (M, N).
ChampionReport champion_generalized(const ChampionParams& params, unsigned threads = 1);
// Full pipeline with M = N.
ChampionReport run_champion(const ChampionParams& params, unsigned threads = 1);

// #{m <= x : gcd(m, N0 K) = K / d} and the lower bound phi(N0 d) [x / (N0 K)].
u64 count_A_prime_d(u64 x, u64 N0, u64 K, u64 d);
u64 A_prime_d_bound(u64 x, u64 N0, u64 K, u64 d);

}  // namespace cyclogcd
