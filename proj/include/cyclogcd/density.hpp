#pragma once

// Predicted densities of qualifying primes and their empirical validation
// by direct prime scans.

#include "cyclogcd/arith.hpp"

#include <utility>
#include <vector>

namespace cyclogcd {

struct DensityPrediction {
  u64 N = 1;
  u64 d = 1;
  // (l, e_l) for each prime l | N, ascending in l.
  std::vector<std::pair<u64, unsigned>> exponents;
  // prod (l - 1)^e / (phi(N d) prod l^e)
  Rational ratio;
};

// 2 when the exponent vectors of a and b are linearly dependent over F_l,
// 3 otherwise. Throws HypothesisViolation if either input is an l-th power.
unsigned dependence_exponent(const FactoredInt& a, const FactoredInt& b, u64 l);

// Requires d squarefree and coprime to N, plus the pair hypotheses on a, b.
DensityPrediction predicted_density(u64 N, u64 d, u64 a, u64 b);

struct EmpiricalDensity {
  u64 count = 0;
  double expected = 0.0;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool within_tolerance = false;
};

// Allowed relative deviation for a sample of `count` primes.
double density_tolerance(u64 count);

// True when p is counted: p = 1 (mod N d), p not dividing ab, and for every
// prime l | N, p != 1 (mod N l) with neither a nor b an l-th power mod p.
bool density_condition(u64 p, u64 N, u64 d, u64 a, u64 b, const std::vector<u64>& primes_of_N);

// Counts primes p <= x satisfying density_condition and compares with
// ratio * li(x). Requires x >= 100.
EmpiricalDensity empirical_density(u64 x, const DensityPrediction& prediction, u64 a, u64 b, unsigned threads);
EmpiricalDensity empirical_density(u64 x, u64 N, u64 d, u64 a, u64 b, unsigned threads = 1);

// Exhaustively counts elements of (Z/l)^factors outside the union of the
// subgroups generated by all but one coordinate axis.
u64 group_complement_count(u64 l, unsigned factors);

}  // namespace cyclogcd
