#include "cyclogcd/density.hpp"

#include "cyclogcd/errors.hpp"
#include "cyclogcd/parallel.hpp"
#include "cyclogcd/residue.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace cyclogcd {

unsigned dependence_exponent(const FactoredInt& a, const FactoredInt& b, u64 l) {
  if (!is_prime(l)) throw InvalidArgument("dependence_exponent: l must be prime");
  if (a.is_perfect_power(static_cast<unsigned>(l)) || b.is_perfect_power(static_cast<unsigned>(l)))
    throw HypothesisViolation("dependence_exponent: an input is an l-th power in Q for l = " + std::to_string(l));
  std::set<BigInt> support;
  for (const auto& [p, e] : a.factors()) support.insert(p);
  for (const auto& [p, e] : b.factors()) support.insert(p);
  std::vector<u64> u, v;
  for (const auto& p : support) {
    u.push_back(a.exponent(p) % l);
    v.push_back(b.exponent(p) % l);
  }
  // Two nonzero vectors are dependent iff every 2x2 minor vanishes mod l.
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const u64 lhs = mulmod(u[i], v[j], l), rhs = mulmod(u[j], v[i], l);
      if (lhs != rhs) return 3;
    }
  return 2;
}

DensityPrediction predicted_density(u64 N, u64 d, u64 a, u64 b) {
  if (N == 0 || d == 0) throw InvalidArgument("N and d must be positive");
  if (std::gcd(N, d) != 1) throw InvalidArgument("d = " + std::to_string(d) + " must be coprime to N");
  if (!factorize(d).is_squarefree()) throw InvalidArgument("d = " + std::to_string(d) + " must be squarefree");
  validate_integer_pair(a, b, N, Coprimality::Waived);
  const FactoredInt fa = factorize(a), fb = factorize(b);
  DensityPrediction out;
  out.N = N;
  out.d = d;
  BigInt num = 1, den = big(euler_phi(N * d));
  for (u64 l : factorize(N).primes()) {
    const unsigned e = dependence_exponent(fa, fb, l);
    out.exponents.emplace_back(l, e);
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), l - 1, e);
    num *= t;
    mpz_ui_pow_ui(t.get_mpz_t(), l, e);
    den *= t;
  }
  out.ratio = Rational(num, den);
  out.ratio.canonicalize();
  if (out.ratio <= 0 || out.ratio > 1) throw VerificationFailure("density ratio outside (0, 1]");
  return out;
}

double density_tolerance(u64 count) {
  if (count == 0) return 1.0;
  return std::max(0.15, 3.0 / std::sqrt(static_cast<double>(count)));
}

bool density_condition(u64 p, u64 N, u64 d, u64 a, u64 b, const std::vector<u64>& primes_of_N) {
  if ((p - 1) % (N * d) != 0) return false;
  if (a % p == 0 || b % p == 0) return false;
  for (u64 l : primes_of_N) {
    if ((p - 1) % (N * l) == 0) return false;
    if (is_lth_power_mod(a, l, p) || is_lth_power_mod(b, l, p)) return false;
  }
  return true;
}

EmpiricalDensity empirical_density(u64 x, const DensityPrediction& prediction, u64 a, u64 b, unsigned threads) {
  if (x < 100) throw InvalidArgument("empirical_density: x must be >= 100");
  const u64 N = prediction.N, d = prediction.d;
  const auto primes = sieve_primes_parallel(x, threads);
  const auto primes_of_N = factorize(N).primes();
  auto counts = map_blocks(primes.size(), 1 << 14, threads, [&](std::size_t lo, std::size_t hi) {
    u64 c = 0;
    for (std::size_t i = lo; i < hi; ++i) c += density_condition(primes[i], N, d, a, b, primes_of_N) ? 1 : 0;
    return c;
  });
  EmpiricalDensity out;
  out.count = std::accumulate(counts.begin(), counts.end(), u64{0});
  out.expected = prediction.ratio.get_d() * li(static_cast<double>(x));
  out.relative_error = std::fabs(static_cast<double>(out.count) / out.expected - 1.0);
  out.tolerance = density_tolerance(out.count);
  out.within_tolerance = out.relative_error < out.tolerance;
  return out;
}

EmpiricalDensity empirical_density(u64 x, u64 N, u64 d, u64 a, u64 b, unsigned threads) {
  return empirical_density(x, predicted_density(N, d, a, b), a, b, threads);
}

u64 group_complement_count(u64 l, unsigned factors) {
  if (!is_prime(l)) throw InvalidArgument("group_complement_count: l must be prime");
  if (factors < 1 || factors > 6) throw InvalidArgument("group_complement_count: factors out of range");
  using Tuple = std::vector<u64>;
  auto add = [l](const Tuple& x, const Tuple& y) {
    Tuple z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % l;
    return z;
  };
  Tuple zero(factors, 0);
  // Union of the subgroups generated by every set of factors-1 axes.
  std::set<Tuple> covered;
  for (unsigned omit = 0; omit < factors; ++omit) {
    std::vector<Tuple> gens;
    for (unsigned i = 0; i < factors; ++i) {
      if (i == omit) continue;
      Tuple g(factors, 0);
      g[i] = 1;
      gens.push_back(g);
    }
    std::set<Tuple> sub{zero};
    std::vector<Tuple> frontier{zero};
    while (!frontier.empty()) {
      std::vector<Tuple> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          Tuple y = add(x, g);
          if (sub.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    covered.insert(sub.begin(), sub.end());
  }
  u64 total = 1;
  for (unsigned i = 0; i < factors; ++i) total *= l;
  return total - covered.size();
}

}  // namespace cyclogcd
