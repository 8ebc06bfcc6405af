#include "cyclogcd/oracles.hpp"

#include "cyclogcd/cyclotomic.hpp"
#include "cyclogcd/errors.hpp"
#include "cyclogcd/parallel.hpp"

#include <cmath>
#include <set>

namespace cyclogcd {

namespace {

double operand_bits(u64 a, u64 b, u64 M, u64 N, u64 n) {
  const double base = std::log2(static_cast<double>(std::max(a, b)));
  const double deg = static_cast<double>(std::max(euler_phi(M), euler_phi(N)));
  return static_cast<double>(n) * base * deg;
}

BigInt gcd_with(const CyclotomicPoly& pa, const CyclotomicPoly& pb, u64 a, u64 b, u64 n) {
  BigInt an, bn, g;
  mpz_ui_pow_ui(an.get_mpz_t(), a, n);
  mpz_ui_pow_ui(bn.get_mpz_t(), b, n);
  const BigInt va = eval_int(pa, an), vb = eval_int(pb, bn);
  mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
  return g;
}

}  // namespace

BigInt gcd_exact(u64 a, u64 b, u64 M, u64 N, u64 n) {
  if (a < 2 || b < 2) throw InvalidArgument("gcd oracle requires a, b >= 2");
  if (operand_bits(a, b, M, N, n) > kGcdSeqBitCap)
    throw InvalidArgument("gcd oracle: operands of about " +
                          std::to_string(static_cast<long long>(operand_bits(a, b, M, N, n))) +
                          " bits exceed the cap of " + std::to_string(static_cast<long long>(kGcdSeqBitCap)));
  return gcd_with(build_cyclotomic(M), build_cyclotomic(N), a, b, n);
}

std::vector<GcdSeqRow> gcd_seq_exact(u64 a, u64 b, u64 M, u64 N, u64 n_max, unsigned threads) {
  if (a < 2 || b < 2) throw InvalidArgument("gcd-seq requires a, b >= 2");
  if (M == 0 || N == 0) throw InvalidArgument("cyclotomic indices must be positive");
  const double bits = operand_bits(a, b, M, N, n_max);
  if (bits > kGcdSeqBitCap)
    throw InvalidArgument("gcd-seq: operands reach about " + std::to_string(static_cast<long long>(bits)) +
                          " bits, above the cap of " + std::to_string(static_cast<long long>(kGcdSeqBitCap)));
  const CyclotomicPoly pa = build_cyclotomic(M), pb = build_cyclotomic(N);
  auto blocks = map_blocks(n_max, 16, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<GcdSeqRow> rows;
    for (std::size_t i = lo; i < hi; ++i) {
      GcdSeqRow row;
      row.n = i + 1;
      row.gcd_value = gcd_with(pa, pb, a, b, row.n);
      row.log_gcd = log_big(row.gcd_value);
      if (fits_u64(row.gcd_value)) row.distinct_prime_count = factorize(row.gcd_value).factors().size();
      rows.push_back(std::move(row));
    }
    return rows;
  });
  std::vector<GcdSeqRow> out;
  for (auto& blk : blocks)
    for (auto& r : blk) out.push_back(std::move(r));
  return out;
}

u64 delta_count_divisors(u64 n) {
  u64 c = 0;
  for (u64 d : divisors(n)) c += is_prime(d + 1) ? 1 : 0;
  return c;
}

u64 delta_count_primes(u64 n) {
  if (n == 0) throw InvalidArgument("delta: n must be positive");
  u64 c = 0;
  for (u64 p : sieve_primes(n + 1)) c += (n % (p - 1) == 0) ? 1 : 0;
  return c;
}

u64 delta_count(u64 n) {
  const u64 x = delta_count_divisors(n), y = delta_count_primes(n);
  if (x != y)
    throw VerificationFailure("delta(" + std::to_string(n) + "): divisor route " + std::to_string(x) +
                              " != prime route " + std::to_string(y));
  return x;
}

u64 delta_squarefree_count(u64 n) {
  u64 c = 0;
  for (u64 d : divisors(n))
    if (is_prime(d + 1) && moebius(d) != 0) ++c;
  return c;
}

std::vector<DeltaRow> delta_table(u64 limit, unsigned threads) {
  if (limit == 0) throw InvalidArgument("delta: limit must be positive");
  // Sieve route: each prime p contributes to every multiple of p - 1.
  std::vector<u64> by_sieve(limit + 1, 0);
  for (u64 p : sieve_primes(limit + 1))
    for (u64 n = p - 1; n <= limit; n += p - 1) ++by_sieve[n];

  auto blocks = map_blocks(limit, 1024, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<DeltaRow> rows;
    for (std::size_t i = lo; i < hi; ++i) {
      const u64 n = i + 1;
      DeltaRow r{n, 0, 0};
      for (u64 d : divisors(n)) {
        if (!is_prime(d + 1)) continue;
        ++r.delta;
        if (moebius(d) != 0) ++r.delta_squarefree;
      }
      if (r.delta != by_sieve[n])
        throw VerificationFailure("delta(" + std::to_string(n) + "): divisor route " + std::to_string(r.delta) +
                                  " != sieve route " + std::to_string(by_sieve[n]));
      if (r.delta_squarefree > r.delta) throw VerificationFailure("squarefree delta exceeds delta");
      rows.push_back(r);
    }
    return rows;
  });
  std::vector<DeltaRow> out;
  out.reserve(limit);
  for (auto& blk : blocks) out.insert(out.end(), blk.begin(), blk.end());
  return out;
}

bool multiplicatively_independent(u64 a, u64 b) {
  if (a < 2 || b < 2) return false;
  const FactoredInt fa = factorize(a), fb = factorize(b);
  std::set<BigInt> support;
  for (const auto& [p, e] : fa.factors()) support.insert(p);
  for (const auto& [p, e] : fb.factors()) support.insert(p);
  std::vector<long long> u, v;
  for (const auto& p : support) {
    u.push_back(fa.exponent(p));
    v.push_back(fb.exponent(p));
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return true;
  return false;
}

MonitorResult upper_bound_monitor(u64 a, u64 b, u64 n_min, u64 n_max, unsigned threads) {
  if (n_min == 0 || n_min > n_max) throw InvalidArgument("monitor: need 1 <= n_min <= n_max");
  if (!multiplicatively_independent(a, b))
    throw HypothesisViolation("hypothesis violated: a = " + std::to_string(a) + " and b = " + std::to_string(b) +
                              " are multiplicatively dependent");
  if (operand_bits(a, b, 1, 1, n_max) > kGcdSeqBitCap)
    throw InvalidArgument("monitor: operands exceed the size cap");
  const CyclotomicPoly phi1 = build_cyclotomic(1);
  auto blocks = map_blocks(n_max - n_min + 1, 32, threads, [&](std::size_t lo, std::size_t hi) {
    MonitorResult best{-1.0, 0};
    for (std::size_t i = lo; i < hi; ++i) {
      const u64 n = n_min + i;
      const double ratio = log_big(gcd_with(phi1, phi1, a, b, n)) / static_cast<double>(n);
      if (ratio > best.max_ratio) best = {ratio, n};
    }
    return best;
  });
  MonitorResult best{-1.0, 0};
  for (const auto& r : blocks)
    if (r.max_ratio > best.max_ratio) best = r;
  return best;
}

}  // namespace cyclogcd
