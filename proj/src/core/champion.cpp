#include "cyclogcd/champion.hpp"

#include "cyclogcd/cyclotomic.hpp"
#include "cyclogcd/errors.hpp"
#include "cyclogcd/parallel.hpp"
#include "cyclogcd/residue.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cyclogcd {

namespace {

constexpr u64 kMaxX = 10'000'000;
constexpr double kMaxPairs = 6e7;

enum class Admission { Qualified, DirectOrder };

std::vector<Pair> enumerate_pairs(const ChampionParams& params, const Kernel& kernel, Admission mode,
                                  unsigned threads) {
  const u64 x = params.x;
  const u64 L = params.modulus();
  const u64 Ma = params.index_a(), Nb = params.index_b();
  const u64 K = to_u64(kernel.K);
  const auto primes = sieve_primes_parallel(x, threads);
  const auto primes_of_L = factorize(L).primes();

  auto blocks = map_blocks(primes.size(), 256, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<Pair> out;
    for (std::size_t i = lo; i < hi; ++i) {
      const u64 p = primes[i];
      if ((p - 1) % L != 0) continue;
      if (params.a % p == 0 || params.b % p == 0) continue;
      if (mode == Admission::Qualified) {
        if (!qualifies_prime(p, L, params.a, params.b).qualified()) continue;
      } else {
        bool ok = true;
        for (u64 l : primes_of_L) ok = ok && (p - 1) % (L * l) != 0;
        if (!ok) continue;
      }
      const u64 s = (p - 1) / L;
      const u64 step = K / std::gcd(K, s);
      for (u64 m = step; m <= x; m += step) {
        if (std::gcd(m, L) != 1) continue;
        if (mode == Admission::DirectOrder) {
          const BigInt n = big(m * s);
          if (!order_exact(params.a, n, p, Ma) || !order_exact(params.b, n, p, Nb)) continue;
        }
        out.push_back(Pair{m, p});
      }
    }
    return out;
  });
  std::vector<Pair> A;
  for (auto& blk : blocks) A.insert(A.end(), blk.begin(), blk.end());
  return A;
}

}  // namespace

u64 ChampionParams::modulus() const {
  const u64 Ma = index_a();
  return Ma / std::gcd(Ma, N) * N;
}

void validate(const ChampionParams& params) {
  if (params.N == 0) throw InvalidArgument("N must be positive");
  if (!(params.delta > 0.0 && params.delta < 1.0))
    throw InvalidArgument("delta must lie strictly between 0 and 1");
  if (params.x < 2) throw InvalidArgument("x must be >= 2");
  if (params.x > kMaxX) throw InvalidArgument("x = " + std::to_string(params.x) + " exceeds the cap " +
                                              std::to_string(kMaxX));
  const u64 M = params.index_a(), N = params.index_b();
  if (M != N) {
    const u64 D = std::gcd(M, N);
    if (std::gcd(M / D, D) != 1 || std::gcd(N / D, D) != 1)
      throw HypothesisViolation("hypothesis violated: with D = gcd(M, N) = " + std::to_string(D) +
                                ", both gcd(M/D, D) and gcd(N/D, D) must equal 1");
  }
  validate_integer_pair(params.a, params.b, params.modulus(), Coprimality::Waived);
}

Kernel build_K(double x, double delta, u64 N) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie strictly between 0 and 1");
  if (!(x > 1.0)) throw InvalidArgument("x must exceed 1");
  if (N == 0) throw InvalidArgument("N must be positive");
  Kernel k;
  const double bound = delta * std::log(x);
  if (bound < 2.0) return k;
  for (u64 q : sieve_primes(static_cast<u64>(std::floor(bound)))) {
    if (N % q == 0) continue;
    k.K *= big(q);
    k.primes.push_back(q);
  }
  k.omega = k.primes.size();
  return k;
}

std::vector<Pair> enumerate_A(const ChampionParams& params, const Kernel& kernel, unsigned threads) {
  validate(params);
  const double est = static_cast<double>(params.x) * static_cast<double>(params.x) /
                     (std::log(static_cast<double>(params.x) + 2.0) * kernel.K.get_d() *
                      static_cast<double>(params.modulus()));
  if (est > kMaxPairs)
    throw InvalidArgument("pair set estimated at " + std::to_string(static_cast<long long>(est)) +
                          " entries; lower x or raise delta");
  const Admission mode = params.index_a() == params.index_b() ? Admission::Qualified : Admission::DirectOrder;
  return enumerate_pairs(params, kernel, mode, threads);
}

std::vector<Pair> enumerate_A(const ChampionParams& params, unsigned threads) {
  return enumerate_A(params, build_K(static_cast<double>(params.x), params.delta, params.modulus()), threads);
}

ChampionReport pigeonhole_champion(std::span<const Pair> A, const BigInt& Kbig, u64 L, u64 x) {
  if (A.empty()) throw InvalidArgument("pigeonhole_champion: pair set is empty");
  if (L == 0) throw InvalidArgument("pigeonhole_champion: modulus must be positive");
  const u64 K = to_u64(Kbig);
  const unsigned __int128 x2 = static_cast<unsigned __int128>(x) * x;

  std::vector<std::pair<u64, std::size_t>> keyed;
  keyed.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    const Pair& pr = A[i];
    if ((pr.p - 1) % L != 0) throw VerificationFailure("pair with p not 1 mod L");
    const u64 n = pr.m * ((pr.p - 1) / L);
    if (n % K != 0 || static_cast<unsigned __int128>(n) > x2 || std::gcd(n, L) != 1)
      throw VerificationFailure("pair (m=" + std::to_string(pr.m) + ", p=" + std::to_string(pr.p) +
                                ") gives n violating K | n, n <= x^2 or gcd(n, L) = 1");
    keyed.emplace_back(n, i);
  }
  std::sort(keyed.begin(), keyed.end());

  u64 best_n = 0;
  std::size_t best_begin = 0, best_len = 0;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    if (j - i > best_len) {
      best_len = j - i;
      best_begin = i;
      best_n = keyed[i].first;
    }
    i = j;
  }

  ChampionReport r;
  r.n = big(best_n);
  r.K = Kbig;
  r.pair_count = A.size();
  for (std::size_t i = best_begin; i < best_begin + best_len; ++i) r.representations.push_back(A[keyed[i].second]);
  std::sort(r.representations.begin(), r.representations.end(),
            [](const Pair& u, const Pair& v) { return u.p < v.p; });
  for (const auto& pr : r.representations) {
    if (!r.distinct_primes.empty() && r.distinct_primes.back() == pr.p)
      throw VerificationFailure("champion has two representations with the same prime");
    r.distinct_primes.push_back(pr.p);
  }
  const u64 slots = static_cast<u64>(x2 / K);
  if (slots == 0) throw InvalidArgument("pigeonhole_champion: K exceeds x^2");
  r.pigeonhole_floor = big((A.size() + slots - 1) / slots);
  if (big(r.distinct_primes.size()) < r.pigeonhole_floor)
    throw VerificationFailure("champion multiplicity below the pigeonhole floor");
  return r;
}

ChampionReport verify_champion(ChampionReport report, const ChampionParams& params, unsigned threads) {
  const CyclotomicPoly phi_a = build_cyclotomic(params.index_a());
  const CyclotomicPoly phi_b = build_cyclotomic(params.index_b());
  const auto& reps = report.representations;
  auto blocks = map_blocks(reps.size(), 64, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<Certificate> out;
    for (std::size_t i = lo; i < hi; ++i) {
      const u64 p = reps[i].p;
      Certificate c{p, reps[i].m, eval_mod_prime(phi_a, params.a, report.n, p) == 0,
                    eval_mod_prime(phi_b, params.b, report.n, p) == 0};
      out.push_back(c);
    }
    return out;
  });
  report.certificates.clear();
  for (auto& blk : blocks) report.certificates.insert(report.certificates.end(), blk.begin(), blk.end());
  double bound = 0.0;
  for (const auto& c : report.certificates) {
    if (!c.divides_a || !c.divides_b)
      throw VerificationFailure("certificate failed: p = " + std::to_string(c.p) + " does not divide both " +
                                "cyclotomic values at n = " + report.n.get_str());
    bound += std::log(static_cast<double>(c.p));
  }
  report.log_gcd_lower_bound = bound;
  report.verified = true;

  const double logn = log_big(report.n);
  if (logn > 1.0) {
    const double loglogn = std::log(logn);
    if (loglogn > 0.0) {
      report.curve_value = std::exp(params.curve_c * logn / loglogn);
      if (bound > 0.0 && std::log(bound) > 0.0) report.curve_ratio = std::log(bound) / (logn / loglogn);
    }
  }
  return report;
}

ChampionReport champion_generalized(const ChampionParams& params, unsigned threads) {
  validate(params);
  const Kernel kernel = build_K(static_cast<double>(params.x), params.delta, params.modulus());
  const auto A = enumerate_pairs(params, kernel, Admission::DirectOrder, threads);
  ChampionReport r = pigeonhole_champion(A, kernel.K, params.modulus(), params.x);
  r.omega = kernel.omega;
  return verify_champion(std::move(r), params, threads);
}

ChampionReport run_champion(const ChampionParams& params, unsigned threads) {
  if (params.index_a() != params.index_b()) return champion_generalized(params, threads);
  const Kernel kernel = build_K(static_cast<double>(params.x), params.delta, params.modulus());
  const auto A = enumerate_A(params, kernel, threads);
  ChampionReport r = pigeonhole_champion(A, kernel.K, params.modulus(), params.x);
  r.omega = kernel.omega;
  return verify_champion(std::move(r), params, threads);
}

u64 count_A_prime_d(u64 x, u64 N0, u64 K, u64 d) {
  if (d == 0 || K % d != 0) throw InvalidArgument("d must divide K");
  const u64 target = K / d;
  const u64 modulus = N0 * K;
  u64 count = 0;
  for (u64 m = 1; m <= x; ++m)
    if (std::gcd(m, modulus) == target) ++count;
  return count;
}

u64 A_prime_d_bound(u64 x, u64 N0, u64 K, u64 d) {
  if (d == 0 || K % d != 0) throw InvalidArgument("d must divide K");
  return euler_phi(N0 * d) * (x / (N0 * K));
}

}  // namespace cyclogcd
