#include "cyclogcd/residue.hpp"

#include "cyclogcd/errors.hpp"
#include "cyclogcd/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace cyclogcd {

bool is_lth_power_mod(u64 a, u64 l, u64 p) {
  if (p < 2 || l < 2) throw InvalidArgument("is_lth_power_mod: p and l must be prime");
  if ((p - 1) % l != 0)
    throw InvalidArgument("is_lth_power_mod: l = " + std::to_string(l) + " does not divide p - 1 = " +
                          std::to_string(p - 1));
  if (a % p == 0) throw InvalidArgument("is_lth_power_mod: p divides a");
  return powmod(a, (p - 1) / l, p) == 1;
}

bool QualifiedPrime::qualified() const {
  return std::all_of(flags.begin(), flags.end(), [](const PrimeFlags& f) {
    return f.not_one_mod_Nl && std::all_of(f.non_residue.begin(), f.non_residue.end(), [](bool b) { return b; });
  });
}

namespace {

QualifiedPrime qualify(u64 p, u64 N, std::vector<u64> bases) {
  if (N == 0) throw InvalidArgument("N must be positive");
  if (!is_prime(p)) throw InvalidArgument("qualifies_prime: " + std::to_string(p) + " is not prime");
  for (u64 base : bases)
    if (base % p == 0)
      throw InvalidArgument("qualifies_prime: p = " + std::to_string(p) + " divides a*b");
  if ((p - 1) % N != 0)
    throw InvalidArgument("qualifies_prime: p = " + std::to_string(p) + " is not 1 mod N = " + std::to_string(N));
  QualifiedPrime qp{p, N, std::move(bases), {}};
  for (u64 l : factorize(N).primes()) {
    PrimeFlags f;
    f.l = l;
    f.not_one_mod_Nl = (p - 1) % (N * l) != 0;
    for (u64 base : qp.bases) f.non_residue.push_back(!is_lth_power_mod(base, l, p));
    qp.flags.push_back(std::move(f));
  }
  return qp;
}

}  // namespace

QualifiedPrime qualifies_prime(u64 p, u64 N, u64 a, u64 b) { return qualify(p, N, {a, b}); }
QualifiedPrime qualifies_prime(u64 p, u64 N, u64 a) { return qualify(p, N, {a}); }

bool lemma_divides(const QualifiedPrime& qp, const BigInt& n, const CyclotomicPoly& phi) {
  if (phi.index != qp.N) throw InvalidArgument("lemma_divides: cyclotomic index does not match N");
  if (!qp.qualified()) throw InvalidArgument("lemma_divides: p = " + std::to_string(qp.p) + " is not qualified");
  if (n <= 0) throw InvalidArgument("lemma_divides: n must be positive");
  BigInt g;
  const BigInt Nb = big(qp.N);
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), Nb.get_mpz_t());
  if (g != 1) throw InvalidArgument("lemma_divides: n = " + n.get_str() + " is not coprime to N");
  if (!mpz_divisible_ui_p(n.get_mpz_t(), (qp.p - 1) / qp.N))
    throw InvalidArgument("lemma_divides: (p - 1)/N does not divide n = " + n.get_str());
  for (u64 base : qp.bases) {
    const u64 r = eval_mod_prime(phi, base, n, qp.p);
    if (r != 0)
      throw VerificationFailure("divisibility lemma failed: Phi_" + std::to_string(qp.N) + "(" + std::to_string(base) +
                                "^" + n.get_str() + ") = " + std::to_string(r) + " mod " + std::to_string(qp.p));
  }
  return true;
}

bool lemma_divides(const QualifiedPrime& qp, const BigInt& n) {
  return lemma_divides(qp, n, build_cyclotomic(qp.N));
}

bool order_exact(u64 a, const BigInt& n, u64 p, u64 target) {
  if (target == 0 || (p - 1) % target != 0)
    throw InvalidArgument("order_exact: target " + std::to_string(target) + " does not divide p - 1");
  if (a % p == 0) throw InvalidArgument("order_exact: p divides a");
  const u64 t = powmod(a, n, p);
  if (powmod(t, target, p) != 1) return false;
  for (u64 l : factorize(target).primes())
    if (powmod(t, target / l, p) == 1) return false;
  return true;
}

void validate_integer_pair(u64 a, u64 b, u64 L, Coprimality coprimality) {
  if (a == 0 || b == 0) throw HypothesisViolation("a and b must be positive integers");
  if (L == 0) throw InvalidArgument("cyclotomic index must be positive");
  for (auto [name, v] : {std::pair{"a", a}, std::pair{"b", b}}) {
    if (coprimality == Coprimality::Required && std::gcd(v, L) != 1)
      throw HypothesisViolation(std::string("hypothesis violated: ") + name + " = " + std::to_string(v) +
                                " is not relatively prime to " + std::to_string(L));
  }
  const auto primes = factorize(L).primes();
  for (auto [name, v] : {std::pair{"a", a}, std::pair{"b", b}}) {
    const FactoredInt f = factorize(v);
    for (u64 l : primes) {
      if (f.is_perfect_power(static_cast<unsigned>(l)))
        throw HypothesisViolation(std::string("hypothesis violated: ") + name + " = " + std::to_string(v) +
                                  " is an l-th power in Q for l = " + std::to_string(l) +
                                  " (a and b must not be l-th powers in Q for any prime l dividing " +
                                  std::to_string(L) + ")");
    }
  }
}

LemmaSweep verify_lemma_range(u64 N, u64 a, u64 b, u64 p_max, u64 m_max, unsigned threads) {
  validate_integer_pair(a, b, N);
  const CyclotomicPoly phi = build_cyclotomic(N);
  const auto primes = sieve_primes_parallel(p_max, threads);
  auto parts = map_blocks(primes.size(), 512, threads, [&](std::size_t lo, std::size_t hi) {
    LemmaSweep s;
    for (std::size_t i = lo; i < hi; ++i) {
      const u64 p = primes[i];
      if ((p - 1) % N != 0 || a % p == 0 || b % p == 0) continue;
      ++s.primes_scanned;
      const QualifiedPrime qp = qualifies_prime(p, N, a, b);
      if (!qp.qualified()) continue;
      ++s.qualified_primes;
      const u64 base = (p - 1) / N;
      for (u64 m = 1; m <= m_max; ++m) {
        const u64 n = m * base;
        if (std::gcd(n, N) != 1) {
          if (std::gcd(m, N) == 1)
            throw VerificationFailure("n = m (p - 1)/N with gcd(m, N) = 1 is not coprime to N at p = " +
                                      std::to_string(p));
          continue;
        }
        lemma_divides(qp, big(n), phi);
        ++s.cases;
      }
    }
    return s;
  });
  LemmaSweep total;
  for (const auto& s : parts) {
    total.primes_scanned += s.primes_scanned;
    total.qualified_primes += s.qualified_primes;
    total.cases += s.cases;
  }
  return total;
}

}  // namespace cyclogcd
