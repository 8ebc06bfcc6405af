#include "doctest.h"

#include "cyclogcd/errors.hpp"
#include "cyclogcd/residue.hpp"

#include <numeric>
#include <set>
#include <string>

using namespace cyclogcd;

TEST_CASE("l-th power residues match exhaustive enumeration") {
  for (u64 p : sieve_primes(500)) {
    for (u64 l : factorize(p == 2 ? u64{1} : p - 1).primes()) {
      std::set<u64> powers;
      for (u64 t = 1; t < p; ++t) powers.insert(powmod(t, l, p));
      for (u64 a = 1; a < p; ++a) REQUIRE(is_lth_power_mod(a, l, p) == (powers.count(a) == 1));
    }
  }
}

TEST_CASE("residue examples and errors") {
  CHECK(is_lth_power_mod(2, 2, 7));
  CHECK_FALSE(is_lth_power_mod(3, 2, 7));
  CHECK(is_lth_power_mod(1, 3, 13));
  CHECK_THROWS_AS(is_lth_power_mod(2, 3, 11), InvalidArgument);
  CHECK_THROWS_AS(is_lth_power_mod(14, 2, 7), InvalidArgument);
}

TEST_CASE("prime qualification") {
  CHECK(qualifies_prime(7, 2, 3, 5).qualified());
  CHECK_FALSE(qualifies_prime(5, 2, 3, 7).qualified());
  CHECK_FALSE(qualifies_prime(5, 2, 3, 7).flags[0].not_one_mod_Nl);
  const QualifiedPrime q = qualifies_prime(7, 2, 2, 3);
  CHECK_FALSE(q.qualified());
  CHECK_FALSE(q.flags[0].non_residue[0]);
  CHECK(q.flags[0].non_residue[1]);
  CHECK_THROWS_AS(qualifies_prime(7, 2, 14, 3), InvalidArgument);
  CHECK_THROWS_AS(qualifies_prime(11, 3, 2, 5), InvalidArgument);
  CHECK_THROWS_AS(qualifies_prime(9, 2, 2, 5), InvalidArgument);
  // N = 1: no primes l, every p qualifies.
  CHECK(qualifies_prime(13, 1, 2, 3).qualified());
}

TEST_CASE("lemma examples") {
  CHECK(lemma_divides(qualifies_prime(7, 2, 3), big(3)));
  CHECK(lemma_divides(qualifies_prime(7, 1, 2), big(6)));
  CHECK(lemma_divides(qualifies_prime(13, 3, 2), big(4)));
  CHECK(eval_int(build_cyclotomic(3), 16) == 21 * 13);
}

TEST_CASE("lemma precondition errors are distinct") {
  const QualifiedPrime qp = qualifies_prime(7, 2, 3);
  std::string coprime, divides, unqualified;
  try {
    lemma_divides(qp, big(6));
  } catch (const InvalidArgument& e) {
    coprime = e.what();
  }
  try {
    lemma_divides(qp, big(5));
  } catch (const InvalidArgument& e) {
    divides = e.what();
  }
  try {
    lemma_divides(qualifies_prime(7, 2, 2), big(3));
  } catch (const InvalidArgument& e) {
    unqualified = e.what();
  }
  CHECK(coprime.find("not coprime") != std::string::npos);
  CHECK(divides.find("does not divide") != std::string::npos);
  CHECK(unqualified.find("not qualified") != std::string::npos);
}

TEST_CASE("exact order") {
  CHECK(order_exact(3, big(3), 7, 2));
  CHECK(order_exact(2, big(0), 7, 1));
  CHECK_FALSE(order_exact(2, big(1), 7, 6));
  CHECK(order_exact(2, big(1), 7, 3));
  CHECK_THROWS_AS(order_exact(2, big(1), 7, 4), InvalidArgument);
}

TEST_CASE("p | Phi_N(a^n) iff a^n has order exactly N, for p not dividing N") {
  for (u64 N : {1ull, 2ull, 3ull, 4ull, 6ull, 10ull, 12ull}) {
    const auto phi = build_cyclotomic(N);
    for (u64 p : sieve_primes(400)) {
      if (N % p == 0 || (p - 1) % N != 0) continue;
      for (u64 a : {2ull, 3ull, 5ull, 7ull})
        for (u64 n = 0; n < 30; ++n) {
          if (a % p == 0) continue;
          REQUIRE((eval_mod_prime(phi, a, big(n), p) == 0) == order_exact(a, big(n), p, N));
        }
    }
  }
}

TEST_CASE("integer pair hypotheses") {
  CHECK_NOTHROW(validate_integer_pair(3, 5, 2));
  CHECK_NOTHROW(validate_integer_pair(4, 5, 3));
  CHECK_THROWS_AS(validate_integer_pair(2, 9, 2), HypothesisViolation);
  CHECK_THROWS_AS(validate_integer_pair(8, 5, 3), HypothesisViolation);
  CHECK_NOTHROW(validate_integer_pair(2, 3, 2, Coprimality::Waived));
  CHECK_THROWS_AS(validate_integer_pair(2, 3, 2), HypothesisViolation);
  try {
    validate_integer_pair(4, 3, 2, Coprimality::Waived);
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("l-th power") != std::string::npos);
  }
}

TEST_CASE("lemma sweep is thread-count independent and counts as a brute-force loop does") {
  const LemmaSweep s1 = verify_lemma_range(6, 5, 7, 5000, 20, 1);
  const LemmaSweep s4 = verify_lemma_range(6, 5, 7, 5000, 20, 4);
  CHECK(s1.cases == s4.cases);
  CHECK(s1.qualified_primes == s4.qualified_primes);
  u64 qualified = 0, cases = 0;
  for (u64 p : sieve_primes(5000)) {
    if ((p - 1) % 6 != 0 || p == 5 || p == 7) continue;
    // p != 1 mod 12, p != 1 mod 18, 5 and 7 neither squares nor cubes mod p.
    if ((p - 1) % 12 == 0 || (p - 1) % 18 == 0) continue;
    bool ok = true;
    for (u64 a : {5ull, 7ull})
      for (u64 l : {2ull, 3ull}) ok = ok && powmod(a, (p - 1) / l, p) != 1;
    if (!ok) continue;
    ++qualified;
    for (u64 m = 1; m <= 20; ++m)
      if (std::gcd(m * ((p - 1) / 6), u64{6}) == 1) ++cases;
  }
  CHECK(s1.qualified_primes == qualified);
  CHECK(s1.cases == cases);
  CHECK(cases > 0);
}
