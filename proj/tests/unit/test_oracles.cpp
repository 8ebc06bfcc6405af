#include "doctest.h"

#include "cyclogcd/cyclotomic.hpp"
#include "cyclogcd/errors.hpp"
#include "cyclogcd/oracles.hpp"

#include <cmath>

using namespace cyclogcd;

namespace {

BigInt pow_minus_one(u64 a, u64 n) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), a, n);
  return v - 1;
}

BigInt gcd_big(const BigInt& x, const BigInt& y) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

u64 brute_delta(u64 n, bool squarefree) {
  u64 c = 0;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool prime = d + 1 >= 2;
    for (u64 k = 2; k * k <= d + 1 && prime; ++k) prime = (d + 1) % k != 0;
    if (!prime) continue;
    if (squarefree) {
      bool sf = true;
      for (u64 k = 2; k * k <= d && sf; ++k) sf = d % (k * k) != 0;
      if (!sf) continue;
    }
    ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("gcd sequence examples") {
  const auto rows = gcd_seq_exact(2, 3, 1, 1, 4);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].gcd_value == 1);
  CHECK(rows[1].gcd_value == 1);
  CHECK(rows[2].gcd_value == 1);
  CHECK(rows[3].gcd_value == 5);
  CHECK(rows[3].log_gcd == doctest::Approx(std::log(5.0)));
  CHECK(rows[3].distinct_prime_count == 1u);
  CHECK(gcd_exact(3, 5, 2, 2, 3) == 14);
  CHECK(gcd_seq_exact(3, 5, 2, 2, 3).back().distinct_prime_count == 2u);
}

TEST_CASE("(1, 1) reproduces gcd(a^n - 1, b^n - 1)") {
  const auto rows = gcd_seq_exact(2, 3, 1, 1, 150, 3);
  for (const auto& r : rows) REQUIRE(r.gcd_value == gcd_big(pow_minus_one(2, r.n), pow_minus_one(3, r.n)));
  const auto serial = gcd_seq_exact(2, 3, 1, 1, 150, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) REQUIRE(serial[i].gcd_value == rows[i].gcd_value);
}

TEST_CASE("(N, N) sequence divides the (1, 1) sequence at N n") {
  for (u64 N : {2ull, 3ull, 4ull, 6ull}) {
    const auto rows = gcd_seq_exact(2, 3, N, N, 200 / N);
    for (const auto& r : rows) {
      const BigInt whole = gcd_exact(2, 3, 1, 1, N * r.n);
      REQUIRE(mpz_divisible_p(whole.get_mpz_t(), r.gcd_value.get_mpz_t()));
    }
  }
}

TEST_CASE("gcd sequence size cap") {
  CHECK_THROWS_AS(gcd_seq_exact(10, 10, 1, 1, 10'000'000), InvalidArgument);
  CHECK_THROWS_AS(gcd_seq_exact(1, 3, 1, 1, 10), InvalidArgument);
}

TEST_CASE("delta counters") {
  CHECK(delta_count(1) == 1);
  CHECK(delta_count(12) == 5);
  CHECK(delta_count(7) == 1);
  CHECK(delta_squarefree_count(12) == 3);
  CHECK(delta_squarefree_count(1) == 1);
  for (u64 n = 1; n <= 3000; ++n) {
    REQUIRE(delta_count_divisors(n) == brute_delta(n, false));
    REQUIRE(delta_count_primes(n) == brute_delta(n, false));
    REQUIRE(delta_squarefree_count(n) == brute_delta(n, true));
    REQUIRE(delta_squarefree_count(n) <= delta_count(n));
  }
  CHECK_THROWS_AS(delta_count(0), InvalidArgument);
}

TEST_CASE("delta table matches per-n counts") {
  const auto table = delta_table(5000, 1);
  REQUIRE(table.size() == 5000);
  for (const auto& row : table) {
    REQUIRE(row.delta == delta_count_divisors(row.n));
    REQUIRE(row.delta_squarefree == delta_squarefree_count(row.n));
  }
  const auto t3 = delta_table(5000, 3);
  for (std::size_t i = 0; i < table.size(); ++i) REQUIRE(t3[i].delta == table[i].delta);
}

TEST_CASE("upper-bound monitor") {
  const MonitorResult one = upper_bound_monitor(2, 3, 1, 1);
  CHECK(one.max_ratio == 0.0);
  const MonitorResult four = upper_bound_monitor(2, 3, 4, 4);
  CHECK(four.max_ratio == doctest::Approx(std::log(5.0) / 4));
  CHECK(four.argmax == 4);
  const MonitorResult tail = upper_bound_monitor(2, 3, 100, 600);
  const MonitorResult full = upper_bound_monitor(2, 3, 1, 600);
  CHECK(tail.max_ratio <= full.max_ratio);
  CHECK(upper_bound_monitor(2, 3, 100, 600, 4).max_ratio == tail.max_ratio);
  CHECK_THROWS_AS(upper_bound_monitor(2, 8, 1, 10), HypothesisViolation);
  CHECK_THROWS_AS(upper_bound_monitor(6, 36, 1, 10), HypothesisViolation);
}

TEST_CASE("multiplicative independence") {
  CHECK(multiplicatively_independent(2, 3));
  CHECK(multiplicatively_independent(6, 10));
  CHECK_FALSE(multiplicatively_independent(4, 8));
  CHECK_FALSE(multiplicatively_independent(12, 144));
  CHECK_FALSE(multiplicatively_independent(1, 5));
}
