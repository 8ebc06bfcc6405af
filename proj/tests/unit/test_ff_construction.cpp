#include "doctest.h"

#include "cyclogcd/cyclotomic.hpp"
#include "cyclogcd/errors.hpp"
#include "cyclogcd/ff_construction.hpp"

#include <cmath>
#include <numeric>

using namespace cyclogcd;
using namespace cyclogcd::ff;

namespace {

u64 ipow(u64 b, u64 e) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r *= b;
  return r;
}

FFConstruction make(u64 q, u64 k, u64 n0, u64 m, const std::string& a, const std::string& b, u64 v = 0) {
  const auto [p, e] = prime_power(q);
  const FieldPtr F = fq_context(p, e);
  return FFConstruction::create(FFParams{q, k, n0, m, v}, parse_poly(a, F), parse_poly(b, F));
}

// Order of x in (F_Q[T]/pi)^*, by repeated multiplication.
u64 order_mod(const Poly& x, const Poly& pi) {
  Poly acc = x % pi;
  u64 ord = 1;
  while (!acc.is_one()) {
    acc = mulmod(acc, x, pi);
    ++ord;
  }
  return ord;
}

// pi | Phi_m(a^n) iff a^n has order exactly m modulo pi (m prime to q).
bool divides_by_order(const Poly& pi, const Poly& a, u64 m, const BigInt& n) {
  return order_mod(poly_powmod(a, n, pi), pi) == m;
}

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power(4) == std::pair<u64, unsigned>{2, 2});
  CHECK(prime_power(7) == std::pair<u64, unsigned>{7, 1});
  CHECK(prime_power(243) == std::pair<u64, unsigned>{3, 5});
  CHECK_THROWS_AS(prime_power(6), InvalidArgument);
  CHECK_THROWS_AS(prime_power(1), InvalidArgument);
}

TEST_CASE("parameter choice against brute-force search") {
  const ParamChoice c = choose_params(2, 1, 1, 3);
  CHECK(c.r == 1);
  CHECK(c.t == 2);
  CHECK(c.Q == 4);
  for (u64 q : {2ull, 3ull, 4ull, 5ull, 9ull})
    for (u64 k : {1ull, 2ull, 3ull})
      for (u64 m : {1ull, 2ull, 3ull, 5ull, 7ull, 12ull}) {
        if (std::gcd(m, q) != 1) continue;
        const u64 qk = ipow(q, k);
        for (u64 n0 = 1; n0 < std::min<u64>(qk, 10); ++n0) {
          if (std::gcd(n0, q) != 1) continue;
          u64 r = 1;
          while (std::gcd(r, m) != 1 || (r * m * n0) % qk != qk - 1) ++r;
          u64 t = k;
          while (true) {
            unsigned __int128 qt = 1;
            for (u64 i = 0; i < t; ++i) qt = qt * q % (m * r);
            if (qt % (m * r) == 1 % (m * r)) break;
            ++t;
          }
          if (double(t) * std::log2(double(q)) >= 62.0) {
            CHECK_THROWS_AS(choose_params(q, k, n0, m), InvalidArgument);
            continue;
          }
          const ParamChoice got = choose_params(q, k, n0, m);
          REQUIRE(got.r == r);
          REQUIRE(got.t == t);
          REQUIRE(got.Q == ipow(q, t));
        }
      }
  CHECK_THROWS_AS(choose_params(2, 1, 2, 3), InvalidArgument);
  CHECK_THROWS_AS(choose_params(2, 1, 1, 4), HypothesisViolation);
  CHECK_THROWS_AS(choose_params(2, 0, 1, 3), InvalidArgument);
}

TEST_CASE("density readings") {
  CHECK(joint_density(3, 1) == Rational(4, 9));
  CHECK(exponent_reading_density(3, 1) == Rational(2, 3));
  CHECK(joint_density(12, 1) == Rational(1, 9));
  CHECK(exponent_reading_density(12, 1) == Rational(1, 6));
  CHECK(joint_density(1, 3) == Rational(1, 9));
}

TEST_CASE("construction hypotheses") {
  CHECK_NOTHROW(make(2, 1, 1, 3, "0,1", "1,1"));
  CHECK_THROWS_AS(make(3, 1, 1, 2, "0,0,1", "1,1"), HypothesisViolation);  // T^2 is a square
  CHECK_THROWS_AS(make(2, 1, 1, 2, "0,1", "1,1"), HypothesisViolation);    // m even, q = 2
  CHECK_THROWS_AS(make(3, 1, 1, 2, "0,2", "1,1"), HypothesisViolation);    // 2T is not monic
  CHECK_THROWS_AS(make(3, 1, 1, 2, "1", "1,1"), HypothesisViolation);      // constant
  CHECK_THROWS_AS(make(2, 1, 1, 3, "0,1", "1,1", 9), HypothesisViolation);  // gcd(3/3, 3) != 1
  CHECK_THROWS_AS(make(2, 1, 2, 3, "0,1", "1,1"), InvalidArgument);
  // T^3 over F_2 is a cube but not a square.
  CHECK_NOTHROW(make(2, 1, 1, 5, "0,0,0,1", "1,1"));
  CHECK_THROWS_AS(make(2, 1, 1, 3, "0,0,0,1", "1,1"), HypothesisViolation);
}

TEST_CASE("n for each degree") {
  const FFConstruction c = make(2, 1, 1, 3, "0,1", "1,1");
  CHECK(c.n_for(1) == 1);
  CHECK(c.n_for(2) == 5);
  CHECK(c.n_for(3) == 21);
  CHECK(c.n_for(4) == 85);
  const FFConstruction c2 = make(3, 2, 4, 2, "0,1", "1,1");
  for (unsigned N = 1; N <= 3; ++N) {
    const BigInt n = c2.n_for(N);
    CHECK(mpz_fdiv_ui(n.get_mpz_t(), 9) == 4);
  }
}

TEST_CASE("power criterion agrees with the order oracle") {
  const FFConstruction c = make(2, 1, 1, 3, "0,1", "1,1");
  const FieldPtr& F = c.scan_field();
  for (unsigned N = 1; N <= 3; ++N) {
    const BigInt n = c.n_for(N);
    for (u64 idx = 0; idx < ipow(F->size(), N); ++idx) {
      const Poly pi = monic_from_index(F, N, idx);
      if (!irreducible_test(pi)) continue;
      for (const Poly* base : {&c.a_lifted(), &c.b_lifted()}) {
        if ((*base % pi).is_zero()) {
          CHECK_THROWS_AS(pi_criterion(pi, *base, 3, 1), InvalidArgument);
          continue;
        }
        REQUIRE(pi_criterion(pi, *base, 3, 1) == divides_by_order(pi, *base, 3, n));
      }
    }
  }
}

TEST_CASE("scan counts against the order oracle") {
  const FFConstruction c = make(2, 1, 1, 3, "0,1", "1,1");
  const FieldPtr& F = c.scan_field();
  for (unsigned N = 1; N <= 3; ++N) {
    const ScanResult s = ff_scan(c, N, 1);
    std::vector<Poly> expected;
    for (u64 idx = 0; idx < ipow(F->size(), N); ++idx) {
      const Poly pi = monic_from_index(F, N, idx);
      if (!irreducible_test(pi)) continue;
      if ((c.a_lifted() % pi).is_zero() || (c.b_lifted() % pi).is_zero()) continue;
      if (divides_by_order(pi, c.a_lifted(), 3, s.n) && divides_by_order(pi, c.b_lifted(), 3, s.n))
        expected.push_back(pi);
    }
    CHECK(s.qualifying == expected);
    CHECK(ff_scan(c, N, 4).qualifying == expected);
    REQUIRE(s.predicted);
    CHECK(*s.predicted == Rational(4, 9) * Rational(big(ipow(4, N)), big(N)));
  }
  CHECK(ff_scan(c, 1, 1).count() == 2);
  CHECK(ff_scan(c, 4, 2).count() == 26);
}

TEST_CASE("exact gcd degree against an independent quotient route") {
  const FFConstruction c = make(2, 1, 1, 3, "0,1", "1,1");
  for (unsigned N = 1; N <= 4; ++N) {
    const ScanResult s = ff_scan(c, N, 1);
    const DirectVerify dv = ff_direct_verify(c, s);
    const u64 n = to_u64(s.n);
    // Phi_3(x) = (x^3 - 1)/(x - 1)
    const Poly one = Poly::constant(c.base_field(), 1);
    const Poly an = poly_pow(c.a(), n), bn = poly_pow(c.b(), n);
    const Poly fa = (poly_pow(an, 3) - one) / (an - one), fb = (poly_pow(bn, 3) - one) / (bn - one);
    CHECK(dv.deg_gcd == static_cast<u64>(poly_gcd(fa, fb).degree()));
    CHECK(dv.deg_gcd >= N * s.count());
    CHECK(n % 2 == 1);
  }
  CHECK_THROWS_AS(ff_direct_verify(c, ff_scan(c, 4, 1), 50), InvalidArgument);
}

TEST_CASE("equivalence check finds no discrepancies") {
  const FFConstruction c = make(2, 1, 1, 3, "0,1", "1,1");
  for (unsigned N = 1; N <= 4; ++N) {
    const EquivalenceCheck eq = ff_equivalence_check(c, N, 5000, 2);
    CHECK(eq.discrepancies == 0);
    CHECK(big(eq.irreducibles) == count_monic_irreducibles(4, N));
    CHECK(eq.divisors >= ff_scan(c, N, 1).count());
  }
  const FFConstruction c3 = make(3, 1, 1, 2, "0,1", "1,1");
  for (unsigned N = 1; N <= 3; ++N) CHECK(ff_equivalence_check(c3, N, 5000, 1).discrepancies == 0);
}

TEST_CASE("unequal indices use direct per-irreducible verification") {
  const FFConstruction c = make(2, 1, 1, 3, "0,1", "1,1", 5);
  CHECK(c.generalized());
  CHECK(c.index_lcm() == 15);
  CHECK(c.choice().Q == 16);
  for (unsigned N = 1; N <= 2; ++N) {
    const ScanResult s = ff_scan(c, N, 1);
    CHECK_FALSE(s.predicted);
    for (const Poly& pi : s.qualifying) {
      CHECK(divides_by_order(pi, c.a_lifted(), 3, s.n));
      CHECK(divides_by_order(pi, c.b_lifted(), 5, s.n));
    }
    CHECK(ff_equivalence_check(c, N, 5000, 1).discrepancies == 0);
    CHECK(ff_direct_verify(c, s).deg_gcd >= N * s.count());
  }
}

TEST_CASE("polynomial text") {
  const FieldPtr F2 = fq_context(2, 1);
  CHECK(parse_poly("0,1", F2) == Poly::variable(F2));
  CHECK(parse_poly("1,1", F2) == Poly(F2, {1, 1}));
  CHECK(parse_poly("3,0,1", F2) == Poly(F2, {1, 0, 1}));
  CHECK(parse_poly("1,0,0", F2) == Poly::constant(F2, 1));
  CHECK(format_poly(parse_poly("3,0,1", F2)) == "1,0,1");
  CHECK_THROWS_AS(parse_poly("", F2), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("1,,2", F2), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("1,x", F2), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("-1", F2), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("1, 2", F2), InvalidArgument);
}
