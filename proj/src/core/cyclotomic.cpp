#include "cyclogcd/cyclotomic.hpp"

#include "cyclogcd/errors.hpp"

namespace cyclogcd {

namespace {

using IntPoly = std::vector<BigInt>;

// Multiply by (x^d - 1).
IntPoly times_binomial(const IntPoly& f, u64 d) {
  IntPoly out(f.size() + d, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i + d] += f[i];
    out[i] -= f[i];
  }
  return out;
}

// Divide by (x^d - 1); the remainder must vanish.
IntPoly divide_binomial(const IntPoly& f, u64 d) {
  if (f.size() <= d) throw VerificationFailure("cyclotomic construction: inexact division");
  IntPoly rem = f;
  IntPoly quot(f.size() - d, 0);
  for (std::size_t k = rem.size(); k-- > d;) {
    const BigInt c = rem[k];
    if (c == 0) continue;
    quot[k - d] = c;
    rem[k] = 0;
    rem[k - d] += c;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (rem[i] != 0) throw VerificationFailure("cyclotomic construction: nonzero remainder");
  return quot;
}

}  // namespace

CyclotomicPoly build_cyclotomic(u64 N) {
  if (N == 0) throw InvalidArgument("cyclotomic index must be positive");
  const auto divs = divisors(N);
  IntPoly f{1};
  for (u64 d : divs)
    if (moebius(N / d) == 1) f = times_binomial(f, d);
  for (u64 d : divs)
    if (moebius(N / d) == -1) f = divide_binomial(f, d);
  if (f.size() != euler_phi(N) + 1 || f.back() != 1)
    throw VerificationFailure("cyclotomic construction: wrong degree or leading coefficient");
  return CyclotomicPoly{N, std::move(f)};
}

BigInt eval_int(const CyclotomicPoly& phi, const BigInt& v) {
  BigInt acc = 0;
  for (std::size_t i = phi.coeffs.size(); i-- > 0;) acc = acc * v + phi.coeffs[i];
  return acc;
}

u64 eval_at_residue(const CyclotomicPoly& phi, u64 t, u64 p) {
  u64 acc = 0;
  t %= p;
  for (std::size_t i = phi.coeffs.size(); i-- > 0;) {
    const u64 c = mpz_fdiv_ui(phi.coeffs[i].get_mpz_t(), p);
    acc = (mulmod(acc, t, p) + c) % p;
  }
  return acc;
}

u64 eval_mod_prime(const CyclotomicPoly& phi, u64 a, const BigInt& n, u64 p) {
  if (p < 2) throw InvalidArgument("eval_mod_prime: p must be prime");
  if (a % p == 0) throw InvalidArgument("eval_mod_prime: p = " + std::to_string(p) + " divides a = " +
                                        std::to_string(a));
  return eval_at_residue(phi, powmod(a, n, p), p);
}

u64 eval_mod_prime(u64 N, u64 a, const BigInt& n, u64 p) {
  return eval_mod_prime(build_cyclotomic(N), a, n, p);
}

ff::Poly eval_poly_fq(const CyclotomicPoly& phi, const ff::Poly& A) {
  const auto& F = A.ctx();
  if (phi.index % F.characteristic() == 0)
    throw InvalidArgument("eval_poly_fq: characteristic " + std::to_string(F.characteristic()) +
                          " divides m = " + std::to_string(phi.index));
  ff::Poly acc(A.field());
  for (std::size_t i = phi.coeffs.size(); i-- > 0;)
    acc = acc * A + ff::Poly::constant(A.field(), F.from_big(phi.coeffs[i]));
  return acc;
}

ff::Poly eval_poly_fq(u64 m, const ff::Poly& A) { return eval_poly_fq(build_cyclotomic(m), A); }

}  // namespace cyclogcd
