#pragma once

#include "cyclogcd/arith.hpp"
#include "cyclogcd/fpoly.hpp"

#include <vector>

namespace cyclogcd {

struct CyclotomicPoly {
  u64 index = 0;
  // coeffs[i] multiplies x^i; size is euler_phi(index) + 1.
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

// Phi_N as prod_{d | N} (x^d - 1)^{mu(N/d)}: the numerator factors are
// multiplied out first, then each denominator factor is divided out exactly.
CyclotomicPoly build_cyclotomic(u64 N);

BigInt eval_int(const CyclotomicPoly& phi, const BigInt& v);

// Phi(t) mod p for a residue t.
u64 eval_at_residue(const CyclotomicPoly& phi, u64 t, u64 p);

// Phi_N(a^n) mod p. Throws InvalidArgument if p | a.
u64 eval_mod_prime(const CyclotomicPoly& phi, u64 a, const BigInt& n, u64 p);
u64 eval_mod_prime(u64 N, u64 a, const BigInt& n, u64 p);

// Phi_m(A) over the field of A. Throws if the characteristic divides m.
ff::Poly eval_poly_fq(u64 m, const ff::Poly& A);
ff::Poly eval_poly_fq(const CyclotomicPoly& phi, const ff::Poly& A);

}  // namespace cyclogcd
