#pragma once

// Explicit finite fields F_{p^e}. Elements are encoded as integers whose
// base-p digits are the coefficients of the residue polynomial in u, the
// generator u being a root of the field modulus.

#include "cyclogcd/arith.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cyclogcd::ff {

using Elem = std::uint32_t;

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

// Field of size p^e with the lexicographically least monic irreducible
// modulus of degree e, coefficient sequences compared constant term first.
// Contexts are immutable and cached, so equal (p, e) give the same pointer.
FieldPtr fq_context(u64 p, unsigned e);

class FieldContext {
 public:
  u64 characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  u64 size() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }
  // Monic, degree e, coefficients in [0, p), constant term first. For e = 1
  // this is u itself.
  const std::vector<u64>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem from_big(const BigInt& v) const;
  Elem from_digits(std::span<const u64> digits) const;
  std::vector<u64> digits(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, const BigInt& exponent) const;
  Elem pow(Elem a, u64 exponent) const;

  // Construction goes through fq_context.
  FieldContext(u64 p, unsigned e, std::vector<u64> modulus);

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  u64 p_;
  unsigned e_;
  u64 q_;
  std::vector<u64> modulus_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
};

// Homomorphism F_{p^e} -> F_{p^E} (e | E) sending the generator of the
// small field to the least root of its modulus in the large one.
class Embedding {
 public:
  Embedding(FieldPtr from, FieldPtr to);
  Elem operator()(Elem a) const;
  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }
  Elem generator_image() const { return image_; }

 private:
  FieldPtr from_;
  FieldPtr to_;
  Elem image_ = 0;
  std::vector<Elem> powers_;
};

}  // namespace cyclogcd::ff
