#pragma once

// Dense univariate polynomials over an explicit finite field.

#include "cyclogcd/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cyclogcd::ff {

class Embedding;

class Poly {
 public:
  explicit Poly(FieldPtr field);
  // coeffs[i] is the coefficient of T^i; trailing zeros are trimmed.
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
  static Poly variable(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const { return field_; }
  const FieldContext& ctx() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

// Quotient and remainder; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);

Poly make_monic(const Poly& f);
// Monic gcd via Euclid; throws if both inputs are zero or contexts differ.
Poly poly_gcd(const Poly& f, const Poly& g);
Poly derivative(const Poly& f);
Poly poly_pow(const Poly& base, u64 exponent);
Poly poly_powmod(const Poly& base, const BigInt& exponent, const Poly& modulus);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

// Rabin's test. Expects a monic polynomial of degree >= 1.
bool irreducible_test(const Poly& f);

// f = prod g_i^{k_i} with g_i squarefree, pairwise coprime, monic. Factors
// are listed by increasing multiplicity.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

// True iff every irreducible factor of monic f occurs with multiplicity
// divisible by l.
bool is_lth_power(const Poly& f, u64 l);

// Maps each coefficient through the embedding.
Poly lift(const Poly& f, const Embedding& embed);

// The monic polynomial of `degree` whose lower coefficients are the base-Q
// digits of `index`, written constant term first and most significant
// first. Increasing index walks the lexicographic order.
Poly monic_from_index(const FieldPtr& field, unsigned degree, u64 index);

// Number of monic irreducible polynomials of degree n over F_Q.
BigInt count_monic_irreducibles(u64 field_size, unsigned n);

}  // namespace cyclogcd::ff
