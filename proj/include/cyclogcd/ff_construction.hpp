#pragma once

// Degree-growth construction for gcd(Phi_u(a^n), Phi_v(b^n)) in F_q[T]:
// parameter selection, scans of monic irreducibles over F_Q, the power
// criterion, and exact verification in the base field.

#include "cyclogcd/fpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclogcd::ff {

struct FFParams {
  u64 q = 2;
  u64 k = 1;
  u64 n0 = 1;
  // Index applied to a.
  u64 m = 1;
  // Index applied to b; 0 means v = m.
  u64 v = 0;

  u64 index_a() const { return m; }
  u64 index_b() const { return v == 0 ? m : v; }
};

struct ParamChoice {
  u64 r = 1;
  u64 t = 1;
  u64 Q = 2;
};

// (p, e) with q = p^e; throws InvalidArgument when q is not a prime power.
std::pair<u64, unsigned> prime_power(u64 q);

// r: least positive integer prime to m with r m n0 = -1 (mod q^k).
// t: least t >= k with q^t = 1 (mod m r). Q = q^t.
ParamChoice choose_params(u64 q, u64 k, u64 n0, u64 m);

// For monic irreducible pi of degree N over F_Q: a^((Q^N - 1)/r) = 1 and
// a^((Q^N - 1)/l) != 1 (mod pi) for every prime l | m. Throws if pi | a.
bool pi_criterion(const Poly& pi, const Poly& a, u64 m, u64 r);

// (1/r^2) prod_{l | m} (1 - 1/l)^2
Rational joint_density(u64 m, u64 r);
// prod (l - 1)^{e_l} / (r^2 prod l^{e_l}) with e_l the exponent of l in m.
Rational exponent_reading_density(u64 m, u64 r);

class FFConstruction {
 public:
  // a, b must live over F_q (the field fq_context(p, e) for q = p^e).
  // Every hypothesis is checked here; violations throw HypothesisViolation.
  static FFConstruction create(const FFParams& params, const Poly& a, const Poly& b);

  const FFParams& params() const { return params_; }
  const ParamChoice& choice() const { return choice_; }
  u64 index_a() const { return params_.index_a(); }
  u64 index_b() const { return params_.index_b(); }
  // lcm of the two indices; the m of the single-index construction.
  u64 index_lcm() const { return lcm_; }
  bool generalized() const { return index_a() != index_b(); }

  const FieldPtr& base_field() const { return base_; }
  const FieldPtr& scan_field() const { return big_; }
  const Embedding& embedding() const { return *embed_; }
  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& a_lifted() const { return a_big_; }
  const Poly& b_lifted() const { return b_big_; }

  // (Q^N - 1) / (L r), after checking L r | Q^N - 1 and n = n0 (mod q^k).
  BigInt n_for(unsigned N) const;

 private:
  FFConstruction(FFParams params, ParamChoice choice, u64 lcm, FieldPtr base, FieldPtr big, Poly a, Poly b);

  FFParams params_;
  ParamChoice choice_;
  u64 lcm_;
  FieldPtr base_;
  FieldPtr big_;
  std::shared_ptr<const Embedding> embed_;
  Poly a_, b_, a_big_, b_big_;
};

struct ScanResult {
  unsigned N = 0;
  BigInt n;
  std::vector<Poly> qualifying;  // lexicographic order
  u64 irreducible_count = 0;
  u64 excluded_count = 0;  // irreducibles dividing a*b
  // ratio * Q^N / N; absent for unequal indices.
  std::optional<Rational> predicted;

  u64 count() const { return qualifying.size(); }
};

// Upper bound on Q^N for a scan.
inline constexpr u64 kMaxScanCandidates = u64{1} << 24;

ScanResult ff_scan(const FFConstruction& c, unsigned N, unsigned threads = 1);

struct DirectVerify {
  u64 deg_gcd = 0;
  u64 certified_bound = 0;
  double ratio_to_n = 0.0;
};

inline constexpr u64 kDefaultNCap = 5000;

// deg gcd(Phi_u(a^n), Phi_v(b^n)) computed exactly over F_q and checked
// against N * count. Throws InvalidArgument when n exceeds n_cap.
DirectVerify ff_direct_verify(const FFConstruction& c, const ScanResult& scan, u64 n_cap = kDefaultNCap);

struct EquivalenceCheck {
  u64 irreducibles = 0;
  u64 divisors = 0;  // irreducibles dividing the exact gcd
  u64 discrepancies = 0;
  std::vector<std::string> samples;  // first few disagreeing pi
};

// For every monic irreducible pi of degree N over F_Q, compares the scan
// predicate for a, b and both against exact divisibility of the lifted
// polynomials Phi_u(a^n), Phi_v(b^n) and their gcd.
EquivalenceCheck ff_equivalence_check(const FFConstruction& c, unsigned N, u64 n_cap = kDefaultNCap,
                                      unsigned threads = 1);

// Parses "c0,c1,..."; each coefficient a nonnegative integer reduced mod the
// characteristic, mapped into the prime subfield.
Poly parse_poly(const std::string& text, const FieldPtr& field);

// Inverse of parse_poly for prime-subfield coefficients.
std::string format_poly(const Poly& f);

}  // namespace cyclogcd::ff
