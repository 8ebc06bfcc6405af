#include "cyclogcd/ff_construction.hpp"

#include "cyclogcd/cyclotomic.hpp"
#include "cyclogcd/errors.hpp"
#include "cyclogcd/parallel.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace cyclogcd::ff {

namespace {

u64 checked_pow(u64 base, u64 e) {
  u64 out = 1;
  for (u64 i = 0; i < e; ++i) {
    if (out > (u64{1} << 62) / base) throw InvalidArgument("parameter " + std::to_string(base) + "^" +
                                                           std::to_string(e) + " is too large");
    out *= base;
  }
  return out;
}

BigInt field_power(u64 Q, unsigned N) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), Q, N);
  return out;
}

void require_prime_to(u64 v, u64 q, const char* name) {
  if (std::gcd(v, q) != 1)
    throw HypothesisViolation(std::string("hypothesis violated: ") + name + " = " + std::to_string(v) +
                              " must be prime to q = " + std::to_string(q));
}

void require_not_power(const Poly& f, u64 index, const char* name) {
  if (f.degree() < 1 || !f.is_monic())
    throw HypothesisViolation(std::string("hypothesis violated: ") + name + " must be a nonconstant monic polynomial");
  for (u64 l : factorize(index).primes())
    if (is_lth_power(f, l))
      throw HypothesisViolation(std::string("hypothesis violated: ") + name + " = " + f.to_string() +
                                " is an l-th power in F_q(T) for l = " + std::to_string(l));
}

// Whether pi qualifies for one base: the power criterion when the indices
// agree, direct evaluation of Phi_index(base^n) mod pi otherwise.
bool qualifies(const FFConstruction& c, const Poly& pi, const Poly& base, u64 index, const BigInt& n,
               const CyclotomicPoly& phi) {
  if (!c.generalized()) return pi_criterion(pi, base, index, c.choice().r);
  const Poly t = poly_powmod(base, n, pi);
  return (eval_poly_fq(phi, t) % pi).is_zero();
}

}  // namespace

std::pair<u64, unsigned> prime_power(u64 q) {
  if (q < 2) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const FactoredInt f = factorize(q);
  if (f.factors().size() != 1) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const auto& [p, e] = *f.factors().begin();
  return {to_u64(p), e};
}

ParamChoice choose_params(u64 q, u64 k, u64 n0, u64 m) {
  prime_power(q);
  if (k == 0) throw InvalidArgument("k must be >= 1");
  if (m == 0) throw InvalidArgument("m must be positive");
  if (std::gcd(n0, q) != 1)
    throw InvalidArgument("n0 = " + std::to_string(n0) + " shares a factor with q; only classes prime to q are supported");
  require_prime_to(m, q, "m");
  const u64 qk = checked_pow(q, k);
  // r = -(m n0)^{-1} mod q^k, then step by q^k until gcd(r, m) = 1.
  BigInt unit = big(cyclogcd::mulmod(m % qk, n0 % qk, qk)), inv;
  const BigInt qkb = big(qk);
  if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), qkb.get_mpz_t()) == 0)
    throw VerificationFailure("m n0 is not a unit mod q^k");
  u64 r = (qk - to_u64(inv) % qk) % qk;
  if (r == 0) r = qk;
  while (std::gcd(r, m) != 1) r += qk;

  const u64 mr = m * r;
  u64 ord = 1;
  if (mr > 1) {
    u64 acc = q % mr;
    while (acc != 1) {
      acc = cyclogcd::mulmod(acc, q, mr);
      ++ord;
    }
  }
  const u64 t = ((k + ord - 1) / ord) * ord;
  ParamChoice out{r, t, checked_pow(q, t)};

  if (std::gcd(out.r, m) != 1 || cyclogcd::mulmod(cyclogcd::mulmod(out.r % qk, m % qk, qk), n0 % qk, qk) != qk - 1)
    throw VerificationFailure("choose_params: r fails r m n0 = -1 (mod q^k)");
  if (out.t < k || (mr > 1 && out.Q % mr != 1)) throw VerificationFailure("choose_params: q^t != 1 (mod m r)");
  return out;
}

bool pi_criterion(const Poly& pi, const Poly& a, u64 m, u64 r) {
  if (pi.field() != a.field()) throw InvalidArgument("pi_criterion: polynomials over different fields");
  if (pi.degree() < 1 || !pi.is_monic()) throw InvalidArgument("pi_criterion: pi must be monic of degree >= 1");
  if ((a % pi).is_zero()) throw InvalidArgument("pi_criterion: pi divides a");
  const u64 Q = pi.ctx().size();
  if (std::gcd(m * r, Q) != 1) throw InvalidArgument("pi_criterion: m r must be prime to Q");
  const BigInt order = field_power(Q, static_cast<unsigned>(pi.degree())) - 1;
  if (!mpz_divisible_ui_p(order.get_mpz_t(), r)) throw InvalidArgument("pi_criterion: r does not divide Q^N - 1");
  if (!poly_powmod(a, BigInt(order / r), pi).is_one()) return false;
  for (u64 l : factorize(m).primes()) {
    if (!mpz_divisible_ui_p(order.get_mpz_t(), l)) throw InvalidArgument("pi_criterion: l does not divide Q^N - 1");
    if (poly_powmod(a, BigInt(order / l), pi).is_one()) return false;
  }
  return true;
}

Rational joint_density(u64 m, u64 r) {
  Rational out(1, 1);
  for (u64 l : factorize(m).primes()) {
    const Rational f(big(l - 1), big(l));
    out *= f * f;
  }
  out /= Rational(big(r * r), 1);
  out.canonicalize();
  return out;
}

Rational exponent_reading_density(u64 m, u64 r) {
  BigInt num = 1, den = big(r * r);
  const FactoredInt f = factorize(m);
  for (const auto& [lb, e] : f.factors()) {
    BigInt t;
    const u64 l = to_u64(lb);
    mpz_ui_pow_ui(t.get_mpz_t(), l - 1, e);
    num *= t;
    mpz_ui_pow_ui(t.get_mpz_t(), l, e);
    den *= t;
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

FFConstruction::FFConstruction(FFParams params, ParamChoice choice, u64 lcm, FieldPtr base, FieldPtr big, Poly a,
                               Poly b)
    : params_(params),
      choice_(choice),
      lcm_(lcm),
      base_(std::move(base)),
      big_(std::move(big)),
      embed_(std::make_shared<const Embedding>(base_, big_)),
      a_(std::move(a)),
      b_(std::move(b)),
      a_big_(lift(a_, *embed_)),
      b_big_(lift(b_, *embed_)) {}

FFConstruction FFConstruction::create(const FFParams& params, const Poly& a, const Poly& b) {
  const auto [p, e] = prime_power(params.q);
  const FieldPtr base = fq_context(p, e);
  if (a.field() != base || b.field() != base)
    throw InvalidArgument("a and b must be polynomials over F_" + std::to_string(params.q));
  const u64 u = params.index_a(), v = params.index_b();
  if (u == 0) throw InvalidArgument("m must be positive");
  require_prime_to(u, params.q, "m");
  require_prime_to(v, params.q, "v");
  if (u != v) {
    const u64 d = std::gcd(u, v);
    if (std::gcd(u / d, d) != 1 || std::gcd(v / d, d) != 1)
      throw HypothesisViolation("hypothesis violated: with d = gcd(u, v) = " + std::to_string(d) +
                                ", both gcd(u/d, d) and gcd(v/d, d) must equal 1");
  }
  require_not_power(a, u, "a");
  require_not_power(b, v, "b");
  const u64 L = u / std::gcd(u, v) * v;
  const ParamChoice choice = choose_params(params.q, params.k, params.n0, L);
  const FieldPtr big = fq_context(p, static_cast<unsigned>(e * choice.t));
  if (big->size() != choice.Q) throw VerificationFailure("scan field size differs from Q");
  return FFConstruction(params, choice, L, base, big, a, b);
}

BigInt FFConstruction::n_for(unsigned N) const {
  if (N == 0) throw InvalidArgument("degree N must be >= 1");
  const BigInt total = field_power(choice_.Q, N) - 1;
  const u64 mr = lcm_ * choice_.r;
  if (!mpz_divisible_ui_p(total.get_mpz_t(), mr)) throw VerificationFailure("m r does not divide Q^N - 1");
  const BigInt n = total / big(mr);
  const u64 qk = checked_pow(params_.q, params_.k);
  if (mpz_fdiv_ui(n.get_mpz_t(), qk) != params_.n0 % qk)
    throw VerificationFailure("n = " + n.get_str() + " is not congruent to n0 mod q^k");
  return n;
}

ScanResult ff_scan(const FFConstruction& c, unsigned N, unsigned threads) {
  const u64 Q = c.choice().Q;
  const BigInt candidates_big = field_power(Q, N);
  if (candidates_big > big(kMaxScanCandidates))
    throw InvalidArgument("scan of " + candidates_big.get_str() + " candidates exceeds the cap");
  const u64 candidates = to_u64(candidates_big);
  const BigInt n = c.n_for(N);
  const FieldPtr& F = c.scan_field();
  const CyclotomicPoly phi_a = build_cyclotomic(c.index_a()), phi_b = build_cyclotomic(c.index_b());

  struct Block {
    std::vector<Poly> qualifying;
    u64 irreducible = 0;
    u64 excluded = 0;
  };
  auto blocks = map_blocks(candidates, 64, threads, [&](std::size_t lo, std::size_t hi) {
    Block blk;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      Poly pi = monic_from_index(F, N, idx);
      if (!irreducible_test(pi)) continue;
      ++blk.irreducible;
      if ((c.a_lifted() % pi).is_zero() || (c.b_lifted() % pi).is_zero()) {
        ++blk.excluded;
        continue;
      }
      if (qualifies(c, pi, c.a_lifted(), c.index_a(), n, phi_a) &&
          qualifies(c, pi, c.b_lifted(), c.index_b(), n, phi_b))
        blk.qualifying.push_back(std::move(pi));
    }
    return blk;
  });

  ScanResult out;
  out.N = N;
  out.n = n;
  for (auto& blk : blocks) {
    out.irreducible_count += blk.irreducible;
    out.excluded_count += blk.excluded;
    for (auto& pi : blk.qualifying) out.qualifying.push_back(std::move(pi));
  }
  if (big(out.irreducible_count) != count_monic_irreducibles(Q, N))
    throw VerificationFailure("irreducible count disagrees with the necklace formula");
  if (!c.generalized())
    out.predicted = joint_density(c.index_lcm(), c.choice().r) * Rational(candidates_big, big(N));
  return out;
}

DirectVerify ff_direct_verify(const FFConstruction& c, const ScanResult& scan, u64 n_cap) {
  if (scan.n > big(n_cap))
    throw InvalidArgument("n = " + scan.n.get_str() + " exceeds the exact-verification cap " + std::to_string(n_cap));
  const u64 n = to_u64(scan.n);
  const Poly fa = eval_poly_fq(c.index_a(), poly_pow(c.a(), n));
  const Poly fb = eval_poly_fq(c.index_b(), poly_pow(c.b(), n));
  const Poly g = poly_gcd(fa, fb);
  DirectVerify out;
  out.deg_gcd = static_cast<u64>(g.degree());
  out.certified_bound = scan.N * scan.count();
  out.ratio_to_n = static_cast<double>(out.deg_gcd) / static_cast<double>(n);
  if (out.deg_gcd < out.certified_bound)
    throw VerificationFailure("deg gcd = " + std::to_string(out.deg_gcd) + " below the certified bound " +
                              std::to_string(out.certified_bound) + " at N = " + std::to_string(scan.N));
  return out;
}

EquivalenceCheck ff_equivalence_check(const FFConstruction& c, unsigned N, u64 n_cap, unsigned threads) {
  const BigInt nb = c.n_for(N);
  if (nb > big(n_cap))
    throw InvalidArgument("n = " + nb.get_str() + " exceeds the exact-verification cap " + std::to_string(n_cap));
  const u64 n = to_u64(nb);
  const u64 Q = c.choice().Q;
  const BigInt candidates_big = field_power(Q, N);
  if (candidates_big > big(kMaxScanCandidates)) throw InvalidArgument("equivalence scan exceeds the cap");
  const u64 candidates = to_u64(candidates_big);

  const Poly fa = eval_poly_fq(c.index_a(), poly_pow(c.a(), n));
  const Poly fb = eval_poly_fq(c.index_b(), poly_pow(c.b(), n));
  const Poly g = poly_gcd(fa, fb);
  const Poly fa_big = lift(fa, c.embedding()), fb_big = lift(fb, c.embedding()), g_big = lift(g, c.embedding());
  const CyclotomicPoly phi_a = build_cyclotomic(c.index_a()), phi_b = build_cyclotomic(c.index_b());
  const FieldPtr& F = c.scan_field();

  auto blocks = map_blocks(candidates, 64, threads, [&](std::size_t lo, std::size_t hi) {
    EquivalenceCheck part;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const Poly pi = monic_from_index(F, N, idx);
      if (!irreducible_test(pi)) continue;
      ++part.irreducibles;
      const bool in_gcd = (g_big % pi).is_zero();
      if (in_gcd) ++part.divisors;
      bool agree;
      if ((c.a_lifted() % pi).is_zero() || (c.b_lifted() % pi).is_zero()) {
        agree = !in_gcd;
      } else {
        const bool crit_a = qualifies(c, pi, c.a_lifted(), c.index_a(), nb, phi_a);
        const bool crit_b = qualifies(c, pi, c.b_lifted(), c.index_b(), nb, phi_b);
        const bool div_a = (fa_big % pi).is_zero(), div_b = (fb_big % pi).is_zero();
        agree = crit_a == div_a && crit_b == div_b && (crit_a && crit_b) == in_gcd;
      }
      if (!agree) {
        ++part.discrepancies;
        if (part.samples.size() < 5) part.samples.push_back(pi.to_string());
      }
    }
    return part;
  });
  EquivalenceCheck out;
  for (auto& part : blocks) {
    out.irreducibles += part.irreducibles;
    out.divisors += part.divisors;
    out.discrepancies += part.discrepancies;
    for (auto& s : part.samples)
      if (out.samples.size() < 5) out.samples.push_back(std::move(s));
  }
  return out;
}

Poly parse_poly(const std::string& text, const FieldPtr& field) {
  if (text.empty()) throw InvalidArgument("empty polynomial text");
  std::vector<Elem> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    u64 value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
      throw InvalidArgument("polynomial coefficient '" + token + "' is not a nonnegative integer");
    coeffs.push_back(static_cast<Elem>(value % field->characteristic()));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Poly(field, std::move(coeffs));
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? "," : "") << f.coeffs()[i];
  return os.str();
}

}  // namespace cyclogcd::ff
