#include "cyclogcd/arith.hpp"

#include "cyclogcd/errors.hpp"
#include "cyclogcd/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cyclogcd {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = sieve_primes(kTrialLimit);
  return primes;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 rho_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

BigInt rho_big(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) {
      BigInt w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_u64_into(u64 n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[big(n)] += 1;
    return;
  }
  const u64 d = rho_brent(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

void factor_big_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    factor_u64_into(to_u64(n), out);
    return;
  }
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  const BigInt d = rho_big(n);
  factor_big_into(d, out);
  factor_big_into(BigInt(n / d), out);
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double eps, int depth) {
  auto f = [](double t) { return 1.0 / std::log(t); };
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return adaptive_simpson(a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

}  // namespace

bool fits_u64(const BigInt& v) { return v >= 0 && mpz_fits_ulong_p(v.get_mpz_t()) != 0; }

u64 to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw InvalidArgument("integer " + v.get_str() + " does not fit in 64 bits");
  return mpz_get_ui(v.get_mpz_t());
}

BigInt big(u64 v) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return BigInt(static_cast<unsigned long>(v));
}

std::vector<u64> sieve_primes(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // index i represents the odd number 2i + 1
  const u64 half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (u64 i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    primes.push_back(p);
    for (u64 j = (p * p - 1) / 2; j < half && p <= limit / p; j += p) composite[j] = true;
  }
  return primes;
}

std::vector<u64> sieve_segment(u64 lo, u64 hi, std::span<const u64> base) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);
  std::vector<bool> composite(hi - lo + 1, false);
  for (u64 p : base) {
    if (p > hi / p) break;
    u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 j = start; j <= hi; j += p) composite[j - lo] = true;
  }
  for (u64 v = lo; v <= hi; ++v)
    if (!composite[v - lo]) out.push_back(v);
  return out;
}

std::vector<u64> sieve_primes_parallel(u64 limit, unsigned threads) {
  if (limit < 2) return {};
  const std::vector<u64> base = sieve_primes(isqrt(limit) + 1);
  constexpr std::size_t kSegment = 1 << 18;
  auto blocks = map_blocks(static_cast<std::size_t>(limit + 1), kSegment, threads,
                           [&](std::size_t b, std::size_t e) {
                             return sieve_segment(b, e - 1, base);
                           });
  std::vector<u64> primes;
  for (auto& blk : blocks) primes.insert(primes.end(), blk.begin(), blk.end());
  return primes;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n) {
  if (fits_u64(n)) return is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

FactoredInt::FactoredInt(BigInt value, std::map<BigInt, unsigned> factors)
    : value_(std::move(value)), factors_(std::move(factors)) {
  if (value_ < 1) throw InvalidArgument("factored integer must be positive");
  BigInt prod = 1;
  for (const auto& [p, e] : factors_) {
    if (e == 0) throw InvalidArgument("zero exponent in factorization");
    if (!is_probable_prime(p)) throw InvalidArgument("non-prime factor " + p.get_str());
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  if (prod != value_) throw InvalidArgument("factors do not multiply to " + value_.get_str());
}

unsigned FactoredInt::exponent(const BigInt& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

std::vector<u64> FactoredInt::primes() const {
  std::vector<u64> out;
  out.reserve(factors_.size());
  for (const auto& [p, e] : factors_) out.push_back(to_u64(p));
  return out;
}

bool FactoredInt::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& kv) { return kv.second == 1; });
}

BigInt FactoredInt::radical() const {
  BigInt r = 1;
  for (const auto& [p, e] : factors_) r *= p;
  return r;
}

bool FactoredInt::is_perfect_power(unsigned l) const {
  return std::all_of(factors_.begin(), factors_.end(), [l](const auto& kv) { return kv.second % l == 0; });
}

std::string FactoredInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

FactoredInt factorize(const BigInt& n) {
  if (n < 1) throw InvalidArgument("factorize: n must be positive, got " + n.get_str());
  std::map<BigInt, unsigned> factors;
  BigInt rest = n;
  for (u64 p : small_primes()) {
    if (BigInt(big(p) * big(p)) > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      factors[big(p)] = e;
    }
  }
  factor_big_into(rest, factors);
  return FactoredInt(n, std::move(factors));
}

FactoredInt factorize(u64 n) {
  if (n == 0) throw InvalidArgument("factorize: n must be positive, got 0");
  std::map<BigInt, unsigned> factors;
  u64 rest = n;
  for (u64 p : small_primes()) {
    if (p > rest / p) break;
    if (rest % p == 0) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      factors[big(p)] = e;
    }
  }
  factor_u64_into(rest, factors);
  return FactoredInt(big(n), std::move(factors));
}

int moebius(u64 n) {
  if (n == 0) throw InvalidArgument("moebius: n must be positive");
  const FactoredInt f = factorize(n);
  if (!f.is_squarefree()) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
  u64 phi = n;
  for (u64 p : factorize(n).primes()) phi = phi / p * (p - 1);
  return phi;
}

std::vector<u64> divisors(u64 n) {
  if (n == 0) throw InvalidArgument("divisors: n must be positive");
  std::vector<u64> divs{1};
  const FactoredInt f = factorize(n);
  for (const auto& [pb, e] : f.factors()) {
    const u64 p = to_u64(pb);
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u64 powmod(u64 base, u64 exponent, u64 modulus) {
  if (modulus < 2) throw InvalidArgument("powmod: modulus must be >= 2");
  u64 result = 1 % modulus;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod(result, base, modulus);
    base = mulmod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

u64 powmod(u64 base, const BigInt& exponent, u64 modulus) {
  if (exponent < 0) throw InvalidArgument("powmod: negative exponent");
  if (fits_u64(exponent)) return powmod(base, to_u64(exponent), modulus);
  return to_u64(powmod(big(base), exponent, big(modulus)));
}

BigInt powmod(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  if (modulus < 2) throw InvalidArgument("powmod: modulus must be >= 2");
  if (exponent < 0) throw InvalidArgument("powmod: negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

u64 mult_order(u64 a, u64 p) {
  if (p < 2) throw InvalidArgument("mult_order: modulus must be prime");
  a %= p;
  if (a == 0) throw InvalidArgument("mult_order: p divides a");
  u64 order = p - 1;
  for (u64 l : factorize(p - 1).primes()) {
    while (order % l == 0 && powmod(a, order / l, p) == 1) order /= l;
  }
  return order;
}

double li(double x) {
  if (!(x >= 2.0)) throw InvalidArgument("li: x must be >= 2");
  if (x == 2.0) return 0.0;
  auto f = [](double t) { return 1.0 / std::log(t); };
  // Geometric panels keep the recursion depth bounded for large x.
  double total = 0.0;
  double lo = 2.0;
  while (lo < x) {
    const double hi = std::min(x, lo * 2.0);
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = simpson(lo, hi, fa, fm, fb);
    const double eps = std::max(1e-9, std::fabs(whole) * 1e-10);
    total += adaptive_simpson(lo, hi, fa, fm, fb, whole, eps, 40);
    lo = hi;
  }
  return total;
}

double log_big(const BigInt& v) {
  if (v <= 0) throw InvalidArgument("log of non-positive integer");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace cyclogcd
