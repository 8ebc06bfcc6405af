#include "cyclogcd/fpoly.hpp"

#include "cyclogcd/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cyclogcd::ff {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw InvalidArgument("polynomials over different field contexts");
}

// Inverse Frobenius on coefficients: c -> c^(q/p).
Poly pth_root(const Poly& f) {
  const auto& F = f.ctx();
  const u64 p = F.characteristic();
  const u64 root_exp = F.size() / p;
  std::vector<Elem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly(f.field(), std::move(out));
}

void squarefree_into(const Poly& f, unsigned multiplier, std::map<unsigned, Poly>& acc) {
  if (f.degree() < 1) return;
  const u64 p = f.ctx().characteristic();
  auto record = [&](const Poly& fac, unsigned k) {
    auto it = acc.find(k);
    if (it == acc.end())
      acc.emplace(k, fac);
    else
      it->second = it->second * fac;
  };
  const Poly d = derivative(f);
  if (d.is_zero()) {
    squarefree_into(pth_root(f), multiplier * static_cast<unsigned>(p), acc);
    return;
  }
  Poly c = poly_gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    const Poly y = poly_gcd(w, c);
    const Poly fac = w / y;
    if (fac.degree() > 0) record(make_monic(fac), i * multiplier);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) squarefree_into(pth_root(c), multiplier * static_cast<unsigned>(p), acc);
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("polynomial without field context");
}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw InvalidArgument("polynomial without field context");
  for (Elem c : c_)
    if (c >= field_->size()) throw InvalidArgument("coefficient outside the field");
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << (c_[i] != 1 ? "*" : "") << "T";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& F = a.ctx();
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& F = a.ctx();
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const auto& F = a.ctx();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  const std::size_t n = x.size() + y.size() - 1;
  if (F.is_prime_field() && F.characteristic() < (u64{1} << 16)) {
    // (p-1)^2 < 2^32, so 2^32 products fit in a u64 accumulator.
    std::vector<u64> acc(n, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      const u64 xi = x[i];
      for (std::size_t j = 0; j < y.size(); ++j) acc[i + j] += xi * y[j];
    }
    std::vector<Elem> out(n);
    const u64 p = F.characteristic();
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Elem>(acc[k] % p);
    return Poly(a.field(), std::move(out));
  }
  std::vector<Elem> out(n, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(x[i], y[j]));
  }
  return Poly(a.field(), std::move(out));
}

Poly scale(const Poly& a, Elem c) {
  std::vector<Elem> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ctx().mul(a.coeffs()[i], c);
  return Poly(a.field(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw InvalidArgument("polynomial division by zero");
  const auto& F = f.ctx();
  if (f.degree() < g.degree()) return {Poly(f.field()), f};
  std::vector<Elem> rem = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<Elem> quot(rem.size() - dg, 0);
  const Elem lead_inv = F.inv(g.lead());
  for (std::size_t k = rem.size(); k-- > dg;) {
    const Elem c = rem[k];
    if (c == 0) continue;
    const Elem q = F.mul(c, lead_inv);
    quot[k - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] = F.sub(rem[k - dg + j], F.mul(q, gc[j]));
  }
  rem.resize(dg);
  return {Poly(f.field(), std::move(quot)), Poly(f.field(), std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }
Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

Poly make_monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.ctx().inv(f.lead()));
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Poly derivative(const Poly& f) {
  const auto& F = f.ctx();
  if (f.coeffs().size() <= 1) return Poly(f.field());
  std::vector<Elem> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    out[i - 1] = F.mul(F.from_int(static_cast<long long>(i % F.characteristic())), f.coeffs()[i]);
  return Poly(f.field(), std::move(out));
}

Poly poly_pow(const Poly& base, u64 exponent) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly poly_powmod(const Poly& base, const BigInt& exponent, const Poly& modulus) {
  require_same_field(base, modulus);
  if (modulus.is_zero()) throw InvalidArgument("poly_powmod: zero modulus");
  if (exponent < 0) throw InvalidArgument("poly_powmod: negative exponent");
  if (modulus.degree() == 0) return Poly(base.field());
  Poly result = Poly::constant(base.field(), 1) % modulus;
  const Poly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (exponent == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mulmod(result, b, modulus);
  }
  return result;
}

bool irreducible_test(const Poly& f) {
  if (f.degree() < 1) throw InvalidArgument("irreducible_test: degree must be >= 1");
  if (!f.is_monic()) throw InvalidArgument("irreducible_test: polynomial must be monic");
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const BigInt q = big(f.ctx().size());
  const Poly t = Poly::variable(f.field()) % f;
  // frob[k] = T^(q^k) mod f
  std::vector<Poly> frob{t};
  for (unsigned k = 1; k <= n; ++k) frob.push_back(poly_powmod(frob.back(), q, f));
  if (!(frob[n] == t)) return false;
  for (u64 l : factorize(u64{n}).primes()) {
    const Poly h = frob[n / l] - t;
    if (!poly_gcd(h, f).is_one()) return false;
  }
  return true;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
  std::map<unsigned, Poly> acc;
  squarefree_into(make_monic(f), 1, acc);
  std::vector<std::pair<Poly, unsigned>> out;
  for (auto& [k, g] : acc) out.emplace_back(g, k);
  return out;
}

bool is_lth_power(const Poly& f, u64 l) {
  if (l < 2) throw InvalidArgument("is_lth_power: l must be >= 2");
  if (!f.is_monic()) throw InvalidArgument("is_lth_power: polynomial must be monic");
  for (const auto& [g, k] : squarefree_decomposition(f))
    if (k % l != 0) return false;
  return true;
}

Poly lift(const Poly& f, const Embedding& embed) {
  if (f.field() != embed.from()) throw InvalidArgument("lift: polynomial is not over the embedding source");
  std::vector<Elem> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = embed(f.coeffs()[i]);
  return Poly(embed.to(), std::move(out));
}

Poly monic_from_index(const FieldPtr& field, unsigned degree, u64 index) {
  const u64 q = field->size();
  std::vector<Elem> c(degree + 1, 0);
  c[degree] = 1;
  for (unsigned i = degree; i-- > 0;) {
    c[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return Poly(field, std::move(c));
}

BigInt count_monic_irreducibles(u64 field_size, unsigned n) {
  if (n == 0) throw InvalidArgument("degree must be >= 1");
  BigInt total = 0;
  for (u64 d : divisors(n)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), field_size, n / d);
    total += mu * term;
  }
  return total / n;
}

}  // namespace cyclogcd::ff
