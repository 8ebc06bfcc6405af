#include "cyclogcd/field.hpp"

#include "cyclogcd/errors.hpp"
#include "cyclogcd/fpoly.hpp"

#include <map>
#include <mutex>

namespace cyclogcd::ff {

namespace {

constexpr u64 kMaxFieldSize = u64{1} << 31;
constexpr u64 kTableFieldSize = 256;

std::vector<u64> least_irreducible_modulus(u64 p, unsigned e) {
  if (e == 1) return {0, 1};
  const FieldPtr prime = fq_context(p, 1);
  u64 candidates = 1;
  for (unsigned i = 0; i < e; ++i) candidates *= p;
  for (u64 idx = 0; idx < candidates; ++idx) {
    const Poly f = monic_from_index(prime, e, idx);
    if (f.coeff(0) == 0) continue;
    if (irreducible_test(f)) {
      std::vector<u64> out(f.coeffs().begin(), f.coeffs().end());
      return out;
    }
  }
  throw VerificationFailure("no irreducible polynomial of degree " + std::to_string(e) +
                            " over F_" + std::to_string(p));
}

}  // namespace

FieldPtr fq_context(u64 p, unsigned e) {
  if (e == 0) throw InvalidArgument("field extension degree must be >= 1");
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  u64 q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > kMaxFieldSize / p) throw InvalidArgument("field F_" + std::to_string(p) + "^" +
                                                     std::to_string(e) + " is too large");
    q *= p;
  }

  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, e});
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock: the modulus search recurses into fq_context(p, 1).
  auto modulus = least_irreducible_modulus(p, e);
  auto ctx = std::make_shared<const FieldContext>(p, e, std::move(modulus));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, e), ctx);
  return it->second;
}

FieldContext::FieldContext(u64 p, unsigned e, std::vector<u64> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  if (modulus_.size() != e + 1 || modulus_.back() != 1)
    throw InvalidArgument("field modulus must be monic of degree e");
  if (e_ > 1 && q_ <= kTableFieldSize) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    for (u64 a = 0; a < q_; ++a)
      for (u64 b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table_[a * q_ + b] = mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
      }
  }
}

Elem FieldContext::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<Elem>(r);
}

Elem FieldContext::from_big(const BigInt& v) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<Elem>(to_u64(r));
}

Elem FieldContext::from_digits(std::span<const u64> digits) const {
  if (digits.size() > e_) throw InvalidArgument("too many digits for field element");
  u64 v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
  return static_cast<Elem>(v);
}

std::vector<u64> FieldContext::digits(Elem a) const {
  std::vector<u64> d(e_);
  u64 v = a;
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Elem FieldContext::add_slow(Elem a, Elem b) const {
  u64 x = a, y = b, out = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return static_cast<Elem>(out);
}

Elem FieldContext::mul_slow(Elem a, Elem b) const {
  const auto da = digits(a), db = digits(b);
  std::vector<u64> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (std::size_t k = prod.size(); k-- > e_;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < e_; ++j)
      prod[k - e_ + j] = (prod[k - e_ + j] + (p_ - c) * modulus_[j]) % p_;
    prod[k] = 0;
  }
  prod.resize(e_);
  return from_digits(prod);
}

Elem FieldContext::add(Elem a, Elem b) const {
  if (e_ == 1) {
    const u64 s = u64{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[u64{a} * q_ + b];
  return add_slow(a, b);
}

Elem FieldContext::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_ - a);
  if (p_ == 2) return a;
  auto d = digits(a);
  for (auto& x : d) x = (p_ - x) % p_;
  return from_digits(d);
}

Elem FieldContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldContext::mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>(u64{a} * b % p_);
  if (!mul_table_.empty()) return mul_table_[u64{a} * q_ + b];
  return mul_slow(a, b);
}

Elem FieldContext::pow(Elem a, u64 exponent) const {
  Elem result = 1;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return result;
}

Elem FieldContext::pow(Elem a, const BigInt& exponent) const {
  if (exponent < 0) throw InvalidArgument("negative field exponent");
  if (fits_u64(exponent)) return pow(a, to_u64(exponent));
  // The multiplicative group has order q - 1.
  if (a == 0) return 0;
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), exponent.get_mpz_t(), q_ - 1);
  return pow(a, to_u64(r));
}

Elem FieldContext::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero field element");
  return pow(a, q_ - 2);
}

Embedding::Embedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->characteristic() != to_->characteristic() || to_->degree() % from_->degree() != 0)
    throw InvalidArgument("no embedding F_" + std::to_string(from_->size()) + " -> F_" +
                          std::to_string(to_->size()));
  const auto& mod = from_->modulus();
  bool found = false;
  for (u64 x = 0; x < to_->size() && !found; ++x) {
    // Horner evaluation of the small field's modulus at x.
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;)
      acc = to_->add(to_->mul(acc, static_cast<Elem>(x)), to_->from_int(static_cast<long long>(mod[i])));
    if (acc == 0) {
      image_ = static_cast<Elem>(x);
      found = true;
    }
  }
  if (!found) throw VerificationFailure("subfield modulus has no root in the extension");
  powers_.resize(from_->degree());
  Elem pw = 1;
  for (auto& slot : powers_) {
    slot = pw;
    pw = to_->mul(pw, image_);
  }
}

Elem Embedding::operator()(Elem a) const {
  const auto d = from_->digits(a);
  Elem out = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) out = to_->add(out, to_->mul(to_->from_int(static_cast<long long>(d[i])), powers_[i]));
  return out;
}

}  // namespace cyclogcd::ff
