#include "fqg/ffield.hpp"

#include <algorithm>
#include <sstream>

namespace fqg {

namespace {

// Dense polynomials over a coded field, used only for modulus selection.
// polyring builds on Field, so the irreducibility test keeps its own helpers.
using Codes = std::vector<uint32_t>;

void trim(Codes& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Codes poly_mod(Codes a, const Codes& f, const Field& B) {
  trim(a);
  const size_t df = f.size() - 1;
  const uint32_t lead_inv = B.cinv(f.back());
  while (a.size() > df) {
    uint32_t c = B.cmul(a.back(), lead_inv);
    size_t shift = a.size() - 1 - df;
    for (size_t j = 0; j <= df; ++j) a[shift + j] = B.csub(a[shift + j], B.cmul(c, f[j]));
    trim(a);
  }
  return a;
}

Codes poly_mulmod(const Codes& a, const Codes& b, const Codes& f, const Field& B) {
  if (a.empty() || b.empty()) return {};
  Codes prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = B.cadd(prod[i + j], B.cmul(a[i], b[j]));
  }
  return poly_mod(std::move(prod), f, B);
}

Codes poly_powmod(Codes a, u128 e, const Codes& f, const Field& B) {
  Codes result{1};
  result = poly_mod(result, f, B);
  while (e) {
    if (e & 1) result = poly_mulmod(result, a, f, B);
    a = poly_mulmod(a, a, f, B);
    e >>= 1;
  }
  return result;
}

Codes poly_gcd(Codes a, Codes b, const Field& B) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Codes r = poly_mod(a, b, B);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool rabin_irreducible(const Codes& f, const Field& B) {
  const size_t m = f.size() - 1;
  if (m == 1) return true;
  const u128 Q = B.order();
  std::vector<Codes> frob(m + 1);
  frob[0] = poly_mod(Codes{0, 1}, f, B);
  for (size_t k = 1; k <= m; ++k) frob[k] = poly_powmod(frob[k - 1], Q, f, B);
  if (frob[m] != frob[0]) return false;
  for (auto [r, e] : factorize(m)) {
    (void)e;
    Codes h = frob[m / r];
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = B.csub(h[1], 1);
    trim(h);
    if (h.empty()) return false;
    if (poly_gcd(h, f, B).size() > 1) return false;
  }
  return true;
}

Codes first_irreducible(const Field& B, unsigned degree) {
  const u128 Q = B.order();
  const u128 count = checked_pow(static_cast<uint64_t>(Q), degree);
  for (u128 k = 0; k < count; ++k) {
    Codes f(degree + 1, 0);
    u128 v = k;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = static_cast<uint32_t>(v % Q);
      v /= Q;
    }
    f[degree] = 1;
    if (degree > 1 && f[0] == 0) continue;
    if (rabin_irreducible(f, B)) return f;
  }
  panic("no irreducible polynomial found");
}

}  // namespace

FieldPtr make_field(uint32_t p, unsigned m) { return Field::make(p, m); }

FieldPtr make_field_of_order(uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  return Field::make(pp->p, pp->m);
}

FieldPtr Field::make(uint32_t p, unsigned m) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::DegreeZero, "extension degree must be >= 1");
  std::shared_ptr<Field> prime(new Field());
  prime->p_ = p;
  prime->degree_ = 1;
  prime->order_ = p;
  prime->modulus_ = {0, 1};
  prime->build_tables();
  if (m == 1) return prime;
  return extend(prime, m);
}

FieldPtr Field::extend(const FieldPtr& base, unsigned degree) {
  if (degree == 0) throw Error(Errc::DegreeZero, "extension degree must be >= 1");
  if (!base->coded()) throw Error(Errc::InvalidArgument, "extension base must be a coded field");
  return extend(base, first_irreducible(*base, degree));
}

FieldPtr Field::extend(const FieldPtr& base, std::vector<uint32_t> modulus) {
  if (modulus.size() < 2) throw Error(Errc::DegreeZero, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
  if (!base->coded()) throw Error(Errc::InvalidArgument, "extension base must be a coded field");
  if (!rabin_irreducible(modulus, *base)) {
    throw Error(Errc::InvalidArgument, "modulus is not irreducible");
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = base->p_;
  f->degree_ = static_cast<unsigned>(modulus.size() - 1);
  f->order_ = checked_pow(static_cast<uint64_t>(base->order_), f->degree_);
  f->base_ = base;
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

unsigned Field::absolute_degree() const {
  return degree_ * (base_ ? base_->absolute_degree() : 1);
}

u128 Field::base_order() const { return base_ ? base_->order_ : p_; }

uint32_t Field::badd(uint32_t a, uint32_t b) const {
  return base_ ? base_->cadd(a, b) : (a + b) % p_;
}
uint32_t Field::bsub(uint32_t a, uint32_t b) const {
  return base_ ? base_->csub(a, b) : (a + p_ - b) % p_;
}
uint32_t Field::bneg(uint32_t a) const { return base_ ? base_->cneg(a) : (p_ - a) % p_; }
uint32_t Field::bmul(uint32_t a, uint32_t b) const {
  return base_ ? base_->cmul(a, b)
               : static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
}
uint32_t Field::binv(uint32_t a) const {
  if (base_) return base_->cinv(a);
  if (a == 0) throw Error(Errc::ZeroElement, "inverse of zero");
  return static_cast<uint32_t>(powmod(a, p_ - 2, p_));
}

void Field::build_tables() {
  if (!coded()) return;
  const uint32_t Q = static_cast<uint32_t>(order_);
  if (Q <= 256) {
    add_.assign(static_cast<size_t>(Q) * Q, 0);
    for (uint32_t a = 0; a < Q; ++a) {
      FieldElem ea = decode(a);
      for (uint32_t b = 0; b < Q; ++b) add_[a * Q + b] = encode(add(ea, decode(b)));
    }
  }
  // Find a generator of the multiplicative group by its order.
  const auto factors = factorize(Q - 1);
  for (uint32_t c = 1; c < Q; ++c) {
    FieldElem g = decode(c);
    bool primitive = true;
    for (auto [r, e] : factors) {
      (void)e;
      FieldElem acc = one();
      FieldElem b = g;
      for (uint64_t k = (Q - 1) / r; k; k >>= 1) {
        if (k & 1) acc = mul_slow(acc, b);
        b = mul_slow(b, b);
      }
      if (is_one(acc)) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    exp_.assign(Q - 1, 0);
    log_.assign(Q, 0);
    FieldElem cur = one();
    for (uint32_t i = 0; i + 1 < Q; ++i) {
      uint32_t code = encode(cur);
      exp_[i] = code;
      log_[code] = i;
      cur = mul_slow(cur, g);
    }
    return;
  }
  panic("multiplicative group has no generator");
}

FieldElem Field::zero() const { return FieldElem{std::vector<uint32_t>(degree_, 0)}; }

FieldElem Field::one() const {
  FieldElem e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElem Field::from_int(int64_t v) const {
  FieldElem e = zero();
  e.coeffs[0] = base_ ? base_->cfrom_int(v)
                      : static_cast<uint32_t>(mod_floor(v, static_cast<int64_t>(p_)));
  return e;
}

FieldElem Field::generator() const {
  std::vector<uint32_t> t(degree_ + 1, 0);
  t[1] = 1;
  return reduce(std::move(t));
}

FieldElem Field::embed(uint32_t base_code) const {
  FieldElem e = zero();
  e.coeffs[0] = base_code;
  return e;
}

bool Field::is_zero(const FieldElem& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](uint32_t c) { return c == 0; });
}

bool Field::is_one(const FieldElem& a) const {
  if (a.coeffs.empty() || a.coeffs[0] != 1) return false;
  return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](uint32_t c) { return c == 0; });
}

bool Field::in_base(const FieldElem& a) const {
  return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](uint32_t c) { return c == 0; });
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = badd(a.coeffs[i], b.coeffs[i]);
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = bsub(a.coeffs[i], b.coeffs[i]);
  return r;
}

FieldElem Field::neg(const FieldElem& a) const {
  FieldElem r = zero();
  for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = bneg(a.coeffs[i]);
  return r;
}

FieldElem Field::scale(uint32_t base_code, const FieldElem& a) const {
  FieldElem r = zero();
  for (unsigned i = 0; i < degree_; ++i) r.coeffs[i] = bmul(base_code, a.coeffs[i]);
  return r;
}

FieldElem Field::reduce(std::vector<uint32_t> prod) const {
  const size_t m = degree_;
  for (size_t i = prod.size(); i-- > m;) {
    uint32_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < m; ++j) prod[i - m + j] = bsub(prod[i - m + j], bmul(c, modulus_[j]));
  }
  prod.resize(m, 0);
  return FieldElem{std::move(prod)};
}

FieldElem Field::mul_slow(const FieldElem& a, const FieldElem& b) const {
  std::vector<uint32_t> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      if (b.coeffs[j] == 0) continue;
      prod[i + j] = badd(prod[i + j], bmul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return reduce(std::move(prod));
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  if (!log_.empty()) return decode(cmul(encode(a), encode(b)));
  return mul_slow(a, b);
}

FieldElem Field::inv(const FieldElem& a) const {
  if (is_zero(a)) throw Error(Errc::ZeroElement, "inverse of zero");
  if (!log_.empty()) return decode(cinv(encode(a)));
  return pow(a, order_ - 2);
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem Field::pow(const FieldElem& a, u128 e) const {
  FieldElem result = one();
  FieldElem b = a;
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return result;
}

FieldElem Field::pow_signed(const FieldElem& a, int64_t e) const {
  if (e >= 0) return pow(a, static_cast<u128>(e));
  return pow(inv(a), static_cast<u128>(-(e + 1)) + 1);
}

FieldElem Field::frobenius(const FieldElem& a, unsigned times) const {
  FieldElem r = a;
  const u128 q = base_order();
  for (unsigned i = 0; i < times; ++i) r = pow(r, q);
  return r;
}

unsigned Field::element_degree(const FieldElem& a) const {
  FieldElem r = frobenius(a);
  unsigned j = 1;
  while (r != a) {
    r = frobenius(r);
    ++j;
  }
  return j;
}

bool Field::in_subfield(const FieldElem& a, unsigned deg) const {
  return frobenius(a, deg) == a;
}

std::vector<std::pair<u128, unsigned>> Field::order_minus_one_factors() const {
  return factor_prime_power_minus_one(p_, absolute_degree());
}

u128 Field::mul_order(const FieldElem& a) const {
  if (is_zero(a)) throw Error(Errc::ZeroElement, "order of zero");
  u128 t = order_ - 1;
  for (auto [r, e] : order_minus_one_factors()) {
    for (unsigned i = 0; i < e; ++i) {
      if (t % r != 0 || !is_one(pow(a, t / r))) break;
      t /= r;
    }
  }
  return t;
}

bool Field::is_square(const FieldElem& a) const {
  if (is_zero(a) || p_ == 2) return true;
  return is_one(pow(a, (order_ - 1) / 2));
}

std::optional<FieldElem> Field::sqrt(const FieldElem& a) const {
  if (is_zero(a)) return a;
  if (p_ == 2) return pow(a, order_ / 2);
  std::optional<FieldElem> root;
  if (coded()) {
    const uint32_t ca = encode(a);
    for (uint32_t r = 1; r < static_cast<uint32_t>(order_); ++r) {
      if (cmul(r, r) == ca) {
        root = decode(r);
        break;
      }
    }
  } else {
    if (!is_square(a)) return std::nullopt;
    u128 t = order_ - 1;
    unsigned e = 0;
    while ((t & 1) == 0) {
      t >>= 1;
      ++e;
    }
    FieldElem z;
    for (u128 k = 2;; ++k) {
      FieldElem cand = zero();
      u128 v = k;
      for (unsigned i = 0; i < degree_ && v; ++i) {
        cand.coeffs[i] = static_cast<uint32_t>(v % base_order());
        v /= base_order();
      }
      if (!is_square(cand)) {
        z = cand;
        break;
      }
    }
    FieldElem c = pow(z, t);
    FieldElem x = pow(a, (t + 1) / 2);
    FieldElem b = pow(a, t);
    unsigned r = e;
    while (!is_one(b)) {
      unsigned i = 0;
      FieldElem bb = b;
      while (!is_one(bb)) {
        bb = mul(bb, bb);
        ++i;
      }
      ensure(i < r, "Tonelli-Shanks failed to converge");
      FieldElem g = c;
      for (unsigned k = 0; k + i + 1 < r; ++k) g = mul(g, g);
      x = mul(x, g);
      c = mul(g, g);
      b = mul(b, c);
      r = i;
    }
    root = x;
  }
  if (!root) return std::nullopt;
  FieldElem other = neg(*root);
  return std::min(*root, other);
}

uint32_t Field::encode(const FieldElem& a) const {
  const uint64_t B = static_cast<uint64_t>(base_order());
  uint64_t code = 0;
  for (unsigned i = degree_; i-- > 0;) code = code * B + a.coeffs[i];
  return static_cast<uint32_t>(code);
}

FieldElem Field::decode(uint32_t code) const {
  const uint32_t B = static_cast<uint32_t>(base_order());
  FieldElem e = zero();
  for (unsigned i = 0; i < degree_; ++i) {
    e.coeffs[i] = code % B;
    code /= B;
  }
  return e;
}

uint32_t Field::cadd(uint32_t a, uint32_t b) const {
  if (!base_) return (a + b) % p_;
  if (!add_.empty()) return add_[a * static_cast<uint32_t>(order_) + b];
  const uint32_t B = static_cast<uint32_t>(base_order());
  uint32_t code = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    code += badd(a % B, b % B) * scale;
    a /= B;
    b /= B;
    scale *= B;
  }
  return code;
}

uint32_t Field::cneg(uint32_t a) const {
  if (!base_) return (p_ - a) % p_;
  const uint32_t B = static_cast<uint32_t>(base_order());
  uint32_t code = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    code += bneg(a % B) * scale;
    a /= B;
    scale *= B;
  }
  return code;
}

uint32_t Field::csub(uint32_t a, uint32_t b) const { return cadd(a, cneg(b)); }

uint32_t Field::cmul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!base_) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  const uint32_t n = static_cast<uint32_t>(order_) - 1;
  uint32_t s = log_[a] + log_[b];
  return exp_[s >= n ? s - n : s];
}

uint32_t Field::cinv(uint32_t a) const {
  if (a == 0) throw Error(Errc::ZeroElement, "inverse of zero");
  const uint32_t n = static_cast<uint32_t>(order_) - 1;
  return exp_[(n - log_[a]) % n];
}

uint32_t Field::cpow(uint32_t a, uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const uint64_t n = static_cast<uint64_t>(order_) - 1;
  return exp_[static_cast<uint64_t>(log_[a]) * (e % n) % n];
}

uint32_t Field::cfrom_int(int64_t v) const {
  return static_cast<uint32_t>(mod_floor(v, static_cast<int64_t>(p_)));
}

std::optional<uint32_t> Field::csqrt(uint32_t a) const {
  auto r = sqrt(decode(a));
  if (!r) return std::nullopt;
  return encode(*r);
}

std::vector<uint32_t> Field::prime_coordinates(const FieldElem& a) const {
  if (!base_) return {a.coeffs[0]};
  std::vector<uint32_t> out;
  for (uint32_t c : a.coeffs) {
    auto part = base_->prime_coordinates_of_code(c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<uint32_t> Field::prime_coordinates_of_code(uint32_t code) const {
  return prime_coordinates(decode(code));
}

std::string Field::to_string(const FieldElem& a) const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < a.coeffs.size(); ++i) os << (i ? "," : "") << a.coeffs[i];
  os << ']';
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  if (!base_) {
    os << "F_" << p_;
    return os.str();
  }
  os << base_->describe() << "[t]/(";
  for (size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << ')';
  return os.str();
}

bool Field::same_as(const Field& other) const {
  return this == &other || describe() == other.describe();
}

}  // namespace fqg
