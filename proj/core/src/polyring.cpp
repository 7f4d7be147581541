#include "fqg/polyring.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace fqg {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field())) {
    throw Error(Errc::FieldMismatch, "polynomials over different fields");
  }
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_ || !field_->coded()) {
    throw Error(Errc::InvalidArgument, "polynomials need a coded coefficient field");
  }
  const auto Q = static_cast<uint32_t>(field_->order());
  for (uint32_t c : c_) {
    if (c >= Q) throw Error(Errc::InvalidArgument, "coefficient code out of range");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::zero(const FieldPtr& field) { return Poly(field, {}); }

Poly Poly::constant(const FieldPtr& field, uint32_t c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldPtr& field, uint32_t c, size_t k) {
  std::vector<uint32_t> v(k + 1, 0);
  v[k] = c;
  return Poly(field, std::move(v));
}

Poly Poly::x_pow_minus_one(const FieldPtr& field, size_t N) {
  std::vector<uint32_t> v(N + 1, 0);
  v[0] = field->cneg(1);
  v[N] = field->cadd(v[N], 1);
  return Poly(field, std::move(v));
}

Poly Poly::parse(const FieldPtr& field, std::string_view text) {
  std::vector<uint32_t> out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](int64_t& v) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) return false;
    v = std::stoll(std::string(text.substr(start, pos - start)));
    return true;
  };
  auto fail = [&](const char* what) {
    throw Error(Errc::ParseError, std::string(what) + " in polynomial '" + std::string(text) + "'");
  };
  bool first = true;
  skip_ws();
  if (pos == text.size()) fail("empty input");
  while (pos < text.size()) {
    int sign = 1;
    if (!first) {
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        sign = -1;
        ++pos;
      } else {
        fail("expected '+' or '-'");
      }
      skip_ws();
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
      skip_ws();
    }
    first = false;
    int64_t c = 1;
    bool have_coeff = read_int(c);
    skip_ws();
    size_t power = 0;
    bool have_x = false;
    if (have_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'x') fail("expected 'x' after '*'");
    }
    if (pos < text.size() && text[pos] == 'x') {
      have_x = true;
      ++pos;
      power = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        int64_t k = 0;
        if (!read_int(k)) fail("expected exponent");
        power = static_cast<size_t>(k);
      }
    }
    if (!have_coeff && !have_x) fail("expected a term");
    if (out.size() <= power) out.resize(power + 1, 0);
    uint32_t code = field->cfrom_int(sign * c);
    if (field->degree() > 1 || field->base()) {
      // Coefficients of extension fields are given as field codes.
      if (c < 0 || static_cast<u128>(c) >= field->order()) fail("coefficient code out of range");
      code = static_cast<uint32_t>(c);
      if (sign < 0) code = field->cneg(code);
    }
    out[power] = field->cadd(out[power], code);
    skip_ws();
  }
  return Poly(field, std::move(out));
}

uint32_t Poly::eval(uint32_t point) const {
  uint32_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = field_->cadd(field_->cmul(acc, point), c_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_->cinv(lead()));
}

Poly Poly::scale(uint32_t c) const {
  std::vector<uint32_t> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = field_->cmul(c, c_[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<uint32_t> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = field_->cneg(c_[i]);
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  const auto& F = *a.field_;
  std::vector<uint32_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = F.cadd(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a, b);
  const auto& F = *a.field_;
  std::vector<uint32_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = F.csub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
  const auto& F = *a.field_;
  std::vector<uint32_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = F.cadd(v[i + j], F.cmul(a.c_[i], b.c_[j]));
  }
  return Poly(a.field_, std::move(v));
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_ != b.c_) return false;
  if (a.field_ == b.field_) return true;
  return a.field_ && b.field_ && a.field_->same_as(*b.field_);
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(Errc::NotInvertible, "division by the zero polynomial");
  const auto& F = *a.field();
  std::vector<uint32_t> r = a.coeffs();
  const size_t db = b.coeffs().size() - 1;
  if (r.size() <= db) return {Poly::zero(a.field()), a};
  std::vector<uint32_t> q(r.size() - db, 0);
  const uint32_t inv_lead = F.cinv(b.lead());
  const auto& bc = b.coeffs();
  for (size_t i = r.size(); i-- > db;) {
    uint32_t c = F.cmul(r[i], inv_lead);
    q[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = F.csub(r[i - db + j], F.cmul(c, bc[j]));
  }
  r.resize(db);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  const auto& F = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(F, 1), u1 = Poly::zero(F);
  Poly v0 = Poly::zero(F), v1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  const uint32_t inv = F->cinv(r0.lead());
  return {r0.scale(inv), u0.scale(inv), v0.scale(inv)};
}

Poly gcd(const Poly& a, const Poly& b) { return ext_gcd(a, b).g; }

Poly inverse_mod(const Poly& a, const Poly& f) {
  if (f.degree() < 1) throw Error(Errc::NotInvertible, "modulus must have degree >= 1");
  Poly ar = a % f;
  if (ar.is_zero()) throw Error(Errc::NotInvertible, "zero is not invertible");
  auto [g, u, v] = ext_gcd(ar, f);
  (void)v;
  if (g.degree() != 0) throw Error(Errc::NotInvertible, "gcd(a, f) != 1");
  return u % f;
}

Poly reversed(const Poly& f) {
  std::vector<uint32_t> v(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(f.field(), std::move(v));
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero() || f.coeff(0) == 0) {
    throw Error(Errc::ZeroConstantTerm, "reciprocal needs f(0) != 0");
  }
  return reversed(f).monic();
}

Poly x_power_cyclic(const FieldPtr& field, int64_t k, size_t N) {
  return Poly::monomial(field, 1, static_cast<size_t>(mod_floor(k, static_cast<int64_t>(N))));
}

Poly compose_power_cyclic(const Poly& f, int64_t k, size_t N) {
  const auto& F = *f.field();
  std::vector<uint32_t> v(N, 0);
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeff(i) == 0) continue;
    size_t e = static_cast<size_t>(
        mod_floor(static_cast<int64_t>(i % N) * mod_floor(k, static_cast<int64_t>(N)),
                  static_cast<int64_t>(N)));
    v[e] = F.cadd(v[e], f.coeff(i));
  }
  return Poly(f.field(), std::move(v));
}

Poly s_involution(const Poly& f, int64_t s, size_t N) {
  if (N == 0) throw Error(Errc::InvalidArgument, "N must be positive");
  const int64_t sn = static_cast<int64_t>(N);
  const int64_t sr = mod_floor(s, sn);
  if (static_cast<int64_t>(static_cast<u128>(sr) * sr % N) != 1 % sn) {
    throw Error(Errc::BadS, "s^2 != 1 mod N");
  }
  const Poly xn = Poly::x_pow_minus_one(f.field(), N);
  if (f.degree() < 0 || !(xn % f).is_zero()) {
    throw Error(Errc::NotDividingXNMinus1, f.to_string() + " does not divide x^N - 1");
  }
  // The N-th roots of unity w with f(w^s) = 0 are exactly {r^s : f(r) = 0}
  // because s is its own inverse mod N.
  return gcd(xn, compose_power_cyclic(f, sr, N));
}

Poly formal_derivative(const Poly& f) {
  if (f.degree() < 1) return Poly::zero(f.field());
  const auto& F = *f.field();
  std::vector<uint32_t> v(f.coeffs().size() - 1);
  for (size_t i = 1; i < f.coeffs().size(); ++i) {
    v[i - 1] = F.cmul(F.cfrom_int(static_cast<int64_t>(i % F.characteristic())), f.coeff(i));
  }
  return Poly(f.field(), std::move(v));
}

uint64_t poly_order(const Poly& f) {
  if (f.degree() < 1 || f.coeff(0) == 0) {
    throw Error(Errc::ZeroConstantTerm, "order needs a nonconstant f with f(0) != 0");
  }
  const Poly one = Poly::constant(f.field(), 1) % f;
  const Poly x = Poly::monomial(f.field(), 1, 1);
  Poly acc = x % f;
  for (uint64_t n = 1;; ++n) {
    if (acc == one) return n;
    acc = mulmod(acc, x, f);
    if (n > (uint64_t{1} << 40)) panic("polynomial order search did not terminate");
  }
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) { return (a * b) % f; }

Poly powmod(const Poly& a, u128 e, const Poly& f) {
  Poly result = Poly::constant(a.field(), 1) % f;
  Poly b = a % f;
  while (e) {
    if (e & 1) result = mulmod(result, b, f);
    e >>= 1;
    if (e) b = mulmod(b, b, f);
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  const int m = f.degree();
  if (m < 1) return false;
  if (m == 1) return true;
  const u128 Q = f.field()->order();
  const Poly x = Poly::monomial(f.field(), 1, 1);
  std::vector<Poly> frob{x % f};
  for (int k = 1; k <= m; ++k) frob.push_back(powmod(frob.back(), Q, f));
  if (!(frob[m] == frob[0])) return false;
  for (auto [r, e] : factorize(static_cast<uint64_t>(m))) {
    (void)e;
    Poly h = frob[m / r] - x;
    if (h.is_zero() || gcd(h, f).degree() > 0) return false;
  }
  return true;
}

}  // namespace fqg
