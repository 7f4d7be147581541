#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqg/ffield.hpp"

namespace fqg {

/// Dense univariate polynomial over a coded finite field. Coefficients are
/// field codes in ascending degree; the leading coefficient is nonzero unless
/// the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<uint32_t> coeffs);

  static Poly zero(const FieldPtr& field);
  static Poly constant(const FieldPtr& field, uint32_t c);
  static Poly monomial(const FieldPtr& field, uint32_t c, size_t k);
  /// x^N - 1.
  static Poly x_pow_minus_one(const FieldPtr& field, size_t N);
  /// Inverse of to_string: "c0 + c1*x + c5*x^5"; bare "x", "x^k" and signed
  /// integer coefficients are also accepted. Throws ParseError.
  static Poly parse(const FieldPtr& field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t eval(uint32_t point) const;

  Poly monic() const;
  Poly scale(uint32_t c) const;
  Poly operator-() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Lexicographic order on the coefficient string (constant term first).
  bool lex_less(const Poly& other) const { return c_ < other.c_; }

  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<uint32_t> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

struct ExtGcd {
  Poly g;
  Poly u;
  Poly v;
};

/// Throws FieldMismatch, or NotInvertible when b is zero.
DivMod divmod(const Poly& a, const Poly& b);
/// u*a + v*b = g with g monic. Throws FieldMismatch, BothZero.
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
/// l with a*l = 1 mod f and deg l < deg f. Throws NotInvertible.
Poly inverse_mod(const Poly& a, const Poly& f);
/// x^deg f * f(1/x), made monic. Throws ZeroConstantTerm.
Poly reciprocal(const Poly& f);
/// x^deg f * f(1/x) without normalization.
Poly reversed(const Poly& f);
/// Monic polynomial whose roots are the s-th powers of the roots of f.
/// Throws NotDividingXNMinus1 when f does not divide x^N - 1, BadS when
/// s^2 != 1 mod N.
Poly s_involution(const Poly& f, int64_t s, size_t N);
Poly formal_derivative(const Poly& f);
/// Least n >= 1 with f | x^n - 1. Throws ZeroConstantTerm (also for constants).
uint64_t poly_order(const Poly& f);

Poly mulmod(const Poly& a, const Poly& b, const Poly& f);
Poly powmod(const Poly& a, u128 e, const Poly& f);
/// x^k mod (x^N - 1), for any integer k.
Poly x_power_cyclic(const FieldPtr& field, int64_t k, size_t N);
/// f(x^k) mod (x^N - 1).
Poly compose_power_cyclic(const Poly& f, int64_t k, size_t N);
bool is_irreducible(const Poly& f);

}  // namespace fqg
