#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/numtheory.hpp"

namespace fqg {

/// Field element as a coefficient vector over the base field, ascending powers
/// of the adjoined generator. Each coefficient is an integer code of the base
/// field (a residue mod p when the base is the prime field). Representations
/// are fully reduced, so equality is coefficient-wise.
struct FieldElem {
  std::vector<uint32_t> coeffs;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field realized as base[t]/(modulus).
///
/// The base is either the raw residue ring Z/p (prime fields, modulus t) or a
/// small coded field; the extension towers used for splitting fields are
/// F_q[t]/(h) over a coded F_q. Fields of order <= 2^16 carry log/exp tables
/// and expose a compact integer code for each element; polynomials and group
/// algebra coefficients use those codes.
///
/// Immutable after construction and safe to share between threads.
class Field {
 public:
  static constexpr u128 kTableLimit = u128{1} << 16;

  /// F_{p^m} over F_p with the first irreducible monic modulus in code order.
  static FieldPtr make(uint32_t p, unsigned m);
  /// Extension of a coded base field by the first irreducible of `degree`.
  static FieldPtr extend(const FieldPtr& base, unsigned degree);
  /// Extension by an explicit monic irreducible modulus (base codes, ascending).
  static FieldPtr extend(const FieldPtr& base, std::vector<uint32_t> modulus);

  uint32_t characteristic() const { return p_; }
  /// Degree over the immediate base.
  unsigned degree() const { return degree_; }
  unsigned absolute_degree() const;
  u128 order() const { return order_; }
  u128 base_order() const;
  /// Null for a prime field (whose base is Z/p itself).
  const FieldPtr& base() const { return base_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  bool coded() const { return order_ <= kTableLimit; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(int64_t v) const;
  /// The class of t, i.e. the root of the modulus.
  FieldElem generator() const;
  /// Constant element with the given base code.
  FieldElem embed(uint32_t base_code) const;

  bool is_zero(const FieldElem& a) const;
  bool is_one(const FieldElem& a) const;
  /// True when the element lies in the base field (all higher coefficients 0).
  bool in_base(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem scale(uint32_t base_code, const FieldElem& a) const;
  /// Throws ZeroElement.
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, u128 e) const;
  FieldElem pow_signed(const FieldElem& a, int64_t e) const;
  /// a^(|base|^times); the base-field Frobenius iterated.
  FieldElem frobenius(const FieldElem& a, unsigned times = 1) const;

  /// Least j >= 1 with frobenius(a, j) == a: degree of a over the base.
  unsigned element_degree(const FieldElem& a) const;
  /// True when a lies in the unique subfield of degree `deg` over the base.
  bool in_subfield(const FieldElem& a, unsigned deg) const;

  /// Least t >= 1 with a^t = 1. Throws ZeroElement.
  u128 mul_order(const FieldElem& a) const;
  bool is_square(const FieldElem& a) const;
  /// A square root of a, or nullopt. Of the two roots r and -r, the one with
  /// the lexicographically smaller coefficient vector is returned.
  std::optional<FieldElem> sqrt(const FieldElem& a) const;

  /// Prime factors of order() - 1.
  std::vector<std::pair<u128, unsigned>> order_minus_one_factors() const;

  // Integer codes; only valid for coded() fields.
  uint32_t encode(const FieldElem& a) const;
  FieldElem decode(uint32_t code) const;
  uint32_t cadd(uint32_t a, uint32_t b) const;
  uint32_t csub(uint32_t a, uint32_t b) const;
  uint32_t cneg(uint32_t a) const;
  uint32_t cmul(uint32_t a, uint32_t b) const;
  uint32_t cinv(uint32_t a) const;
  uint32_t cpow(uint32_t a, uint64_t e) const;
  uint32_t cfrom_int(int64_t v) const;
  /// Code-level square root with the same root selection as sqrt().
  std::optional<uint32_t> csqrt(uint32_t a) const;

  /// Coefficients of a over F_p, flattening every level of the tower.
  std::vector<uint32_t> prime_coordinates(const FieldElem& a) const;
  std::vector<uint32_t> prime_coordinates_of_code(uint32_t code) const;

  std::string to_string(const FieldElem& a) const;
  /// Identity of the field: characteristic, degrees and moduli at every level.
  std::string describe() const;
  bool same_as(const Field& other) const;

 private:
  Field() = default;
  void build_tables();

  uint32_t badd(uint32_t a, uint32_t b) const;
  uint32_t bsub(uint32_t a, uint32_t b) const;
  uint32_t bmul(uint32_t a, uint32_t b) const;
  uint32_t binv(uint32_t a) const;
  uint32_t bneg(uint32_t a) const;
  FieldElem reduce(std::vector<uint32_t> product) const;
  FieldElem mul_slow(const FieldElem& a, const FieldElem& b) const;

  uint32_t p_ = 0;
  unsigned degree_ = 1;
  u128 order_ = 0;
  FieldPtr base_;
  std::vector<uint32_t> modulus_;
  // Tables for coded fields; code 0 is zero.
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> log_;
  std::vector<uint32_t> add_;
};

/// make_field: F_{p^m}. Throws NonPrimeCharacteristic or DegreeZero.
FieldPtr make_field(uint32_t p, unsigned m);
/// F_q for a prime power q. Throws InvalidArgument otherwise.
FieldPtr make_field_of_order(uint64_t q);

}  // namespace fqg
