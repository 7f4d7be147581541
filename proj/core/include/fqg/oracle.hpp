#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fqg/ffield.hpp"
#include "fqg/groupspec.hpp"
#include "fqg/matrix.hpp"
#include "fqg/polyring.hpp"

namespace fqg {

/// F_q G with its group multiplication table. Element index of x^i y^j is
/// j*N + i, matching group_elements().
class GroupAlgebra {
 public:
  static std::shared_ptr<const GroupAlgebra> make(const GroupPresentation& g, const FieldPtr& Fq);

  const GroupPresentation& group() const { return g_; }
  const FieldPtr& field() const { return field_; }
  size_t order() const { return order_; }
  size_t index(int64_t i, unsigned j) const;
  /// Index of the product of two group elements.
  size_t mul(size_t a, size_t b) const { return table_[a * order_ + b]; }
  /// Exhaustive check for |G| <= 32, otherwise `samples` seeded random triples.
  bool associative(uint64_t seed, size_t samples = 4096) const;

 private:
  GroupAlgebra() = default;
  GroupPresentation g_;
  FieldPtr field_;
  size_t order_ = 0;
  std::vector<uint32_t> table_;
};

using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

/// Element of F_q G as a coefficient vector of field codes.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr algebra, std::vector<uint32_t> coeffs);

  static AlgebraElement zero(const AlgebraPtr& A);
  static AlgebraElement one(const AlgebraPtr& A);
  static AlgebraElement basis(const AlgebraPtr& A, size_t index);
  /// P(x) + Q(x) y, with exponents of x reduced mod N.
  static AlgebraElement from_polys(const AlgebraPtr& A, const Poly& P, const Poly& Q);

  const AlgebraPtr& algebra() const { return A_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  uint32_t coeff(size_t index) const { return c_[index]; }
  bool is_zero() const;
  /// The x-part P and y-part Q of P(x) + Q(x) y.
  Poly P() const;
  Poly Q() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  /// Throws GroupMismatch.
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(uint32_t c) const;
  AlgebraElement pow(uint64_t e) const;
  bool operator==(const AlgebraElement& o) const;

 private:
  void check_same(const AlgebraElement& o) const;
  AlgebraPtr A_;
  std::vector<uint32_t> c_;
};

std::vector<AlgebraElement> center_basis(const AlgebraPtr& A);
/// Number of simple components: dimension of the fixed space of z -> z^q on
/// the center.
size_t center_component_count(const AlgebraPtr& A);

bool is_idempotent(const AlgebraElement& e);
/// Commutes with x and y.
bool is_central(const AlgebraElement& e);
bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b);
bool sums_to_one(const std::vector<AlgebraElement>& es);

struct CensusEntry {
  uint64_t l = 1;
  /// Elements of order l in the abelianization.
  uint64_t elements = 0;
  /// ord_l(q): degree of each component over F_q.
  uint64_t degree = 1;
  /// elements / degree.
  uint64_t components = 0;
};

/// Element-order census of G/[G, G] = G/<x^d>, brute force.
std::vector<CensusEntry> perlis_walker_census(const GroupPresentation& g);

/// Requested image of the unknown element under one representation.
struct Prescription {
  /// Image of every group element, indexed as in the algebra.
  std::vector<FieldMatrix> images;
  FieldMatrix target;
};

/// The element u with rho_c(u) = target_c for every prescription c. All
/// matrices must live in one extension of F_q. Throws InconsistentPrescription.
AlgebraElement interpolate(const AlgebraPtr& A, const std::vector<Prescription>& prescriptions);

}  // namespace fqg
