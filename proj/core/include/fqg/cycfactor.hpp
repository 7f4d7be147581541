#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "fqg/ffield.hpp"
#include "fqg/polyring.hpp"

namespace fqg {

/// F_q together with an extension containing a primitive L-th root of unity
/// zeta, where L = lcm(N, 4). alpha = zeta^(L/N) generates the N-th roots of
/// unity and beta = zeta^(L/4) squares to -1.
struct SplittingField {
  FieldPtr base;
  FieldPtr ext;
  uint64_t N = 0;
  uint64_t L = 0;
  FieldElem zeta;
  FieldElem alpha;
  FieldElem beta;

  /// alpha^k for any integer k.
  FieldElem alpha_pow(int64_t k) const;
  /// The base-field element with the given code, inside ext.
  FieldElem lift(uint32_t base_code) const { return ext->embed(base_code); }
  /// Degree over F_q of the subfield generated by the given elements.
  unsigned generated_degree(const std::vector<FieldElem>& elems) const;
};

std::shared_ptr<const SplittingField> make_splitting_field(const FieldPtr& Fq, uint64_t N);

/// q-cyclotomic cosets of Z_N, each sorted, ordered by least element.
std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t N, uint64_t q);

struct CosetFactor {
  std::vector<uint64_t> coset;
  Poly poly;
  /// Multiplicative order of the roots of poly.
  uint64_t root_order = 1;
  bool self_involutive = false;
  bool divides_xd = false;
  /// Index of the s-involution partner in the report, or -1.
  int partner = -1;
};

struct FactorizationReport {
  uint64_t N = 0;
  uint64_t q = 0;
  /// Residue of s mod N; 0 before classification.
  uint64_t s = 0;
  uint64_t d = 0;
  bool classified = false;
  std::vector<CosetFactor> factors;
  /// Number of self-involutive factors, and of pairs f != f^{*s}.
  unsigned r = 0;
  unsigned t = 0;
  FieldPtr field;
  std::shared_ptr<const SplittingField> splitting;

  /// Product of every listed factor; equals x^N - 1.
  Poly product() const;
};

/// Distinct monic irreducible factors of x^N - 1 over Fq, sorted by degree and
/// then coefficient string. Throws NotCoprimeNQ.
FactorizationReport factor_xn_minus_1(uint64_t N, const FieldPtr& Fq);

/// Flags every factor for s. Pairs are moved next to each other with the
/// lexicographically smaller polynomial first. Throws SInvalid.
FactorizationReport classify(FactorizationReport report, int64_t s);

/// The residue test: s == q^(deg/2) mod root_order.
bool remark_self_involutive(const CosetFactor& f, uint64_t q, uint64_t s);

/// (deg F_q(xi), deg F_q(xi + xi^s, xi^(s+1))) for a root xi of the factor.
/// Throws NotSelfInvolutive unless the factor is self-involutive and does not
/// divide x^d - 1.
std::pair<unsigned, unsigned> tower_degrees(const FactorizationReport& report, size_t index);

/// Step degrees [F_q(a^(2^j)) : F_q(a^(2^(j+1)))] for j = 0 .. v2(n) - 1 and a
/// primitive 2n-th root of unity a, computed from coset sizes.
/// Throws BadCongruence unless n is even and q == 3 mod 4.
std::vector<unsigned> two_adic_tower(uint64_t n, uint64_t q);
/// The same sequence as predicted by the 2-adic case analysis.
std::vector<unsigned> two_adic_tower_predicted(uint64_t n, uint64_t q);

}  // namespace fqg
