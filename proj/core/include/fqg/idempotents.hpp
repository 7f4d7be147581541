#pragma once

#include <string>
#include <vector>

#include "fqg/oracle.hpp"
#include "fqg/polyring.hpp"
#include "fqg/wedderburn.hpp"

namespace fqg {

enum class IdempotentKind { CentralPrimitive, NonCentralPrimitive };

std::string_view idempotent_kind_name(IdempotentKind k);

struct Idempotent {
  std::string label;
  AlgebraElement element;
  IdempotentKind kind = IdempotentKind::CentralPrimitive;
  /// Label of the central idempotent this one splits; empty for central ones.
  std::string parent;
  /// Index of the component in the decomposition.
  int component = -1;
};

/// How a non-central pair was obtained. The case closed formula is tried
/// first, then the interpolation conditions on P(xi), Q(xi), then a Q(xi)
/// solving the norm equation, then an exact matrix-unit interpolation in the
/// component's own coordinates.
struct FormulaCheck {
  int factor = -1;
  std::string case_tag;
  bool formula_available = false;
  bool formula_ok = false;
  /// The case values of P(xi), Q(xi) give a valid pair by interpolation.
  bool conditions_ok = false;
  /// Q(xi) = w / (xi - xi^s) with w * w^sigma = -xi^(s+1) gives a valid pair.
  bool norm_ok = false;
  bool interpolation_ok = false;
  /// The chosen e1 maps to the matrix unit E11 under the stored images.
  bool maps_to_e11 = false;
  /// Interpolating the image of the chosen e1 gives back e1 exactly.
  bool oracle_reproduces = false;
  /// "formula", "conditions", "norm" or "interpolation".
  std::string chosen;
};

struct NonCentralPair {
  Idempotent first;
  Idempotent second;
  FormulaCheck check;
};

struct IdempotentSet {
  std::vector<Idempotent> central;
  std::vector<NonCentralPair> noncentral;
  /// Factors whose splitting has no formula and was not interpolated.
  std::vector<int> unavailable;
};

/// e_f mod x^N - 1 from the closed form -((f*)')* / N * (x^N - 1)/f, asserted
/// equal to the extended-Euclid form. Throws NotIrreducibleFactor.
Poly cyclic_idempotent(const Poly& f, size_t N);
/// The extended-Euclid form g * (g^-1 mod f), g = (x^N - 1)/f.
Poly cyclic_idempotent_euclid(const Poly& f, size_t N);

IdempotentSet central_idempotents_split(const Decomposition& dec, const AlgebraPtr& A);
IdempotentSet central_idempotents_nonsplit(const Decomposition& dec, const AlgebraPtr& A);
IdempotentSet central_idempotents(const Decomposition& dec, const AlgebraPtr& A);

/// Throws PreconditionFactor.
NonCentralPair noncentral_split(const Decomposition& dec, const AlgebraPtr& A, size_t factor);
/// Throws PreconditionFactor, or CaseUnavailable for the subcase with no
/// closed formula unless `interpolation_fallback` is set.
NonCentralPair noncentral_nonsplit(const Decomposition& dec, const AlgebraPtr& A, size_t factor,
                                   bool interpolation_fallback = false);

/// Central set plus every available non-central splitting.
IdempotentSet all_idempotents(const Decomposition& dec, const AlgebraPtr& A, bool include_noncentral,
                              bool interpolation_fallback);

}  // namespace fqg
