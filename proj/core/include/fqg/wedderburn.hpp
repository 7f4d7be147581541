#pragma once

#include <cstdint>
#include <string>
#include <optional>
#include <vector>

#include "fqg/cycfactor.hpp"
#include "fqg/groupspec.hpp"
#include "fqg/matrix.hpp"
#include "fqg/oracle.hpp"

namespace fqg {

enum class SourceKind { Abelian, SelfInvolutive, Pair };

std::string_view source_name(SourceKind k);

/// One simple summand M_l(F_{q^m}) with generator images over the splitting
/// field. Entries of the images lie in its degree-m subfield.
struct WedderburnComponent {
  unsigned l = 1;
  unsigned m = 1;
  unsigned multiplicity = 1;
  SourceKind source = SourceKind::Abelian;
  /// Index of the defining factor in the factorization report.
  int factor = -1;
  /// Partner factor for pairs, otherwise -1.
  int partner = -1;
  /// Abelian components: +1 or -1 for y -> +c or -c, 0 when both signs fuse
  /// into one component of doubled degree.
  int sign = 0;
  /// Which family of images was used, e.g. "sigma_tau" or "eta_omega".
  std::string construction;
  /// Case label of the construction ("q=3 mod 4, v2(n)<=v2(q+1)", ...).
  std::string case_tag;
  FieldMatrix image_x;
  FieldMatrix image_y;
};

struct Decomposition {
  GroupPresentation group;
  FactorizationReport factorization;
  std::vector<WedderburnComponent> components;
  /// Case label of the abelian part ("split", "s=1 mod 4", ...).
  std::string abelian_case;
  /// Abelian component degrees (m, count) predicted by the three-case formula
  /// for the non-split abelianization; empty for split groups.
  std::vector<std::pair<uint64_t, uint64_t>> abelian_formula;
  bool abelian_formula_agrees = true;

  size_t component_count() const { return components.size(); }
  /// Sum of l^2 m.
  uint64_t dimension() const;
  /// Sum of m, the dimension of the center.
  uint64_t center_dimension() const;
  const SplittingField& splitting() const { return *factorization.splitting; }
};

/// Throws on invalid presentations (see GroupPresentation::make).
Decomposition decompose(const GroupPresentation& g);
Decomposition decompose_split(const GroupPresentation& g);
Decomposition decompose_nonsplit(const GroupPresentation& g);

/// Group relations for the images and membership of every entry in the
/// degree-m subfield.
bool component_matrices_check(const WedderburnComponent& c, const GroupPresentation& g);

/// Image of every group element x^i y^j, indexed as in the group algebra.
std::vector<FieldMatrix> component_images(const WedderburnComponent& c, const GroupPresentation& g);
/// rho_c(u) for an element of F_q G.
FieldMatrix evaluate(const std::vector<FieldMatrix>& images, const AlgebraElement& u);

/// Some b in F_q[x] of degree < deg(f) with b(root) = target, or nullopt when
/// target is not in F_q(root).
std::optional<Poly> express_in_root(const SplittingField& sf, const FieldElem& root, unsigned degree,
                                    const FieldElem& target);

}  // namespace fqg
