#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fqg/cycfactor.hpp"
#include "fqg/idempotents.hpp"
#include "fqg/verify.hpp"
#include "fqg/wedderburn.hpp"

namespace fqg {

using Json = nlohmann::ordered_json;

/// Field elements as coefficient vectors over F_p.
Json field_elem_json(const Field& F, const FieldElem& a);
Json matrix_json(const FieldMatrix& m);

/// {N, q, s, d, r, t, factors: [{coset, poly, self_involutive, divides_xd, partner}]}
Json factorization_json(const FactorizationReport& rep);
/// {group, factorization, components: [{l, m, source, ...}], aggregate, totals}
Json decomposition_json(const Decomposition& dec);
/// {label, kind, parent, coeffs: [{power_of_x, has_y, value}], vector}
Json idempotent_json(const Idempotent& e);
Json idempotents_json(const Decomposition& dec, const IdempotentSet& set);
Json instance_json(const InstanceReport& r);
Json battery_json(const std::vector<InstanceReport>& reports);

std::string factorization_text(const FactorizationReport& rep);
std::string decomposition_text(const Decomposition& dec);
std::string idempotents_text(const Decomposition& dec, const IdempotentSet& set);
std::string instance_text(const InstanceReport& r);
/// Per-check pass/fail table followed by failing instances.
std::string battery_text(const std::vector<InstanceReport>& reports);

/// The element as a sum of c*x^i and c*x^i*y terms with F_q codes.
std::string element_text(const AlgebraElement& u);

}  // namespace fqg
