#include "fqg/report_json.hpp"

#include <map>
#include <sstream>

namespace fqg {

Json field_elem_json(const Field& F, const FieldElem& a) { return F.prime_coordinates(a); }

Json matrix_json(const FieldMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.size(); ++j) row.push_back(field_elem_json(*m.field(), m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json factorization_json(const FactorizationReport& rep) {
  Json j;
  j["N"] = rep.N;
  j["q"] = rep.q;
  j["s"] = rep.s;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["t"] = rep.t;
  Json fs = Json::array();
  for (const auto& f : rep.factors) {
    Json e;
    e["coset"] = f.coset;
    e["poly"] = f.poly.to_string();
    e["degree"] = f.poly.degree();
    e["root_order"] = f.root_order;
    e["self_involutive"] = f.self_involutive;
    e["divides_xd"] = f.divides_xd;
    e["partner"] = f.partner;
    fs.push_back(e);
  }
  j["factors"] = fs;
  return j;
}

Json decomposition_json(const Decomposition& dec) {
  Json j;
  j["group"] = dec.group.to_string();
  j["q"] = dec.group.q();
  j["order"] = dec.group.order();
  j["splitting_field"] = dec.splitting().ext->describe();
  j["factorization"] = factorization_json(dec.factorization);
  Json comps = Json::array();
  std::map<std::pair<unsigned, unsigned>, unsigned> agg;
  for (const auto& c : dec.components) {
    Json e;
    e["l"] = c.l;
    e["m"] = c.m;
    e["source"] = std::string(source_name(c.source));
    e["factor"] = c.factor;
    e["partner"] = c.partner;
    e["sign"] = c.sign;
    e["construction"] = c.construction;
    e["case"] = c.case_tag;
    e["image_x"] = matrix_json(c.image_x);
    e["image_y"] = matrix_json(c.image_y);
    comps.push_back(e);
    agg[{c.l, c.m}] += c.multiplicity;
  }
  j["components"] = comps;
  Json a = Json::array();
  for (auto [k, v] : agg) a.push_back({{"l", k.first}, {"m", k.second}, {"count", v}});
  j["aggregate"] = a;
  if (!dec.abelian_case.empty()) j["abelian_case"] = dec.abelian_case;
  j["totals"] = {{"components", dec.component_count()},
                 {"dimension", dec.dimension()},
                 {"center_dimension", dec.center_dimension()}};
  return j;
}

Json idempotent_json(const Idempotent& e) {
  Json j;
  j["label"] = e.label;
  j["kind"] = std::string(idempotent_kind_name(e.kind));
  j["parent"] = e.parent;
  j["component"] = e.component;
  const AlgebraElement& u = e.element;
  const size_t N = u.algebra()->group().N();
  Json cs = Json::array();
  for (size_t k = 0; k < u.coeffs().size(); ++k) {
    if (u.coeff(k) == 0) continue;
    cs.push_back({{"power_of_x", k % N}, {"has_y", k >= N}, {"value", u.coeff(k)}});
  }
  j["coeffs"] = cs;
  j["vector"] = u.coeffs();
  return j;
}

Json idempotents_json(const Decomposition& dec, const IdempotentSet& set) {
  Json j;
  j["group"] = dec.group.to_string();
  j["q"] = dec.group.q();
  Json c = Json::array();
  for (const auto& e : set.central) c.push_back(idempotent_json(e));
  j["central"] = c;
  Json nc = Json::array();
  for (const auto& p : set.noncentral) {
    Json e;
    e["first"] = idempotent_json(p.first);
    e["second"] = idempotent_json(p.second);
    e["check"] = {{"case", p.check.case_tag},
                  {"chosen", p.check.chosen},
                  {"formula_available", p.check.formula_available},
                  {"formula_ok", p.check.formula_ok},
                  {"conditions_ok", p.check.conditions_ok},
                  {"norm_ok", p.check.norm_ok},
                  {"interpolation_ok", p.check.interpolation_ok},
                  {"maps_to_e11", p.check.maps_to_e11},
                  {"oracle_reproduces", p.check.oracle_reproduces}};
    nc.push_back(e);
  }
  j["noncentral"] = nc;
  Json un = Json::array();
  for (int i : set.unavailable) un.push_back(dec.factorization.factors[static_cast<size_t>(i)].poly.to_string());
  j["unavailable"] = un;
  return j;
}

Json instance_json(const InstanceReport& r) {
  Json j;
  j["group"] = r.group.empty() ? std::string(kind_name(r.kind)) + ":n=" + std::to_string(r.n) + ",s=" +
                                     std::to_string(r.s)
                               : r.group;
  j["q"] = r.q;
  j["passed"] = r.passed();
  if (!r.error.empty()) j["error"] = r.error;
  j["components"] = r.components;
  j["dimension"] = r.dimension;
  j["center_dimension"] = r.center_dimension;
  Json cs = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (c.informational) e["informational"] = true;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(e);
  }
  j["checks"] = cs;
  const NonCentralStats& s = r.noncentral;
  j["noncentral"] = {{"pairs", s.pairs},
                     {"formula_available", s.formula_available},
                     {"formula_ok", s.formula_ok},
                     {"conditions_ok", s.conditions_ok},
                     {"norm_ok", s.norm_ok},
                     {"interpolation_ok", s.interpolation_ok},
                     {"maps_to_e11", s.maps_to_e11},
                     {"oracle_reproduces", s.oracle_reproduces},
                     {"unavailable", s.unavailable}};
  return j;
}

Json battery_json(const std::vector<InstanceReport>& reports) {
  Json j;
  Json rs = Json::array();
  size_t failed = 0;
  for (const auto& r : reports) {
    failed += !r.passed();
    rs.push_back(instance_json(r));
  }
  j["instances"] = reports.size();
  j["failed"] = failed;
  j["reports"] = rs;
  return j;
}

std::string element_text(const AlgebraElement& u) {
  const size_t N = u.algebra()->group().N();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < u.coeffs().size(); ++k) {
    const uint32_t c = u.coeff(k);
    if (!c) continue;
    os << (first ? "" : " + ") << c;
    const size_t i = k % N;
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
    if (k >= N) os << "*y";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string factorization_text(const FactorizationReport& rep) {
  std::ostringstream os;
  os << "x^" << rep.N << " - 1 over F_" << rep.q << ": " << rep.factors.size() << " factors";
  if (rep.classified) os << ", s=" << rep.s << ", d=" << rep.d << ", r=" << rep.r << ", t=" << rep.t;
  os << "\n";
  for (size_t i = 0; i < rep.factors.size(); ++i) {
    const auto& f = rep.factors[i];
    os << "  [" << i << "] " << f.poly.to_string() << "  coset {";
    for (size_t k = 0; k < f.coset.size(); ++k) os << (k ? "," : "") << f.coset[k];
    os << "} order " << f.root_order;
    if (rep.classified) {
      if (f.divides_xd) os << "  divides x^d-1";
      if (f.self_involutive) {
        os << "  self-involutive";
      } else {
        os << "  partner [" << f.partner << "]";
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string decomposition_text(const Decomposition& dec) {
  std::ostringstream os;
  os << "F_" << dec.group.q() << "[" << dec.group.to_string() << "], |G| = " << dec.group.order() << "\n";
  os << factorization_text(dec.factorization);
  if (!dec.abelian_case.empty()) os << "abelian part: " << dec.abelian_case << "\n";
  os << "components:\n";
  for (size_t i = 0; i < dec.components.size(); ++i) {
    const auto& c = dec.components[i];
    os << "  (" << i << ") M_" << c.l << "(F_" << dec.group.q() << "^" << c.m << ")  " << source_name(c.source)
       << " factor [" << c.factor << "]";
    if (c.partner >= 0) os << "+[" << c.partner << "]";
    if (c.source == SourceKind::Abelian && c.sign != 0) os << " sign " << (c.sign > 0 ? "+" : "-");
    if (!c.construction.empty()) os << "  " << c.construction;
    if (!c.case_tag.empty()) os << " (" << c.case_tag << ")";
    os << "\n      x -> " << c.image_x.to_string() << "\n      y -> " << c.image_y.to_string() << "\n";
  }
  os << "total: " << dec.component_count() << " components, dimension " << dec.dimension()
     << ", center dimension " << dec.center_dimension() << "\n";
  return os.str();
}

std::string idempotents_text(const Decomposition& dec, const IdempotentSet& set) {
  std::ostringstream os;
  os << "central primitive idempotents of F_" << dec.group.q() << "[" << dec.group.to_string()
     << "]: " << set.central.size() << "\n";
  for (const auto& e : set.central) {
    os << "  " << e.label << " (component " << e.component << ")\n    = " << element_text(e.element) << "\n";
  }
  for (const auto& p : set.noncentral) {
    os << "split of " << p.first.parent << " [" << p.check.case_tag << ", " << p.check.chosen << "]\n";
    os << "  " << p.first.label << " = " << element_text(p.first.element) << "\n";
    os << "  " << p.second.label << " = " << element_text(p.second.element) << "\n";
    os << "  formula " << (p.check.formula_available ? (p.check.formula_ok ? "ok" : "fails") : "none")
       << ", conditions " << (p.check.conditions_ok ? "ok" : "fail") << ", norm "
       << (p.check.norm_ok ? "ok" : "-") << ", interpolation "
       << (p.check.interpolation_ok ? "ok" : "fails") << ", maps to E11 " << (p.check.maps_to_e11 ? "yes" : "no")
       << "\n";
  }
  for (int i : set.unavailable) {
    os << "no closed formula for " << dec.factorization.factors[static_cast<size_t>(i)].poly.to_string()
       << " (use --crt-fallback)\n";
  }
  return os.str();
}

std::string instance_text(const InstanceReport& r) {
  std::ostringstream os;
  os << r.group << " q=" << r.q << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  if (!r.error.empty()) os << "  error: " << r.error << "\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.passed ? "ok  " : (c.informational ? "note" : "FAIL")) << " " << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string battery_text(const std::vector<InstanceReport>& reports) {
  std::map<std::string, std::pair<size_t, size_t>> tally;
  size_t failed = 0;
  for (const auto& r : reports) {
    failed += !r.passed();
    for (const auto& c : r.checks) {
      auto& t = tally[c.name];
      ++t.first;
      if (!c.passed) ++t.second;
    }
  }
  std::ostringstream os;
  os << "instances: " << reports.size() << ", failed: " << failed << "\n";
  for (const auto& [name, t] : tally) {
    os << "  " << name << ": " << t.first - t.second << "/" << t.first << " passed\n";
  }
  for (const auto& r : reports) {
    if (!r.passed()) os << instance_text(r);
  }
  return os.str();
}

}  // namespace fqg
