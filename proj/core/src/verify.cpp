#include "fqg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "fqg/cycfactor.hpp"
#include "fqg/numtheory.hpp"
#include "fqg/oracle.hpp"

namespace fqg {

bool InstanceReport::passed() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.informational; });
}

const Check* InstanceReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class Checks {
 public:
  explicit Checks(std::vector<Check>& out) : out_(out) {}

  void add(const std::string& name, bool ok, const std::string& detail = "", bool informational = false) {
    out_.push_back({name, ok, informational, detail});
  }

 private:
  std::vector<Check>& out_;
};

std::string counts_to_string(const std::map<uint64_t, uint64_t>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [k, v] : m) {
    os << (first ? "" : ", ") << "m=" << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// The map F_qG -> prod M_l(F_q^M) is injective iff the stacked coordinate
// system of all images has full column rank.
bool faithful(const std::vector<std::vector<FieldMatrix>>& images, const AlgebraPtr& A) {
  const size_t n = A->order();
  size_t rows = 0;
  for (const auto& im : images) rows += im.front().size() * im.front().size() * im.front().field()->degree();
  CodeMatrix M(A->field(), rows, n);
  size_t row = 0;
  for (const auto& im : images) {
    const size_t l = im.front().size();
    const unsigned deg = im.front().field()->degree();
    for (size_t a = 0; a < l; ++a)
      for (size_t b = 0; b < l; ++b)
        for (unsigned k = 0; k < deg; ++k, ++row)
          for (size_t g = 0; g < n; ++g) M.at(row, g) = im[g].at(a, b).coeffs[k];
  }
  return M.rank() == n;
}

void tower_checks(Checks& ck, const Decomposition& dec) {
  const GroupPresentation& g = dec.group;
  const FactorizationReport& rep = dec.factorization;
  const SplittingField& sf = *rep.splitting;
  const Field& E = *sf.ext;
  bool lemma_ok = true, corollary_ok = true;
  size_t eligible = 0, corollary_cases = 0;
  std::string detail, corollary_detail;
  const unsigned vn = padic_valuation(2, static_cast<int64_t>(g.n()));
  const unsigned vq = padic_valuation(2, static_cast<int64_t>(g.q() + 1));
  for (size_t i = 0; i < rep.factors.size(); ++i) {
    const CosetFactor& f = rep.factors[i];
    if (!f.self_involutive || f.divides_xd) continue;
    ++eligible;
    const auto [full, half] = tower_degrees(rep, i);
    if (full != 2 * half) {
      lemma_ok = false;
      detail += " " + f.poly.to_string() + ": " + std::to_string(full) + "/" + std::to_string(half);
    }
    if (g.kind() == GroupKind::NonSplit && g.q() % 4 == 3 && g.n() % 2 == 0 && g.n() % f.root_order != 0) {
      ++corollary_cases;
      const FieldElem xi = sf.alpha_pow(static_cast<int64_t>(f.coset.front()));
      const uint64_t e = vn > vq ? 2 : (uint64_t{1} << vn);
      const unsigned sub = sf.generated_degree({E.pow(xi, e)});
      if (sub != half) {
        corollary_ok = false;
        corollary_detail += "; " + f.poly.to_string() + ": fixed field degree " + std::to_string(half) +
                            " vs degree of xi^" + std::to_string(e) + " " + std::to_string(sub);
      }
    }
  }
  ck.add("tower_index_two", lemma_ok, std::to_string(eligible) + " factors" + detail);
  if (corollary_cases) ck.add("tower_corollary", corollary_ok, std::to_string(corollary_cases) + " factors" + corollary_detail);
  if (g.q() % 4 == 3 && g.n() % 2 == 0) {
    const auto actual = two_adic_tower(g.n(), g.q());
    const auto predicted = two_adic_tower_predicted(g.n(), g.q());
    auto seq = [](const std::vector<unsigned>& v) {
      std::string t = "[";
      for (size_t i = 0; i < v.size(); ++i) t += (i ? "," : "") + std::to_string(v[i]);
      return t + "]";
    };
    ck.add("two_adic_tower", actual == predicted, "step degrees " + seq(actual) + " vs claimed " + seq(predicted));
  }
}

void remark_check(Checks& ck, const FactorizationReport& rep) {
  size_t tested = 0;
  bool ok = true;
  for (const auto& f : rep.factors) {
    if (f.poly.degree() % 2 != 0 || f.divides_xd) continue;
    ++tested;
    if (remark_self_involutive(f, rep.q, rep.s) != f.self_involutive) ok = false;
  }
  ck.add("remark", ok, std::to_string(tested) + " even-degree factors");
}

void perlis_walker_check(Checks& ck, const Decomposition& dec) {
  std::map<uint64_t, uint64_t> census, actual;
  for (const auto& e : perlis_walker_census(dec.group)) census[e.degree] += e.components;
  for (const auto& c : dec.components) {
    if (c.source == SourceKind::Abelian) ++actual[c.m];
  }
  ck.add("perlis_walker", census == actual, counts_to_string(actual) + " vs census " + counts_to_string(census));
}

void idempotent_checks(Checks& ck, InstanceReport& out, const Decomposition& dec, const AlgebraPtr& A,
                       const std::vector<std::vector<FieldMatrix>>& images, const VerifyOptions& opts) {
  const IdempotentSet set = all_idempotents(dec, A, opts.include_noncentral, opts.interpolation_fallback);
  std::vector<AlgebraElement> central;
  bool each = true, images_ok = true;
  for (const auto& e : set.central) {
    central.push_back(e.element);
    if (!is_idempotent(e.element) || !is_central(e.element)) each = false;
    for (size_t k = 0; k < images.size(); ++k) {
      const FieldMatrix img = evaluate(images[k], e.element);
      const size_t l = images[k].front().size();
      const bool want_one = static_cast<int>(k) == e.component;
      if (!(img == (want_one ? FieldMatrix::identity(img.field(), l) : FieldMatrix(img.field(), l)))) {
        images_ok = false;
      }
    }
  }
  bool orth = true;
  for (size_t i = 0; i < central.size(); ++i)
    for (size_t j = i + 1; j < central.size(); ++j)
      if (!are_orthogonal(central[i], central[j])) orth = false;
  const bool complete = each && orth && sums_to_one(central) && central.size() == dec.component_count();
  ck.add("central_idempotents", complete,
         std::to_string(central.size()) + " idempotents, " + std::to_string(dec.component_count()) + " components");
  ck.add("central_images", images_ok);

  if (!opts.include_noncentral) return;
  NonCentralStats& st = out.noncentral;
  st.unavailable = set.unavailable.size();
  bool pairs_ok = true;
  std::string detail;
  for (const auto& p : set.noncentral) {
    ++st.pairs;
    const FormulaCheck& c = p.check;
    st.formula_available += c.formula_available;
    st.formula_ok += c.formula_ok;
    st.conditions_ok += c.conditions_ok;
    st.norm_ok += c.norm_ok;
    st.interpolation_ok += c.interpolation_ok;
    st.maps_to_e11 += c.maps_to_e11;
    st.oracle_reproduces += c.oracle_reproduces;
    const AlgebraElement& e1 = p.first.element;
    const AlgebraElement& e2 = p.second.element;
    const AlgebraElement& parent = central.at(static_cast<size_t>(p.first.component));
    const bool ok = is_idempotent(e1) && is_idempotent(e2) && are_orthogonal(e1, e2) && e1 + e2 == parent &&
                    !is_central(e1) && !is_central(e2) && c.oracle_reproduces && c.interpolation_ok &&
                    (c.chosen != "interpolation" || !c.formula_available);
    if (!ok) {
      pairs_ok = false;
      detail += " " + p.first.parent + "[" + c.case_tag + ", " + c.chosen + "]";
    }
  }
  ck.add("noncentral", pairs_ok, std::to_string(st.pairs) + " pairs" + detail);
}

}  // namespace

InstanceReport verify_instance(const GroupPresentation& g, const VerifyOptions& opts) {
  InstanceReport out;
  out.kind = g.kind();
  out.n = g.n();
  out.s = static_cast<int64_t>(g.s());
  out.q = g.q();
  out.group = g.to_string();
  Checks ck(out.checks);
  try {
    const Decomposition dec = decompose(g);
    const AlgebraPtr A = GroupAlgebra::make(g, dec.factorization.field);
    out.components = dec.component_count();
    out.dimension = dec.dimension();

    ck.add("associativity", A->associative(opts.seed, opts.associativity_samples));
    ck.add("dimension", dec.dimension() == g.order(),
           std::to_string(dec.dimension()) + " vs " + std::to_string(g.order()));

    const size_t center_dim = center_basis(A).size();
    const size_t center_components = center_component_count(A);
    out.center_dimension = center_dim;
    ck.add("center", dec.component_count() == center_components && dec.center_dimension() == center_dim,
           "components " + std::to_string(dec.component_count()) + " vs " + std::to_string(center_components) +
               ", sum m " + std::to_string(dec.center_dimension()) + " vs " + std::to_string(center_dim));

    bool images_ok = true;
    std::vector<std::vector<FieldMatrix>> images;
    for (const auto& c : dec.components) {
      if (!component_matrices_check(c, g)) images_ok = false;
      images.push_back(component_images(c, g));
    }
    ck.add("component_images", images_ok);
    ck.add("faithful", faithful(images, A));

    bool cyclic_ok = true;
    for (const auto& f : dec.factorization.factors) {
      if (!(cyclic_idempotent(f.poly, g.N()) == cyclic_idempotent_euclid(f.poly, g.N()))) cyclic_ok = false;
    }
    ck.add("cyclic_idempotent", cyclic_ok);

    idempotent_checks(ck, out, dec, A, images, opts);
    tower_checks(ck, dec);
    perlis_walker_check(ck, dec);
    remark_check(ck, dec.factorization);
    if (!dec.abelian_formula.empty()) {
      ck.add("abelian_formula", dec.abelian_formula_agrees, dec.abelian_case, true);
    }
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<BatteryKey> battery_instances(const BatteryFilter& filter) {
  std::vector<uint64_t> qs = filter.qs;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<BatteryKey> out;
  for (uint64_t q : qs) {
    if (filter.q_mod4 && q % 4 != *filter.q_mod4) continue;
    if (!prime_power(q) || q % 2 == 0) continue;
    for (GroupKind kind : {GroupKind::Split, GroupKind::NonSplit}) {
      if (filter.kind && *filter.kind != kind) continue;
      for (uint64_t n = 1; n <= filter.max_n; ++n) {
        const uint64_t N = kind == GroupKind::Split ? n : 2 * n;
        if (std::gcd(2 * N, q) != 1) continue;
        for (uint64_t s = 1; s <= N; ++s) {
          if (s * s % N != 1 % N) continue;
          if (filter.nonabelian_only && s % N == 1 % N) continue;
          out.push_back({kind, n, static_cast<int64_t>(s), q});
        }
      }
    }
  }
  return out;
}

std::vector<InstanceReport> run_battery(const std::vector<BatteryKey>& keys, const VerifyOptions& opts,
                                        unsigned threads) {
  std::vector<InstanceReport> out(keys.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<size_t>(1, keys.size()));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < keys.size(); i = next++) {
      const BatteryKey& k = keys[i];
      try {
        out[i] = verify_instance(GroupPresentation::make(k.kind, k.n, k.s, k.q), opts);
      } catch (const Error& e) {
        out[i].kind = k.kind;
        out[i].n = k.n;
        out[i].s = k.s;
        out[i].q = k.q;
        out[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

LteResult lte_check(uint64_t max_a, uint64_t max_k, const std::vector<uint64_t>& primes) {
  LteResult r;
  for (uint64_t p : primes) {
    for (uint64_t a = 2; a <= max_a; ++a) {
      for (uint64_t k = 1; k <= max_k; ++k) {
        const u128 ak = checked_pow(a, static_cast<unsigned>(k)) - 1;
        const unsigned lhs = padic_valuation(p, ak);
        unsigned rhs;
        if (p == 2) {
          if (a % 2 == 0) continue;
          rhs = k % 2 ? padic_valuation(2, static_cast<int64_t>(a - 1))
                      : padic_valuation(2, static_cast<int64_t>(a * a - 1)) +
                            padic_valuation(2, static_cast<int64_t>(k)) - 1;
        } else {
          if ((a - 1) % p != 0) continue;
          rhs = padic_valuation(p, static_cast<int64_t>(a - 1)) + padic_valuation(p, static_cast<int64_t>(k));
        }
        ++r.checked;
        if (lhs != rhs) {
          r.failures.push_back("p=" + std::to_string(p) + " a=" + std::to_string(a) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return r;
}

}  // namespace fqg
