#include "fqg/idempotents.hpp"

#include "helpers.hpp"

using namespace fqg;

namespace {
struct Inst {
  Decomposition dec;
  AlgebraPtr A;
};
Inst inst(GroupKind k, uint64_t n, int64_t s, uint64_t q) {
  auto g = GroupPresentation::make(k, n, s, q);
  Decomposition d = decompose(g);
  auto A = GroupAlgebra::make(g, d.factorization.field);
  return {std::move(d), A};
}
Poly P3(const std::string& s) { return Poly::parse(make_field(3, 1), s); }
int index_of(const Decomposition& d, const std::string& poly) {
  for (size_t i = 0; i < d.factorization.factors.size(); ++i)
    if (d.factorization.factors[i].poly.to_string() == poly) return static_cast<int>(i);
  return -1;
}
void check_pair(const NonCentralPair& p, const AlgebraElement& parent) {
  const auto& e1 = p.first.element;
  const auto& e2 = p.second.element;
  CHECK(is_idempotent(e1));
  CHECK(is_idempotent(e2));
  CHECK(are_orthogonal(e1, e2));
  CHECK(e1 + e2 == parent);
  CHECK_FALSE(is_central(e1));
  CHECK(p.check.oracle_reproduces);
  CHECK(p.check.interpolation_ok);
}
}  // namespace

TEST_CASE("cyclic idempotents") {
  CHECK(cyclic_idempotent(P3("x - 1"), 2) == P3("2 + 2*x"));
  CHECK(cyclic_idempotent(P3("x^2 + 1"), 4) == P3("x^2 - 1"));
  CHECK_ERRC(cyclic_idempotent(P3("x^2 - 1"), 4), Errc::NotIrreducibleFactor);
  CHECK_ERRC(cyclic_idempotent(P3("x^2 + x + 2"), 4), Errc::NotIrreducibleFactor);
  // deg f divisible by the characteristic
  auto F3 = make_field(3, 1);
  for (uint64_t N : {8, 13, 26}) {
    Poly sum = Poly::zero(F3);
    for (const auto& f : factor_xn_minus_1(N, F3).factors) {
      const Poly e = cyclic_idempotent(f.poly, N);
      CHECK(e == cyclic_idempotent_euclid(f.poly, N));
      CHECK((e * e) % Poly::x_pow_minus_one(F3, N) == e);
      sum = sum + e;
    }
    CHECK(sum == Poly::constant(F3, 1));
  }
}

TEST_CASE("central idempotents of D_8 and Q_8") {
  for (auto k : {GroupKind::Split, GroupKind::NonSplit}) {
    auto [d, A] = inst(k, k == GroupKind::Split ? 4 : 2, 3, 3);
    const auto set = central_idempotents(d, A);
    CHECK(set.central.size() == 5);
    std::vector<AlgebraElement> es;
    for (const auto& e : set.central) {
      CHECK(is_idempotent(e.element));
      CHECK(is_central(e.element));
      es.push_back(e.element);
    }
    CHECK(sums_to_one(es));
    CHECK(set.central.back().element == AlgebraElement::from_polys(A, P3("x^2 - 1"), Poly::zero(A->field())));
  }
  auto [d, A] = inst(GroupKind::Split, 4, 3, 3);
  CHECK_ERRC(central_idempotents_nonsplit(d, A), Errc::InvalidArgument);
  CHECK(central_idempotents_split(d, A).central.size() == 5);
}

TEST_CASE("pairs and abelian labels") {
  auto [d, A] = inst(GroupKind::Split, 8, 5, 3);
  const auto set = central_idempotents(d, A);
  bool pair_seen = false;
  for (const auto& e : set.central) {
    if (d.components[e.component].source == SourceKind::Pair) {
      pair_seen = true;
      CHECK(is_central(e.element));
    }
  }
  CHECK(pair_seen);
  auto [d5, A5] = inst(GroupKind::NonSplit, 2, 3, 5);
  const auto s5 = central_idempotents(d5, A5);
  CHECK(s5.central.size() == 5);
}

TEST_CASE("split non-central idempotents on D_8") {
  auto [d, A] = inst(GroupKind::Split, 4, 3, 3);
  const int f = index_of(d, "1 + 1*x^2");
  REQUIRE(f >= 0);
  const auto p = noncentral_split(d, A, static_cast<size_t>(f));
  CHECK(p.check.chosen == "formula");
  CHECK(p.check.maps_to_e11);
  const auto ef = AlgebraElement::from_polys(A, P3("x^2 - 1"), Poly::zero(A->field()));
  // (x^2 - 1)(2 - y)
  CHECK(p.first.element == AlgebraElement::from_polys(A, P3("x^2 - 1") * P3("2"), P3("x^2 - 1") * P3("-1")));
  check_pair(p, ef);
  CHECK_ERRC(noncentral_split(d, A, static_cast<size_t>(index_of(d, "2 + 1*x"))), Errc::PreconditionFactor);
}

TEST_CASE("non-split non-central cases") {
  struct Case {
    uint64_t n;
    int64_t s;
    uint64_t q;
    const char* tag;
  };
  for (const Case& c : {Case{2, 3, 3, "q=3 mod 4, v2(n)<=v2(q+1)"}, Case{6, 5, 5, "q=1 mod 4"},
                        Case{8, 9, 3, "q=3 mod 4, v2(n)>v2(q+1), s=1 mod 4"}}) {
    auto [d, A] = inst(GroupKind::NonSplit, c.n, c.s, c.q);
    const auto set = all_idempotents(d, A, true, false);
    bool seen = false;
    for (const auto& p : set.noncentral) {
      check_pair(p, set.central.at(static_cast<size_t>(p.first.component)).element);
      if (p.check.case_tag == c.tag) seen = true;
      CHECK(p.check.chosen != "interpolation");
    }
    CHECK_MESSAGE(seen, std::string(c.tag));
  }
}

TEST_CASE("Q_8 third case: closed form versus the norm route") {
  auto [d, A] = inst(GroupKind::NonSplit, 2, 3, 3);
  const int f = index_of(d, "1 + 1*x^2");
  const auto p = noncentral_nonsplit(d, A, static_cast<size_t>(f));
  CHECK(p.check.formula_available);
  CHECK_FALSE(p.check.formula_ok);
  CHECK_FALSE(p.check.conditions_ok);
  CHECK(p.check.norm_ok);
  CHECK(p.check.chosen == "norm");
}

TEST_CASE("subcase without a formula") {
  // q = 3, v2(8) = 3 > v2(4) = 2, s = 7 = 3 mod 4
  auto [d, A] = inst(GroupKind::NonSplit, 8, 7, 3);
  const int f = index_of(d, "2 + 1*x^2 + 1*x^4");
  REQUIRE(f >= 0);
  CHECK_ERRC(noncentral_nonsplit(d, A, static_cast<size_t>(f)), Errc::CaseUnavailable);
  // Behind the flag the factor precondition applies: no factor of x^n + 1 is
  // self-involutive in this subcase.
  CHECK_ERRC(noncentral_nonsplit(d, A, static_cast<size_t>(f), true), Errc::PreconditionFactor);
  for (const auto& fac : d.factorization.factors) {
    if (d.group.n() % fac.root_order != 0) CHECK_FALSE(fac.self_involutive);
  }
}
