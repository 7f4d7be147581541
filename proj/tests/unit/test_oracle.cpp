#include "fqg/oracle.hpp"

#include "fqg/wedderburn.hpp"
#include "helpers.hpp"

using namespace fqg;

namespace {
AlgebraPtr algebra(GroupKind k, uint64_t n, int64_t s, uint64_t q) {
  return GroupAlgebra::make(GroupPresentation::make(k, n, s, q), make_field_of_order(q));
}
Poly P3(const std::string& s) { return Poly::parse(make_field(3, 1), s); }
}  // namespace

TEST_CASE("multiplication in F_3 D_8") {
  auto A = algebra(GroupKind::Split, 4, 3, 3);
  CHECK(A->associative(1));
  const auto one = AlgebraElement::one(A);
  const auto x = AlgebraElement::basis(A, A->index(1, 0));
  const auto y = AlgebraElement::basis(A, A->index(0, 1));
  CHECK(x * one == x);
  CHECK(x * y == y * x.pow(3));
  CHECK(y * y == one);
  const auto e = AlgebraElement::from_polys(A, P3("x^2 - 1"), Poly::zero(A->field()));
  CHECK(e * e == e);
  CHECK(is_central(e));
  CHECK_ERRC(GroupAlgebra::make(A->group(), make_field(5, 1)), Errc::FieldMismatch);
  auto B = algebra(GroupKind::Split, 4, 3, 3);
  CHECK(x * AlgebraElement::basis(B, 0) == x);
  auto C = algebra(GroupKind::Split, 8, 3, 3);
  CHECK_ERRC(x * AlgebraElement::one(C), Errc::GroupMismatch);
}

TEST_CASE("quaternion relations") {
  auto A = algebra(GroupKind::NonSplit, 2, 3, 3);
  const auto x = AlgebraElement::basis(A, A->index(1, 0));
  const auto y = AlgebraElement::basis(A, A->index(0, 1));
  CHECK(y * y == x.pow(2));
  CHECK(x.pow(4) == AlgebraElement::one(A));
  CHECK(x * y == y * x.pow(3));
  CHECK(A->associative(7));
}

TEST_CASE("centers") {
  auto D8 = algebra(GroupKind::Split, 4, 3, 3);
  CHECK(center_basis(D8).size() == 5);
  CHECK(center_component_count(D8) == 5);
  auto Q8 = algebra(GroupKind::NonSplit, 2, 3, 3);
  CHECK(center_basis(Q8).size() == 5);
  CHECK(center_component_count(Q8) == 5);
  auto Ab = algebra(GroupKind::Split, 5, 1, 3);
  CHECK(center_basis(Ab).size() == 10);
  // x^5 - 1 = (x - 1)(x^4 + ...) over F_3 times F_3 C_2: four components.
  CHECK(center_component_count(Ab) == 4);
}

TEST_CASE("predicates") {
  auto A = algebra(GroupKind::Split, 4, 3, 3);
  const auto one = AlgebraElement::one(A);
  CHECK(is_idempotent(one));
  CHECK(is_central(one));
  const auto y = AlgebraElement::basis(A, A->index(0, 1));
  const auto h = (one + y).scaled(2);  // (1 + y)/2 with 1/2 = 2
  CHECK(is_idempotent(h));
  CHECK_FALSE(is_central(h));
  CHECK(are_orthogonal(h, one - h));
  CHECK(sums_to_one({h, one - h}));
  CHECK_FALSE(sums_to_one({}));
}

TEST_CASE("perlis-walker census") {
  auto g = GroupPresentation::make(GroupKind::NonSplit, 2, 3, 3);
  uint64_t total = 0;
  for (const auto& e : perlis_walker_census(g)) total += e.elements;
  CHECK(total == 2 * g.d());
  auto ab = GroupPresentation::make(GroupKind::Split, 3, 1, 7);
  uint64_t comps = 0;
  for (const auto& e : perlis_walker_census(ab)) comps += e.components;
  CHECK(comps == 6);
}

TEST_CASE("interpolation") {
  const auto g = GroupPresentation::make(GroupKind::Split, 4, 3, 3);
  const Decomposition dec = decompose(g);
  auto A = GroupAlgebra::make(g, dec.factorization.field);
  std::vector<std::vector<FieldMatrix>> images;
  for (const auto& c : dec.components) images.push_back(component_images(c, g));
  auto prescribe = [&](auto target) {
    std::vector<Prescription> ps;
    for (size_t k = 0; k < images.size(); ++k) ps.push_back({images[k], target(k)});
    return interpolate(A, ps);
  };
  const auto& E = dec.splitting().ext;
  CHECK(prescribe([&](size_t k) { return FieldMatrix::identity(E, dec.components[k].l); }) ==
        AlgebraElement::one(A));
  const auto e = prescribe([&](size_t k) {
    return k == 4 ? FieldMatrix::identity(E, 2) : FieldMatrix(E, dec.components[k].l);
  });
  CHECK(e == AlgebraElement::from_polys(A, P3("x^2 - 1"), Poly::zero(A->field())));
  const auto e11 = prescribe([&](size_t k) {
    FieldMatrix m(E, dec.components[k].l);
    if (k == 4) m.at(0, 0) = E->one();
    return m;
  });
  CHECK(is_idempotent(e11));
  CHECK_FALSE(is_central(e11));
  CHECK(e11 * e == e11);
  CHECK_ERRC(interpolate(A, {{images[4], FieldMatrix::scalar(E, 2, E->generator())}}),
             Errc::InconsistentPrescription);
}
