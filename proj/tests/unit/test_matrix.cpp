#include "fqg/matrix.hpp"

#include "helpers.hpp"

using namespace fqg;

TEST_CASE("code matrix elimination") {
  auto F5 = make_field(5, 1);
  CodeMatrix M(F5, 3, 3);
  const uint32_t v[3][3] = {{1, 2, 3}, {0, 1, 4}, {2, 0, 1}};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) M.at(i, j) = v[i][j];
  CHECK(M.rank() == 3);
  auto x = M.solve({1, 0, 0});
  REQUIRE(x.has_value());
  for (size_t i = 0; i < 3; ++i) {
    uint32_t acc = 0;
    for (size_t j = 0; j < 3; ++j) acc = F5->cadd(acc, F5->cmul(v[i][j], (*x)[j]));
    CHECK(acc == (i == 0 ? 1u : 0u));
  }
  CodeMatrix S(F5, 2, 3);
  S.at(0, 0) = 1;
  S.at(0, 1) = 2;
  S.at(1, 0) = 2;
  S.at(1, 1) = 4;
  CHECK(S.rank() == 1);
  CHECK(S.nullspace().size() == 2);
  CHECK_FALSE(S.solve({1, 1}).has_value());
}

TEST_CASE("field matrices") {
  auto F9 = make_field(3, 2);
  const FieldElem i = F9->generator();
  FieldMatrix X(F9, {{F9->zero(), F9->from_int(-1)}, {F9->one(), F9->zero()}});
  CHECK(X.pow(4) == FieldMatrix::identity(F9, 2));
  CHECK((X * X).is_zero() == false);
  CHECK((X * X + FieldMatrix::identity(F9, 2)).is_zero());
  FieldMatrix D(F9, {{i, F9->zero()}, {F9->zero(), F9->neg(i)}});
  CHECK_FALSE(D.entries_in_subfield(1));
  CHECK(X.entries_in_subfield(1));
  CHECK(D.scaled(i) == FieldMatrix(F9, {{F9->from_int(-1), F9->zero()}, {F9->zero(), F9->one()}}));
}
