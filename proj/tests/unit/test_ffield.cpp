#include "fqg/ffield.hpp"

#include "helpers.hpp"

using namespace fqg;

TEST_CASE("construction and moduli") {
  auto F3 = make_field(3, 1);
  CHECK(F3->order() == 3);
  CHECK(F3->degree() == 1);
  auto F9 = make_field(3, 2);
  CHECK(F9->modulus() == std::vector<uint32_t>{1, 0, 1});
  auto F8 = make_field(2, 3);
  CHECK(F8->modulus() == std::vector<uint32_t>{1, 1, 0, 1});
  CHECK_ERRC(make_field(4, 1), Errc::NonPrimeCharacteristic);
  CHECK_ERRC(make_field(3, 0), Errc::DegreeZero);
  CHECK(make_field_of_order(9)->same_as(*F9));
  CHECK_ERRC(make_field_of_order(12), Errc::InvalidArgument);
}

TEST_CASE("multiplicative orders") {
  auto F3 = make_field(3, 1);
  CHECK(F3->mul_order(F3->one()) == 1);
  CHECK(F3->mul_order(F3->from_int(2)) == 2);
  auto F9 = make_field(3, 2);
  u128 best = 0;
  for (uint32_t c = 1; c < 9; ++c) best = std::max(best, F9->mul_order(F9->decode(c)));
  CHECK(best == 8);
  CHECK_ERRC(F9->mul_order(F9->zero()), Errc::ZeroElement);
}

TEST_CASE("square roots") {
  auto F3 = make_field(3, 1);
  CHECK(F3->sqrt(F3->zero()).value() == F3->zero());
  CHECK_FALSE(F3->sqrt(F3->from_int(-1)).has_value());
  auto F9 = make_field(3, 2);
  auto i = F9->sqrt(F9->from_int(-1));
  REQUIRE(i.has_value());
  CHECK(F9->mul_order(*i) == 4);
  // Tonelli-Shanks on a field beyond the table limit agrees with squaring.
  auto big = Field::extend(make_field(13, 1), 5);
  CHECK_FALSE(big->coded());
  FieldElem a = big->generator();
  for (int k = 0; k < 20; ++k) {
    const FieldElem sq = big->mul(a, a);
    auto r = big->sqrt(sq);
    REQUIRE(r.has_value());
    CHECK(big->mul(*r, *r) == sq);
    a = big->add(big->mul(a, big->generator()), big->one());
  }
}

TEST_CASE("field axioms on codes") {
  auto F = make_field(5, 2);
  for (uint32_t a = 0; a < 25; ++a) {
    CHECK(F->cadd(a, F->cneg(a)) == 0);
    if (a) CHECK(F->cmul(a, F->cinv(a)) == 1);
    for (uint32_t b = 0; b < 25; b += 3) {
      CHECK(F->cmul(a, b) == F->cmul(b, a));
      CHECK(F->encode(F->mul(F->decode(a), F->decode(b))) == F->cmul(a, b));
      CHECK(F->encode(F->add(F->decode(a), F->decode(b))) == F->cadd(a, b));
    }
  }
}

TEST_CASE("towers and subfields") {
  auto F9 = make_field(3, 2);
  auto E = Field::extend(F9, 4);
  CHECK(E->order() == u128{6561});
  CHECK(E->absolute_degree() == 8);
  const FieldElem t = E->generator();
  CHECK(E->element_degree(t) == 4);
  CHECK(E->in_subfield(E->frobenius(t, 4), 4));
  const FieldElem sq = E->mul(t, E->frobenius(t, 2));
  CHECK(E->in_subfield(sq, 2));
  CHECK(E->pow(t, E->order() - 1) == E->one());
  CHECK(E->prime_coordinates(E->one()).size() == 8);
}
