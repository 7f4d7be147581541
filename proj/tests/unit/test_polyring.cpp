#include "fqg/polyring.hpp"

#include "helpers.hpp"

using namespace fqg;

namespace {
FieldPtr F3() { return make_field(3, 1); }
Poly P(const std::string& s) { return Poly::parse(F3(), s); }
}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("x^2 + 1").to_string() == "1 + 1*x^2");
  CHECK(P("2 + 1*x^3") == Poly(F3(), {2, 0, 0, 1}));
  CHECK(P("-1 + x") == Poly(F3(), {2, 1}));
  CHECK(Poly::zero(F3()).to_string() == "0");
  CHECK(Poly::parse(F3(), P("2 + 2*x + x^5").to_string()) == P("2 + 2*x + x^5"));
  CHECK_ERRC(Poly::parse(F3(), "x^^2"), Errc::ParseError);
}

TEST_CASE("gcd and inverses") {
  CHECK(gcd(P("x^2 - 1"), P("x - 1")) == P("x - 1"));
  CHECK(gcd(P("x^2 + 1"), P("x^2 - 1")) == P("1"));
  CHECK(gcd(P("2*x^2 + 2"), P("2*x^2 + 2")) == P("x^2 + 1"));
  CHECK_ERRC(gcd(Poly::zero(F3()), Poly::zero(F3())), Errc::BothZero);
  CHECK(inverse_mod(P("x^2 - 1"), P("x^2 + 1")) == P("1"));
  CHECK(inverse_mod(P("1"), P("x^2 + 1")) == P("1"));
  CHECK(inverse_mod(P("x"), P("x^2 + 1")) == P("-x"));
  CHECK_ERRC(inverse_mod(P("x - 1"), P("x^2 - 1")), Errc::NotInvertible);
  const auto e = ext_gcd(P("x^3 + 2*x + 1"), P("x^2 + 1"));
  CHECK(e.u * P("x^3 + 2*x + 1") + e.v * P("x^2 + 1") == e.g);
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(P("x - 1")) == P("x - 1"));
  CHECK(reciprocal(P("x^2 + 1")) == P("x^2 + 1"));
  CHECK(reciprocal(P("2*x + 1")) == P("x + 2"));
  CHECK_ERRC(reciprocal(P("x^2 + x")), Errc::ZeroConstantTerm);
}

TEST_CASE("s-involution") {
  CHECK(s_involution(P("x - 1"), 5, 8) == P("x - 1"));
  CHECK(s_involution(P("x^2 + 1"), 3, 4) == P("x^2 + 1"));
  const Poly f = P("x^2 + x + 2");  // roots of order 8
  CHECK(s_involution(f, 1, 8) == f);
  CHECK(s_involution(s_involution(f, 3, 8), 3, 8) == f);
  CHECK_ERRC(s_involution(f, 2, 8), Errc::BadS);
  CHECK_ERRC(s_involution(P("x^2 + x + 1"), 3, 8), Errc::NotDividingXNMinus1);
}

TEST_CASE("derivative and order") {
  CHECK(formal_derivative(P("x^2 + 1")) == P("2*x"));
  CHECK(formal_derivative(P("2")).is_zero());
  CHECK(formal_derivative(P("x^3")).is_zero());
  CHECK(poly_order(P("x - 1")) == 1);
  CHECK(poly_order(P("x + 1")) == 2);
  CHECK(poly_order(P("x^2 + 1")) == 4);
}

TEST_CASE("ring identities") {
  const Poly a = P("x^4 + 2*x + 1"), b = P("2*x^2 + x + 2"), c = P("x^3 + 2");
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  const auto qr = divmod(a, b);
  CHECK(qr.quot * b + qr.rem == a);
  CHECK(qr.rem.degree() < b.degree());
  CHECK(x_power_cyclic(F3(), -1, 4) == P("x^3"));
  CHECK(compose_power_cyclic(P("1 + x"), 3, 4) == P("1 + x^3"));
  CHECK(is_irreducible(P("x^2 + 1")));
  CHECK_FALSE(is_irreducible(P("x^2 - 1")));
}
