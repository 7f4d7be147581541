#include "fqg/cycfactor.hpp"

#include "helpers.hpp"

using namespace fqg;

namespace {
std::vector<int> degrees(const FactorizationReport& r) {
  std::vector<int> out;
  for (const auto& f : r.factors) out.push_back(f.poly.degree());
  return out;
}
}  // namespace

TEST_CASE("factors of x^N - 1") {
  auto F3 = make_field(3, 1);
  auto r4 = factor_xn_minus_1(4, F3);
  REQUIRE(r4.factors.size() == 3);
  CHECK(r4.factors[0].poly.to_string() == "1 + 1*x");
  CHECK(r4.factors[1].poly.to_string() == "2 + 1*x");
  CHECK(r4.factors[2].poly.to_string() == "1 + 1*x^2");
  CHECK(r4.product() == Poly::x_pow_minus_one(F3, 4));
  CHECK(factor_xn_minus_1(1, F3).factors.size() == 1);
  // cosets {0},{4},{2,6},{1,3},{5,7}
  CHECK(degrees(factor_xn_minus_1(8, F3)) == std::vector<int>{1, 1, 2, 2, 2});
  CHECK_ERRC(factor_xn_minus_1(6, F3), Errc::NotCoprimeNQ);
}

TEST_CASE("factorization over F_9 and products") {
  auto F9 = make_field(3, 2);
  for (uint64_t N : {1, 2, 4, 5, 8, 10, 16, 20}) {
    auto r = factor_xn_minus_1(N, F9);
    CHECK(r.product() == Poly::x_pow_minus_one(F9, N));
    for (const auto& f : r.factors) CHECK(is_irreducible(f.poly));
  }
}

TEST_CASE("classification") {
  auto F3 = make_field(3, 1);
  auto r = classify(factor_xn_minus_1(4, F3), 3);
  CHECK(r.d == 2);
  CHECK(r.r == 3);
  CHECK(r.t == 0);
  CHECK(r.factors[2].self_involutive);
  CHECK_FALSE(r.factors[2].divides_xd);
  CHECK(r.factors[0].divides_xd);
  CHECK_ERRC(classify(factor_xn_minus_1(4, F3), 2), Errc::SInvalid);

  auto F7 = make_field(7, 1);
  auto r16 = classify(factor_xn_minus_1(16, F7), 7);
  bool found = false;
  for (const auto& f : r16.factors) {
    if (f.coset == std::vector<uint64_t>{1, 7}) {
      found = true;
      CHECK(f.self_involutive);
      CHECK(remark_self_involutive(f, 7, 7));
    }
  }
  CHECK(found);

  auto r8 = classify(factor_xn_minus_1(8, F3), 5);
  CHECK(r8.t == 1);
  for (size_t i = 0; i < r8.factors.size(); ++i) {
    const auto& f = r8.factors[i];
    if (f.self_involutive) continue;
    REQUIRE(f.partner >= 0);
    CHECK(r8.factors[f.partner].partner == static_cast<int>(i));
    CHECK(s_involution(f.poly, 5, 8) == r8.factors[f.partner].poly);
  }
}

TEST_CASE("tower degrees") {
  auto F3 = make_field(3, 1);
  auto r = classify(factor_xn_minus_1(4, F3), 3);
  CHECK(tower_degrees(r, 2) == std::pair<unsigned, unsigned>{2, 1});
  CHECK_ERRC(tower_degrees(r, 1), Errc::NotSelfInvolutive);
  auto F7 = make_field(7, 1);
  auto r2 = classify(factor_xn_minus_1(16, F7), 9);
  for (size_t i = 0; i < r2.factors.size(); ++i) {
    const auto& f = r2.factors[i];
    if (!f.self_involutive || f.divides_xd) continue;
    auto [full, half] = tower_degrees(r2, i);
    CHECK(full == 2 * half);
  }
}

TEST_CASE("2-adic tower from coset sizes") {
  CHECK(two_adic_tower(4, 3) == std::vector<unsigned>{1, 2});
  CHECK(two_adic_tower(8, 3) == std::vector<unsigned>{2, 1, 2});
  CHECK(two_adic_tower(2, 3) == std::vector<unsigned>{2});
  CHECK(two_adic_tower(16, 3) == std::vector<unsigned>{2, 2, 1, 2});
  for (uint64_t n : {2, 4, 8, 16, 32}) {
    for (uint64_t q : {3, 7, 11, 19, 23, 27, 31}) CHECK(two_adic_tower(n, q) == two_adic_tower_predicted(n, q));
  }
  // With an odd part whose residue degree is even the last step collapses:
  // alpha of order 20 and alpha^2 of order 10 both have degree 4 over F_3.
  CHECK(two_adic_tower(10, 3) == std::vector<unsigned>{1});
  CHECK(two_adic_tower_predicted(10, 3) == std::vector<unsigned>{2});
  CHECK_ERRC(two_adic_tower(3, 3), Errc::BadCongruence);
  CHECK_ERRC(two_adic_tower(4, 5), Errc::BadCongruence);
}

TEST_CASE("splitting field") {
  auto F3 = make_field(3, 1);
  auto sf = make_splitting_field(F3, 8);
  const Field& E = *sf->ext;
  CHECK(E.mul_order(sf->alpha) == 8);
  CHECK(E.mul(sf->beta, sf->beta) == E.from_int(-1));
  CHECK(sf->alpha_pow(-1) == E.inv(sf->alpha));
}
