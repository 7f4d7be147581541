#include "fqg/numtheory.hpp"

#include "helpers.hpp"

using namespace fqg;

TEST_CASE("padic valuation") {
  CHECK(padic_valuation(2, int64_t{8}) == 3);
  CHECK(padic_valuation(2, int64_t{3 * 3 - 1}) == 3);
  CHECK(padic_valuation(3, int64_t{4 * 4 * 4 - 1}) == 2);
  CHECK(padic_valuation(5, int64_t{7}) == 0);
  CHECK(padic_valuation(2, int64_t{-12}) == 2);
  CHECK_ERRC(padic_valuation(3, int64_t{0}), Errc::ZeroInput);
}

TEST_CASE("lifting the exponent for odd p") {
  // v_3(4^3 - 1) = v_3(4 - 1) + v_3(3)
  CHECK(padic_valuation(3, int64_t{63}) == padic_valuation(3, int64_t{3}) + padic_valuation(3, int64_t{3}));
  // v_2(3^2 - 1) = v_2(3^2 - 1) + v_2(2) - 1
  CHECK(padic_valuation(2, int64_t{8}) == 3 + 1 - 1);
}

TEST_CASE("multiplicative order") {
  CHECK(ord_mod(4, 3) == 2);
  CHECK(ord_mod(1, 17) == 1);
  CHECK(ord_mod(5, 2) == 4);
  CHECK(ord_mod(16, 7) == 2);
  CHECK(ord_mod(20, -1) == 2);
  CHECK_ERRC(ord_mod(6, 3), Errc::NotCoprime);
}

TEST_CASE("prime powers") {
  CHECK(prime_power(9).value().p == 3);
  CHECK(prime_power(9).value().m == 2);
  CHECK(prime_power(13).value().m == 1);
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_FALSE(prime_power(1).has_value());
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(65535));
}

TEST_CASE("euler phi and divisors") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(13) == 12);
  CHECK(divisors(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
  uint64_t total = 0;
  for (uint64_t d : divisors(48)) total += euler_phi(d);
  CHECK(total == 48);
}

TEST_CASE("factorization of p^e - 1 matches trial division") {
  for (uint64_t p : {3, 5, 7, 11, 13}) {
    for (unsigned e = 1; e <= 6; ++e) {
      u128 prod = 1;
      for (auto [r, k] : factor_prime_power_minus_one(p, e)) {
        CHECK(is_prime(static_cast<uint64_t>(r)));
        for (unsigned i = 0; i < k; ++i) prod *= r;
      }
      CHECK(prod == checked_pow(p, e) - 1);
    }
  }
}

TEST_CASE("mod_floor and powmod") {
  CHECK(mod_floor(-1, 4) == 3);
  CHECK(mod_floor(9, 4) == 1);
  CHECK(powmod(3, 4, 16) == 1);
  CHECK(to_string(checked_pow(10, 20)) == "100000000000000000000");
  CHECK_ERRC(checked_pow(2, 130), Errc::InvalidArgument);
}
