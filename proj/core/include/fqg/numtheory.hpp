#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fqg {

using u128 = unsigned __int128;

struct PrimePower {
  uint32_t p;
  unsigned m;
};

bool is_prime(uint64_t n);
/// Splits q = p^m; nullopt when q is not a prime power.
std::optional<PrimePower> prime_power(uint64_t q);

/// Largest v with p^v | c. Throws ZeroInput for c == 0.
unsigned padic_valuation(uint64_t p, int64_t c);
unsigned padic_valuation(uint64_t p, u128 c);

/// Multiplicative order of d modulo c. Throws NotCoprime when gcd(c, d) != 1.
uint64_t ord_mod(uint64_t c, int64_t d);

uint64_t euler_phi(uint64_t n);
std::vector<uint64_t> divisors(uint64_t n);
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

/// Prime factorization of p^e - 1 through its cyclotomic pieces Phi_k(p).
std::vector<std::pair<u128, unsigned>> factor_prime_power_minus_one(uint64_t p, unsigned e);

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod);
/// b^e, throwing InvalidArgument on 128-bit overflow.
u128 checked_pow(uint64_t b, unsigned e);
/// Non-negative residue of a mod m.
int64_t mod_floor(int64_t a, int64_t m);

std::string to_string(u128 v);

}  // namespace fqg
