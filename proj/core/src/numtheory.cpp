#include "fqg/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fqg/error.hpp"

namespace fqg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BothZero: return "BothZero";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NotDividingXNMinus1: return "NotDividingXNMinus1";
    case Errc::BadS: return "BadS";
    case Errc::NotCoprimeNQ: return "NotCoprimeNQ";
    case Errc::SInvalid: return "SInvalid";
    case Errc::NotSelfInvolutive: return "NotSelfInvolutive";
    case Errc::BadCongruence: return "BadCongruence";
    case Errc::SNotInvolutive: return "SNotInvolutive";
    case Errc::OrderNotCoprime: return "OrderNotCoprime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::NotIrreducibleFactor: return "NotIrreducibleFactor";
    case Errc::PreconditionFactor: return "PreconditionFactor";
    case Errc::CaseUnavailable: return "CaseUnavailable";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::InconsistentPrescription: return "InconsistentPrescription";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<uint32_t>(p), m};
}

unsigned padic_valuation(uint64_t p, int64_t c) {
  if (c == 0) throw Error(Errc::ZeroInput, "valuation of zero");
  u128 mag = c < 0 ? static_cast<u128>(-(c + 1)) + 1 : static_cast<u128>(c);
  return padic_valuation(p, mag);
}

unsigned padic_valuation(uint64_t p, u128 c) {
  if (c == 0) throw Error(Errc::ZeroInput, "valuation of zero");
  if (p < 2) throw Error(Errc::InvalidArgument, "valuation base must be >= 2");
  unsigned v = 0;
  while (c % p == 0) {
    c /= p;
    ++v;
  }
  return v;
}

uint64_t ord_mod(uint64_t c, int64_t d) {
  if (c == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  uint64_t r = static_cast<uint64_t>(mod_floor(d, static_cast<int64_t>(c)));
  if (c == 1) return 1;
  if (std::gcd(r, c) != 1) throw Error(Errc::NotCoprime, "ord_mod needs gcd(c, d) = 1");
  uint64_t t = 1;
  u128 acc = r;
  while (acc % c != 1) {
    acc = (acc * r) % c;
    ++t;
  }
  return t;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t result = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    result = result / p * (p - 1);
  }
  return result;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

using Coeffs = std::vector<__int128>;

// Exact division of integer polynomials by a monic divisor.
Coeffs divide_exact(Coeffs num, const Coeffs& den) {
  const size_t dn = den.size() - 1;
  Coeffs quot(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    __int128 c = num[i];
    quot[i - dn] = c;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

Coeffs cyclotomic(unsigned k, std::map<unsigned, Coeffs>& cache) {
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  Coeffs num(k + 1, 0);
  num[0] = -1;
  num[k] = 1;
  for (uint64_t d : divisors(k)) {
    if (d == k) continue;
    num = divide_exact(num, cyclotomic(static_cast<unsigned>(d), cache));
  }
  cache[k] = num;
  return num;
}

void trial_divide(u128 n, std::map<u128, unsigned>& acc) {
  constexpr uint64_t kLimit = uint64_t{1} << 32;
  for (uint64_t d = 2; d < kLimit && static_cast<u128>(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      n /= d;
      ++acc[d];
    }
  }
  if (n > 1) {
    if (n >= static_cast<u128>(kLimit) * kLimit) {
      throw Error(Errc::InvalidArgument, "cofactor too large for trial division");
    }
    ++acc[n];
  }
}

}  // namespace

std::vector<std::pair<u128, unsigned>> factor_prime_power_minus_one(uint64_t p, unsigned e) {
  std::map<unsigned, Coeffs> cache;
  std::map<u128, unsigned> acc;
  for (uint64_t k : divisors(e)) {
    Coeffs phi = cyclotomic(static_cast<unsigned>(k), cache);
    __int128 value = 0;
    for (size_t i = phi.size(); i-- > 0;) value = value * static_cast<__int128>(p) + phi[i];
    trial_divide(static_cast<u128>(value), acc);
  }
  return {acc.begin(), acc.end()};
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  u128 result = 1;
  u128 b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<uint64_t>(result);
}

u128 checked_pow(uint64_t b, unsigned e) {
  u128 result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && result > (~u128{0}) / b) {
      throw Error(Errc::InvalidArgument, "field order exceeds 128 bits");
    }
    result *= b;
  }
  return result;
}

int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

}  // namespace fqg
