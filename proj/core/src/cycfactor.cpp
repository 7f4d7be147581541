#include "fqg/cycfactor.hpp"

#include <algorithm>
#include <numeric>

namespace fqg {

FieldElem SplittingField::alpha_pow(int64_t k) const {
  return ext->pow(alpha, static_cast<u128>(mod_floor(k, static_cast<int64_t>(N))));
}

unsigned SplittingField::generated_degree(const std::vector<FieldElem>& elems) const {
  unsigned deg = 1;
  for (const auto& e : elems) deg = std::lcm(deg, ext->element_degree(e));
  return deg;
}

std::shared_ptr<const SplittingField> make_splitting_field(const FieldPtr& Fq, uint64_t N) {
  if (N == 0) throw Error(Errc::InvalidArgument, "N must be positive");
  const uint64_t q = static_cast<uint64_t>(Fq->order());
  if (std::gcd(N, q) != 1) throw Error(Errc::NotCoprimeNQ, "gcd(N, q) != 1");
  auto sf = std::make_shared<SplittingField>();
  sf->base = Fq;
  sf->N = N;
  sf->L = std::lcm<uint64_t>(N, 4);
  const unsigned M = static_cast<unsigned>(ord_mod(sf->L, static_cast<int64_t>(q)));
  sf->ext = Field::extend(Fq, M);
  const Field& E = *sf->ext;
  const u128 cofactor = (E.order() - 1) / sf->L;
  const auto primes = factorize(sf->L);
  // Scan elements in code order for one whose cofactor power has order L.
  for (u128 k = 1;; ++k) {
    FieldElem c = E.zero();
    u128 v = k;
    for (unsigned i = 0; i < E.degree() && v; ++i) {
      c.coeffs[i] = static_cast<uint32_t>(v % q);
      v /= q;
    }
    if (v) panic("no primitive root of unity found");
    FieldElem g = E.pow(c, cofactor);
    bool primitive = true;
    for (auto [r, e] : primes) {
      (void)e;
      if (E.is_one(E.pow(g, sf->L / r))) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      sf->zeta = g;
      break;
    }
  }
  sf->alpha = E.pow(sf->zeta, sf->L / N);
  sf->beta = E.pow(sf->zeta, sf->L / 4);
  ensure(E.is_one(E.neg(E.mul(sf->beta, sf->beta))), "beta^2 != -1");
  return sf;
}

std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t N, uint64_t q) {
  std::vector<bool> seen(N, false);
  std::vector<std::vector<uint64_t>> out;
  for (uint64_t i = 0; i < N; ++i) {
    if (seen[i]) continue;
    std::vector<uint64_t> c;
    uint64_t j = i;
    do {
      seen[j] = true;
      c.push_back(j);
      j = static_cast<uint64_t>(static_cast<u128>(j) * q % N);
    } while (j != i);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

Poly FactorizationReport::product() const {
  Poly acc = Poly::constant(field, 1);
  for (const auto& f : factors) acc = acc * f.poly;
  return acc;
}

namespace {

Poly minimal_polynomial(const SplittingField& sf, const std::vector<uint64_t>& coset) {
  const Field& E = *sf.ext;
  std::vector<FieldElem> acc{E.one()};
  for (uint64_t i : coset) {
    const FieldElem root = sf.alpha_pow(static_cast<int64_t>(i));
    std::vector<FieldElem> next(acc.size() + 1, E.zero());
    for (size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] = E.add(next[k + 1], acc[k]);
      next[k] = E.sub(next[k], E.mul(root, acc[k]));
    }
    acc = std::move(next);
  }
  std::vector<uint32_t> coeffs;
  for (const auto& c : acc) {
    if (!E.in_base(c)) panic("minimal polynomial coefficient outside F_q");
    coeffs.push_back(c.coeffs[0]);
  }
  return Poly(sf.base, std::move(coeffs));
}

bool factor_less(const CosetFactor& a, const CosetFactor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  return a.poly.lex_less(b.poly);
}

}  // namespace

FactorizationReport factor_xn_minus_1(uint64_t N, const FieldPtr& Fq) {
  const uint64_t q = static_cast<uint64_t>(Fq->order());
  if (N == 0) throw Error(Errc::InvalidArgument, "N must be positive");
  if (std::gcd(N, q) != 1) throw Error(Errc::NotCoprimeNQ, "gcd(N, q) != 1");
  FactorizationReport rep;
  rep.N = N;
  rep.q = q;
  rep.field = Fq;
  rep.splitting = make_splitting_field(Fq, N);
  for (auto& c : cyclotomic_cosets(N, q)) {
    CosetFactor f;
    f.poly = minimal_polynomial(*rep.splitting, c);
    f.root_order = N / std::gcd(N, c.front());
    f.coset = std::move(c);
    rep.factors.push_back(std::move(f));
  }
  std::sort(rep.factors.begin(), rep.factors.end(), factor_less);
  return rep;
}

bool remark_self_involutive(const CosetFactor& f, uint64_t q, uint64_t s) {
  const uint64_t m = f.root_order;
  const uint64_t half = static_cast<uint64_t>(f.poly.degree()) / 2;
  return powmod(q, half, m) == s % m;
}

FactorizationReport classify(FactorizationReport rep, int64_t s) {
  const uint64_t N = rep.N;
  const auto sn = static_cast<int64_t>(N);
  const uint64_t sr = static_cast<uint64_t>(mod_floor(s, sn));
  if (static_cast<u128>(sr) * sr % N != 1 % N) throw Error(Errc::SInvalid, "s^2 != 1 mod N");
  rep.s = static_cast<uint64_t>(mod_floor(s - 1, sn)) + 1;
  rep.d = std::gcd(N, static_cast<uint64_t>(mod_floor(s - 1, sn)));
  if (rep.d == 0) rep.d = N;
  const Poly xd = Poly::x_pow_minus_one(rep.field, rep.d);

  std::vector<CosetFactor>& fs = rep.factors;
  std::vector<int> partner(fs.size(), -1);
  for (size_t i = 0; i < fs.size(); ++i) {
    std::vector<uint64_t> sc;
    for (uint64_t c : fs[i].coset) sc.push_back(static_cast<uint64_t>(static_cast<u128>(c) * sr % N));
    std::sort(sc.begin(), sc.end());
    for (size_t j = 0; j < fs.size(); ++j) {
      if (fs[j].coset == sc) partner[i] = static_cast<int>(j);
    }
    ensure(partner[i] >= 0, "s-image of a coset is not a coset");
    CosetFactor& f = fs[i];
    f.self_involutive = partner[i] == static_cast<int>(i);
    f.divides_xd = rep.d % f.root_order == 0;

    // Polynomial-side route for the same data.
    const Poly inv = s_involution(f.poly, s, N);
    if (!(inv == fs[partner[i]].poly)) panic("s-involution disagrees with coset image");
    if (f.divides_xd != (xd % f.poly).is_zero()) panic("x^d - 1 divisibility mismatch");
    if (f.poly.degree() % 2 == 0 && !f.divides_xd &&
        remark_self_involutive(f, rep.q, sr) != f.self_involutive) {
      panic("self-involutivity residue test disagrees with coset test");
    }
  }

  std::vector<CosetFactor> ordered;
  std::vector<int> new_index(fs.size(), -1);
  for (size_t i = 0; i < fs.size(); ++i) {
    if (new_index[i] >= 0) continue;
    new_index[i] = static_cast<int>(ordered.size());
    ordered.push_back(fs[i]);
    const int p = partner[i];
    if (p != static_cast<int>(i)) {
      new_index[p] = static_cast<int>(ordered.size());
      ordered.push_back(fs[p]);
    }
  }
  rep.r = 0;
  rep.t = 0;
  for (size_t i = 0; i < fs.size(); ++i) {
    CosetFactor& f = ordered[new_index[i]];
    f.partner = f.self_involutive ? -1 : new_index[partner[i]];
    if (f.self_involutive) ++rep.r; else ++rep.t;
  }
  rep.t /= 2;
  rep.factors = std::move(ordered);
  rep.classified = true;
  return rep;
}

std::pair<unsigned, unsigned> tower_degrees(const FactorizationReport& rep, size_t index) {
  if (!rep.classified || index >= rep.factors.size()) {
    throw Error(Errc::InvalidArgument, "tower_degrees needs a classified report and valid index");
  }
  const CosetFactor& f = rep.factors[index];
  if (!f.self_involutive || f.divides_xd) {
    throw Error(Errc::NotSelfInvolutive,
                "factor must be self-involutive and not divide x^d - 1");
  }
  const SplittingField& sf = *rep.splitting;
  const Field& E = *sf.ext;
  const int64_t s = static_cast<int64_t>(rep.s);
  const FieldElem xi = sf.alpha_pow(static_cast<int64_t>(f.coset.front()));
  const FieldElem xis = E.pow(xi, static_cast<u128>(s));
  const unsigned full = E.element_degree(xi);
  ensure(full == f.coset.size(), "root degree differs from coset size");
  const unsigned half = sf.generated_degree({E.add(xi, xis), E.mul(xi, xis)});
  return {full, half};
}

namespace {

void require_tower_input(uint64_t n, uint64_t q) {
  if (n == 0 || n % 2 != 0) throw Error(Errc::BadCongruence, "n must be even");
  if (q % 4 != 3) throw Error(Errc::BadCongruence, "q must be 3 mod 4");
}

uint64_t coset_size(uint64_t i, uint64_t N, uint64_t q) {
  uint64_t j = i, size = 0;
  do {
    j = static_cast<uint64_t>(static_cast<u128>(j) * q % N);
    ++size;
  } while (j != i);
  return size;
}

}  // namespace

std::vector<unsigned> two_adic_tower(uint64_t n, uint64_t q) {
  require_tower_input(n, q);
  const uint64_t N = 2 * n;
  const unsigned v = padic_valuation(2, static_cast<int64_t>(n));
  std::vector<unsigned> steps;
  for (unsigned j = 0; j < v; ++j) {
    const uint64_t upper = coset_size((uint64_t{1} << j) % N, N, q);
    const uint64_t lower = coset_size((uint64_t{1} << (j + 1)) % N, N, q);
    ensure(upper % lower == 0, "tower degrees do not divide");
    steps.push_back(static_cast<unsigned>(upper / lower));
  }
  return steps;
}

std::vector<unsigned> two_adic_tower_predicted(uint64_t n, uint64_t q) {
  require_tower_input(n, q);
  const unsigned v = padic_valuation(2, static_cast<int64_t>(n));
  const unsigned w = padic_valuation(2, static_cast<int64_t>(q + 1));
  std::vector<unsigned> steps;
  for (unsigned j = 0; j < v; ++j) {
    const bool doubling = j + 1 == v || (v > w && j < v - w);
    steps.push_back(doubling ? 2 : 1);
  }
  return steps;
}

}  // namespace fqg
