#include "fqg/wedderburn.hpp"

#include <array>
#include <optional>
#include <map>

namespace fqg {

std::string_view source_name(SourceKind k) {
  switch (k) {
    case SourceKind::Abelian: return "abelian";
    case SourceKind::SelfInvolutive: return "self_involutive";
    case SourceKind::Pair: return "pair";
  }
  return "unknown";
}

uint64_t Decomposition::dimension() const {
  uint64_t total = 0;
  for (const auto& c : components) total += uint64_t{c.multiplicity} * c.l * c.l * c.m;
  return total;
}

uint64_t Decomposition::center_dimension() const {
  uint64_t total = 0;
  for (const auto& c : components) total += uint64_t{c.multiplicity} * c.m;
  return total;
}

std::optional<Poly> express_in_root(const SplittingField& sf, const FieldElem& root, unsigned degree,
                                    const FieldElem& target) {
  const Field& E = *sf.ext;
  if (!E.in_subfield(target, degree)) return std::nullopt;
  CodeMatrix M(sf.base, E.degree(), degree);
  FieldElem pw = E.one();
  for (unsigned i = 0; i < degree; ++i) {
    for (unsigned k = 0; k < E.degree(); ++k) M.at(k, i) = pw.coeffs[k];
    pw = E.mul(pw, root);
  }
  auto sol = M.solve(target.coeffs);
  if (!sol) return std::nullopt;
  return Poly(sf.base, std::move(*sol));
}

namespace {

struct Builder {
  const GroupPresentation& g;
  const FactorizationReport& rep;
  const SplittingField& sf;
  const Field& E;
  const FieldPtr& Ep;

  FieldMatrix m1(const FieldElem& a) const { return FieldMatrix(Ep, {{a}}); }
  FieldMatrix m2(FieldElem a, FieldElem b, FieldElem c, FieldElem d) const {
    return FieldMatrix(Ep, {{std::move(a), std::move(b)}, {std::move(c), std::move(d)}});
  }
  FieldElem root(size_t index) const {
    return sf.alpha_pow(static_cast<int64_t>(rep.factors[index].coset.front()));
  }
  FieldElem spow(const FieldElem& a, uint64_t s) const { return E.pow(a, s); }
  FieldElem minus_one() const { return E.neg(E.one()); }
};

void add_abelian(const Builder& b, size_t index, const std::string& tag, std::vector<WedderburnComponent>& out) {
  const CosetFactor& f = b.rep.factors[index];
  const FieldElem theta = b.root(index);
  const unsigned deg = static_cast<unsigned>(f.coset.size());
  FieldElem c0 = b.E.one();
  bool fused = false;
  if (b.g.kind() == GroupKind::NonSplit) {
    const FieldElem tn = b.E.pow(theta, b.g.n());
    if (!b.E.is_one(tn)) {
      ensure(tn == b.minus_one(), "theta^n is not +-1");
      c0 = b.sf.beta;
      fused = !b.E.in_subfield(c0, deg);
    }
  }
  WedderburnComponent c;
  c.l = 1;
  c.source = SourceKind::Abelian;
  c.factor = static_cast<int>(index);
  c.construction = "psi";
  c.case_tag = tag;
  c.image_x = b.m1(theta);
  if (fused) {
    c.m = 2 * deg;
    c.sign = 0;
    c.image_y = b.m1(c0);
    out.push_back(c);
    return;
  }
  c.m = deg;
  for (int sign : {1, -1}) {
    c.sign = sign;
    c.image_y = b.m1(sign > 0 ? c0 : b.E.neg(c0));
    out.push_back(c);
  }
}

// Images over the degree-m subfield from images (X0, Y0) over F_q(xi) with
// Y0 X0 Y0^-1 = sigma(X0), where sigma generates Gal(F_q(xi) / F_q(xi)^sigma).
std::optional<std::pair<FieldMatrix, FieldMatrix>> descend(const Builder& b, const FieldElem& xi,
                                                          const FieldMatrix& X0, const FieldMatrix& Y0,
                                                          unsigned m) {
  const Field& E = b.E;
  auto sigma = [&](const FieldElem& a) { return E.frobenius(a, m); };
  // C = c Y0 must satisfy sigma(C) C = I, i.e. N(c) Y0^2 = I.
  const FieldMatrix Y2 = Y0 * Y0;
  FieldElem c = E.one();
  if (!(Y2 == FieldMatrix::identity(b.Ep, 2))) {
    ensure(Y2 == FieldMatrix::scalar(b.Ep, 2, b.minus_one()), "Y0^2 must be +-I");
    // c = w^((q^m - 1)/2) has norm -1 for a non-square w of F_q(xi).
    const u128 qm = checked_pow(b.rep.q, m);
    bool found = false;
    FieldElem w = xi;
    for (unsigned k = 0; k < 4 * m + 8 && !found; ++k) {
      if (!E.is_zero(w) && E.pow(w, (qm * qm - 1) / 2) == b.minus_one()) {
        c = E.pow(w, (qm - 1) / 2);
        found = true;
      }
      w = E.add(w, E.one());
      if (k % 4 == 3) w = E.mul(w, xi);
    }
    if (!found) return std::nullopt;
  }
  const FieldMatrix C = Y0.scaled(c);
  // C^-1 for a 2x2 matrix.
  const FieldElem det = E.sub(E.mul(C.at(0, 0), C.at(1, 1)), E.mul(C.at(0, 1), C.at(1, 0)));
  const FieldElem di = E.inv(det);
  const FieldMatrix Ci = b.m2(E.mul(di, C.at(1, 1)), E.neg(E.mul(di, C.at(0, 1))),
                              E.neg(E.mul(di, C.at(1, 0))), E.mul(di, C.at(0, 0)));
  auto T = [&](const std::array<FieldElem, 2>& v) {
    const FieldElem s0 = sigma(v[0]), s1 = sigma(v[1]);
    return std::array<FieldElem, 2>{E.add(E.mul(Ci.at(0, 0), s0), E.mul(Ci.at(0, 1), s1)),
                                    E.add(E.mul(Ci.at(1, 0), s0), E.mul(Ci.at(1, 1), s1))};
  };
  std::vector<std::array<FieldElem, 2>> fixed;
  FieldElem scale = E.one();
  for (unsigned k = 0; k < 4 * m + 8 && fixed.size() < 2; ++k) {
    std::array<FieldElem, 2> w{k % 2 == 0 ? scale : E.zero(), k % 2 == 1 ? scale : E.zero()};
    const auto tw = T(w);
    std::array<FieldElem, 2> v{E.add(w[0], tw[0]), E.add(w[1], tw[1])};
    if (E.is_zero(v[0]) && E.is_zero(v[1])) {
      if (k % 2 == 1) scale = E.mul(scale, xi);
      continue;
    }
    if (fixed.empty()) {
      fixed.push_back(v);
    } else {
      const auto& u = fixed.front();
      if (!E.is_zero(E.sub(E.mul(u[0], v[1]), E.mul(u[1], v[0])))) fixed.push_back(v);
    }
    if (k % 2 == 1) scale = E.mul(scale, xi);
  }
  if (fixed.size() < 2) return std::nullopt;
  const FieldMatrix Z = b.m2(fixed[0][0], fixed[1][0], fixed[0][1], fixed[1][1]);
  const FieldElem zd = E.sub(E.mul(Z.at(0, 0), Z.at(1, 1)), E.mul(Z.at(0, 1), Z.at(1, 0)));
  const FieldElem zi = E.inv(zd);
  const FieldMatrix Zi = b.m2(E.mul(zi, Z.at(1, 1)), E.neg(E.mul(zi, Z.at(0, 1))),
                              E.neg(E.mul(zi, Z.at(1, 0))), E.mul(zi, Z.at(0, 0)));
  return std::pair{Zi * X0 * Z, Zi * Y0 * Z};
}

WedderburnComponent make_two_dim(const Builder& b, size_t index, SourceKind src, unsigned m) {
  WedderburnComponent c;
  c.l = 2;
  c.m = m;
  c.source = src;
  c.factor = static_cast<int>(index);
  c.partner = b.rep.factors[index].partner;
  return c;
}

// Images on the x^n = 1 side: sigma o tau for self-involutive factors, tau for pairs.
WedderburnComponent split_type(const Builder& b, size_t index, const std::string& tag) {
  const CosetFactor& f = b.rep.factors[index];
  const Field& E = b.E;
  const uint64_t s = b.g.s();
  const FieldElem xi = b.root(index);
  const FieldElem xis = b.spow(xi, s);
  const FieldElem tr = E.add(xi, xis);
  const FieldElem nm = E.mul(xi, xis);
  const unsigned deg = static_cast<unsigned>(f.coset.size());
  WedderburnComponent c;
  if (f.self_involutive) {
    c = make_two_dim(b, index, SourceKind::SelfInvolutive, deg / 2);
    c.construction = "sigma_tau";
    c.image_x = b.m2(E.zero(), nm, b.minus_one(), tr);
    c.image_y = b.m2(E.one(), E.neg(tr), E.zero(), b.minus_one());
  } else {
    c = make_two_dim(b, index, SourceKind::Pair, deg);
    c.construction = "tau";
    c.image_x = b.m2(xi, E.zero(), E.zero(), xis);
    c.image_y = b.m2(E.zero(), E.one(), E.one(), E.zero());
  }
  c.case_tag = tag;
  if (!component_matrices_check(c, b.g)) {
    panic("split-type images fail the group relations for " + f.poly.to_string());
  }
  return c;
}

// Factors of x^n + 1 in the non-split case.
WedderburnComponent quaternion_type(const Builder& b, size_t index) {
  const CosetFactor& f = b.rep.factors[index];
  const Field& E = b.E;
  const GroupPresentation& g = b.g;
  const uint64_t s = g.s();
  const FieldElem xi = b.root(index);
  const FieldElem xis = b.spow(xi, s);
  const FieldElem tr = E.add(xi, xis);
  const FieldElem nm = E.mul(xi, xis);
  const unsigned deg = static_cast<unsigned>(f.coset.size());
  const uint64_t q = g.q();
  const unsigned vn = padic_valuation(2, static_cast<int64_t>(g.n()));
  const unsigned vq = padic_valuation(2, static_cast<int64_t>(q + 1));
  std::string tag;
  if (q % 4 == 1) {
    tag = "q=1 mod 4";
  } else if (vn > vq) {
    tag = "q=3 mod 4, v2(n)>v2(q+1)";
  } else {
    tag = "q=3 mod 4, v2(n)<=v2(q+1)";
  }
  const FieldMatrix omega_x = b.m2(xi, E.zero(), E.zero(), xis);
  const FieldMatrix omega_y = b.m2(E.zero(), b.minus_one(), E.one(), E.zero());

  if (!f.self_involutive) {
    WedderburnComponent c = make_two_dim(b, index, SourceKind::Pair, deg);
    c.construction = "omega";
    c.case_tag = tag;
    c.image_x = omega_x;
    c.image_y = omega_y;
    if (!component_matrices_check(c, g)) panic("omega images fail the group relations");
    return c;
  }

  const unsigned m = deg / 2;
  WedderburnComponent c = make_two_dim(b, index, SourceKind::SelfInvolutive, m);
  c.case_tag = tag;
  const FieldElem& beta = b.sf.beta;
  if (E.in_subfield(beta, m)) {
    c.construction = "eta_omega";
    c.image_x = b.m2(E.zero(), beta, E.mul(beta, nm), tr);
    c.image_y = b.m2(E.neg(beta), E.zero(), E.neg(tr), beta);
    if (component_matrices_check(c, g)) return c;
  } else if (q % 4 == 3 && vn <= vq) {
    // theta^(2^k) = xi with k = v2(s+1) - v2(n), using the adjusted s.
    const uint64_t sa = g.s_adjusted();
    const int k = static_cast<int>(padic_valuation(2, static_cast<int64_t>(sa + 1))) - static_cast<int>(vn);
    std::optional<FieldElem> theta = xi;
    for (int j = 0; j < k && theta; ++j) theta = E.sqrt(*theta);
    if (k >= 0 && theta) {
      const FieldElem ts = E.pow(*theta, sa);
      const auto ab = E.sqrt(E.neg(E.mul(ts, *theta)));
      const FieldElem D = E.sub(xi, xis);
      if (ab && !E.is_zero(D)) {
        const FieldElem Di = E.inv(E.mul(*ab, D));
        const FieldElem tx = E.mul(*theta, xi);
        const FieldElem x2t = E.mul(E.mul(xi, xi), *theta);
        const FieldElem y11 = E.mul(Di, E.sub(tx, E.pow(tx, sa)));
        const FieldElem y12 = E.mul(Di, E.sub(*theta, ts));
        const FieldElem y21 = E.mul(Di, E.sub(E.pow(x2t, sa), x2t));
        c.construction = "theta";
        c.image_x = b.m2(E.zero(), b.minus_one(), nm, tr);
        c.image_y = b.m2(y11, y12, y21, E.neg(y11));
        if (component_matrices_check(c, g)) return c;
      }
    }
  }
  auto d = descend(b, xi, omega_x, omega_y, m);
  if (!d) panic("no images over the half-degree field for " + f.poly.to_string());
  c.construction = "descent";
  c.image_x = d->first;
  c.image_y = d->second;
  if (!component_matrices_check(c, g)) panic("descended images fail the group relations");
  return c;
}

std::vector<std::pair<uint64_t, uint64_t>> abelian_formula(const GroupPresentation& g, std::string& tag) {
  std::map<uint64_t, uint64_t> acc;
  const uint64_t q = g.q();
  auto add_divisors = [&](uint64_t bound, uint64_t mult) {
    for (uint64_t l : divisors(bound)) {
      const uint64_t o = ord_mod(l, static_cast<int64_t>(q));
      acc[o] += mult * euler_phi(l) / o;
    }
  };
  if (g.kind() == GroupKind::Split) {
    tag = "split";
    add_divisors(g.d(), 2);
  } else if (g.s() % 4 == 1) {
    tag = "s=1 mod 4";
    add_divisors(g.d(), 2);
  } else if (q % 4 == 1) {
    tag = "s=3 mod 4, q=1 mod 4";
    if (g.d() % 2 == 0) add_divisors(g.d() / 2, 4);
  } else {
    tag = "s=3 mod 4, q=3 mod 4";
    if (g.d() % 2 == 0) {
      for (uint64_t l : divisors(g.d() / 2)) {
        const uint64_t o = ord_mod(l, static_cast<int64_t>(q));
        const uint64_t o2 = ord_mod(l, static_cast<int64_t>(q * q));
        acc[o] += 2 * euler_phi(l) / o;
        acc[2 * o2] += euler_phi(l) / o2;
      }
    }
  }
  return {acc.begin(), acc.end()};
}

Decomposition build(const GroupPresentation& g) {
  Decomposition D;
  D.group = g;
  const FieldPtr Fq = make_field_of_order(g.q());
  D.factorization = classify(factor_xn_minus_1(g.N(), Fq), static_cast<int64_t>(g.s()));
  const FactorizationReport& rep = D.factorization;
  const SplittingField& sf = *rep.splitting;
  const Builder b{g, rep, sf, *sf.ext, sf.ext};
  D.abelian_formula = abelian_formula(g, D.abelian_case);

  for (size_t i = 0; i < rep.factors.size(); ++i) {
    const CosetFactor& f = rep.factors[i];
    if (f.divides_xd) {
      add_abelian(b, i, D.abelian_case, D.components);
      continue;
    }
    if (!f.self_involutive && f.partner < static_cast<int>(i)) continue;
    const bool x_n_one = g.kind() == GroupKind::Split || g.n() % f.root_order == 0;
    if (x_n_one) {
      D.components.push_back(split_type(b, i, g.kind() == GroupKind::Split ? "split" : "x^n=1"));
    } else {
      D.components.push_back(quaternion_type(b, i));
    }
  }

  std::map<uint64_t, uint64_t> actual;
  for (const auto& c : D.components) {
    if (c.source == SourceKind::Abelian) ++actual[c.m];
  }
  D.abelian_formula_agrees =
      std::vector<std::pair<uint64_t, uint64_t>>(actual.begin(), actual.end()) == D.abelian_formula;
  ensure(D.dimension() == g.order(), "component dimensions do not add up to |G|");
  return D;
}

}  // namespace

Decomposition decompose_split(const GroupPresentation& g) {
  if (g.kind() != GroupKind::Split) throw Error(Errc::InvalidArgument, "decompose_split needs a split group");
  return build(g);
}

Decomposition decompose_nonsplit(const GroupPresentation& g) {
  if (g.kind() != GroupKind::NonSplit) {
    throw Error(Errc::InvalidArgument, "decompose_nonsplit needs a non-split group");
  }
  return build(g);
}

Decomposition decompose(const GroupPresentation& g) { return build(g); }

bool component_matrices_check(const WedderburnComponent& c, const GroupPresentation& g) {
  const FieldMatrix& X = c.image_x;
  const FieldMatrix& Y = c.image_y;
  if (X.size() != c.l || Y.size() != c.l || !X.field()) return false;
  const FieldPtr& E = X.field();
  const FieldMatrix I = FieldMatrix::identity(E, c.l);
  if (!(X.pow(g.N()) == I)) return false;
  const FieldMatrix y2 = g.kind() == GroupKind::Split ? I : X.pow(g.n());
  if (!(Y * Y == y2)) return false;
  if (!(X * Y == Y * X.pow(g.s()))) return false;
  return X.entries_in_subfield(c.m) && Y.entries_in_subfield(c.m);
}

std::vector<FieldMatrix> component_images(const WedderburnComponent& c, const GroupPresentation& g) {
  std::vector<FieldMatrix> out(g.order());
  FieldMatrix xi = FieldMatrix::identity(c.image_x.field(), c.l);
  for (uint64_t i = 0; i < g.N(); ++i) {
    out[i] = xi;
    out[g.N() + i] = xi * c.image_y;
    xi = xi * c.image_x;
  }
  return out;
}

FieldMatrix evaluate(const std::vector<FieldMatrix>& images, const AlgebraElement& u) {
  const FieldPtr& E = images.front().field();
  FieldMatrix acc(E, images.front().size());
  for (size_t k = 0; k < images.size(); ++k) {
    if (u.coeff(k) == 0) continue;
    acc = acc + images[k].scaled(E->embed(u.coeff(k)));
  }
  return acc;
}

}  // namespace fqg
