#include "fqg/idempotents.hpp"

namespace fqg {

std::string_view idempotent_kind_name(IdempotentKind k) {
  return k == IdempotentKind::CentralPrimitive ? "central_primitive" : "noncentral_primitive";
}

namespace {

uint32_t inverse_of_int(const Field& F, uint64_t v) {
  return F.cinv(F.cfrom_int(static_cast<int64_t>(v % F.characteristic())));
}

void require_factor(const Poly& f, size_t N) {
  const Poly xn = Poly::x_pow_minus_one(f.field(), N);
  if (f.degree() < 1 || !is_irreducible(f) || !(xn % f).is_zero()) {
    throw Error(Errc::NotIrreducibleFactor, f.to_string() + " is not an irreducible factor of x^N - 1");
  }
}

}  // namespace

Poly cyclic_idempotent_euclid(const Poly& f, size_t N) {
  require_factor(f, N);
  const Poly xn = Poly::x_pow_minus_one(f.field(), N);
  const Poly g = xn / f;
  if (f.degree() == static_cast<int>(N)) return Poly::constant(f.field(), 1);
  return (g * inverse_mod(g, f)) % xn;
}

Poly cyclic_idempotent(const Poly& f, size_t N) {
  require_factor(f, N);
  const FieldPtr& F = f.field();
  const Poly xn = Poly::x_pow_minus_one(F, N);
  const size_t k = static_cast<size_t>(f.degree());
  // ((f*)')* taken as x^(k-1) * (f*)'(1/x), which stays correct when the
  // characteristic divides deg f.
  const Poly dstar = formal_derivative(reversed(f));
  std::vector<uint32_t> rev(k, 0);
  for (size_t i = 0; i < k; ++i) rev[i] = dstar.coeff(k - 1 - i);
  const Poly closed =
      ((Poly(F, std::move(rev)) * (xn / f)).scale(F->cneg(inverse_of_int(*F, N)))) % xn;
  if (!(closed == cyclic_idempotent_euclid(f, N))) {
    panic("closed-form cyclic idempotent differs from the Euclid form for " + f.to_string());
  }
  return closed;
}

namespace {

struct Ctx {
  const Decomposition& dec;
  const AlgebraPtr& A;
  const FactorizationReport& rep;
  const SplittingField& sf;
  const Field& E;
  const Field& F;
  size_t N;

  Ctx(const Decomposition& d, const AlgebraPtr& a)
      : dec(d), A(a), rep(d.factorization), sf(*d.factorization.splitting), E(*sf.ext),
        F(*a->field()), N(d.group.N()) {
    if (!(A->group() == dec.group)) throw Error(Errc::GroupMismatch, "algebra and decomposition differ");
  }

  Poly ef(size_t index) const { return cyclic_idempotent(rep.factors[index].poly, N); }
  Poly xpow(int64_t k) const { return x_power_cyclic(rep.field, k, N); }
  AlgebraElement element(const Poly& P, const Poly& Q) const {
    const Poly xn = Poly::x_pow_minus_one(rep.field, N);
    return AlgebraElement::from_polys(A, P % xn, Q % xn);
  }
  FieldElem root(size_t index) const {
    return sf.alpha_pow(static_cast<int64_t>(rep.factors[index].coset.front()));
  }
  int component_of(size_t index) const {
    for (size_t c = 0; c < dec.components.size(); ++c) {
      if (dec.components[c].factor == static_cast<int>(index)) return static_cast<int>(c);
    }
    return -1;
  }
  std::string name(size_t index) const { return "e[" + rep.factors[index].poly.to_string() + "]"; }
};

// b(x) with w = b(x) y squaring to e_f on an abelian factor, and b(theta).
std::pair<Poly, FieldElem> abelian_b(const Ctx& c, size_t index, std::string& wlabel) {
  const CosetFactor& f = c.rep.factors[index];
  const GroupPresentation& g = c.dec.group;
  const FieldElem theta = c.root(index);
  const Poly one = Poly::constant(c.rep.field, 1);
  wlabel = "y";
  if (g.kind() == GroupKind::Split || g.n() % f.root_order == 0) return {one, c.E.one()};
  if (g.d() % 4 == 0) {
    wlabel = "x^" + std::to_string(g.d() / 4) + "*y";
    return {c.xpow(static_cast<int64_t>(g.d() / 4)), c.E.pow(theta, g.d() / 4)};
  }
  const FieldElem& beta = c.sf.beta;
  if (c.E.in_base(beta)) {
    wlabel = "beta*y";
    return {Poly::constant(c.rep.field, beta.coeffs[0]), beta};
  }
  auto b = express_in_root(c.sf, theta, static_cast<unsigned>(f.coset.size()), beta);
  ensure(b.has_value(), "no square root of x^-n modulo the factor");
  wlabel = "b(x)*y";
  return {*b, beta};
}

Idempotent central_for_component(const Ctx& c, size_t ci) {
  const WedderburnComponent& comp = c.dec.components[ci];
  const size_t index = static_cast<size_t>(comp.factor);
  Idempotent out;
  out.component = static_cast<int>(ci);
  out.kind = IdempotentKind::CentralPrimitive;
  const Poly ef = c.ef(index);
  const Poly zero = Poly::zero(c.rep.field);
  switch (comp.source) {
    case SourceKind::SelfInvolutive:
      out.label = c.name(index);
      out.element = c.element(ef, zero);
      break;
    case SourceKind::Pair:
      out.label = c.name(index) + "+" + c.name(static_cast<size_t>(comp.partner));
      out.element = c.element(ef + c.ef(static_cast<size_t>(comp.partner)), zero);
      break;
    case SourceKind::Abelian: {
      if (comp.sign == 0) {
        out.label = c.name(index);
        out.element = c.element(ef, zero);
        break;
      }
      std::string wlabel;
      auto [b, bval] = abelian_b(c, index, wlabel);
      const FieldElem theta = c.root(index);
      const uint64_t y2 = c.dec.group.kind() == GroupKind::Split ? 0 : c.dec.group.n();
      ensure(c.E.is_one(c.E.mul(c.E.mul(bval, bval), c.E.pow(theta, y2))), "w does not square to e_f");
      const FieldElem eps = c.E.mul(bval, comp.image_y.at(0, 0));
      uint32_t eps_code;
      if (c.E.is_one(eps)) {
        eps_code = 1;
      } else {
        ensure(c.E.is_one(c.E.neg(eps)), "abelian y-image is not matched by w");
        eps_code = c.F.cneg(1);
      }
      const uint32_t half = inverse_of_int(c.F, 2);
      out.label = c.name(index) + "*(1" + (eps_code == 1 ? "+" : "-") + wlabel + ")/2";
      out.element = c.element(ef.scale(half), (ef * b).scale(c.F.cmul(half, eps_code)));
      break;
    }
  }
  return out;
}

// Candidate e1 passes when it is a non-central idempotent strictly inside e_f.
bool valid_split(const AlgebraElement& e1, const AlgebraElement& ef) {
  if (e1.is_zero() || e1 == ef) return false;
  if (!is_idempotent(e1) || !(e1 * ef == e1) || !(ef * e1 == e1)) return false;
  const AlgebraElement e2 = ef - e1;
  return is_idempotent(e2) && are_orthogonal(e1, e2) && !is_central(e1) && !is_central(e2);
}

struct Attempt {
  std::optional<AlgebraElement> formula;
  std::optional<FieldElem> p_value;
  std::optional<FieldElem> q_value;
  /// Q(xi) from the norm equation, for cases whose closed-form Q(xi) is not
  /// consistent with the involution.
  std::optional<FieldElem> norm_q_value;
};

NonCentralPair finish_pair(const Ctx& c, size_t index, const std::string& tag, const Attempt& at) {
  const int ci = c.component_of(index);
  ensure(ci >= 0, "factor has no component");
  const Poly efp = c.ef(index);
  const AlgebraElement ef = c.element(efp, Poly::zero(c.rep.field));

  std::vector<std::vector<FieldMatrix>> images;
  for (const auto& comp : c.dec.components) images.push_back(component_images(comp, c.dec.group));
  auto prescriptions_for = [&](auto target_of) {
    std::vector<Prescription> ps;
    for (size_t k = 0; k < images.size(); ++k) ps.push_back({images[k], target_of(k)});
    return ps;
  };

  NonCentralPair out;
  FormulaCheck& chk = out.check;
  chk.factor = static_cast<int>(index);
  chk.case_tag = tag;
  std::optional<AlgebraElement> chosen;

  if (at.formula) {
    chk.formula_available = true;
    chk.formula_ok = valid_split(*at.formula, ef);
    if (chk.formula_ok) {
      chosen = at.formula;
      chk.chosen = "formula";
    }
  }
  const unsigned deg = static_cast<unsigned>(c.rep.factors[index].coset.size());
  const FieldElem xi = c.root(index);
  auto from_values = [&](const FieldElem& pv, const FieldElem& qv) -> std::optional<AlgebraElement> {
    auto P = express_in_root(c.sf, xi, deg, pv);
    auto Q = express_in_root(c.sf, xi, deg, qv);
    if (!P || !Q) return std::nullopt;
    return c.element(efp * *P, efp * *Q);
  };
  if (at.p_value && at.q_value) {
    if (auto cand = from_values(*at.p_value, *at.q_value)) {
      chk.conditions_ok = valid_split(*cand, ef);
      if (chk.conditions_ok && !chosen) {
        chosen = cand;
        chk.chosen = "conditions";
      }
    }
  }
  if (at.p_value && at.norm_q_value) {
    if (auto cand = from_values(*at.p_value, *at.norm_q_value)) {
      chk.norm_ok = valid_split(*cand, ef);
      if (chk.norm_ok && !chosen) {
        chosen = cand;
        chk.chosen = "norm";
      }
    }
  }
  {
    const FieldPtr& Ep = c.sf.ext;
    const auto ps = prescriptions_for([&](size_t k) {
      FieldMatrix t(Ep, c.dec.components[k].l);
      if (static_cast<int>(k) == ci) t.at(0, 0) = c.E.one();
      return t;
    });
    const AlgebraElement cand = interpolate(c.A, ps);
    chk.interpolation_ok = valid_split(cand, ef);
    if (!chosen && chk.interpolation_ok) {
      chosen = cand;
      chk.chosen = "interpolation";
    }
  }
  if (!chosen) panic("no valid non-central splitting for " + c.rep.factors[index].poly.to_string());

  FieldMatrix e11(c.sf.ext, 2);
  e11.at(0, 0) = c.E.one();
  chk.maps_to_e11 = evaluate(images[ci], *chosen) == e11;
  const auto back = interpolate(c.A, prescriptions_for([&](size_t k) { return evaluate(images[k], *chosen); }));
  chk.oracle_reproduces = back == *chosen;

  const std::string parent = c.name(index);
  out.first = {parent + ",1", *chosen, IdempotentKind::NonCentralPrimitive, parent, ci};
  out.second = {parent + ",2", ef - *chosen, IdempotentKind::NonCentralPrimitive, parent, ci};
  return out;
}

void require_splittable(const Ctx& c, size_t index) {
  if (index >= c.rep.factors.size()) throw Error(Errc::PreconditionFactor, "factor index out of range");
  const CosetFactor& f = c.rep.factors[index];
  if (!f.self_involutive || f.divides_xd) {
    throw Error(Errc::PreconditionFactor,
                f.poly.to_string() + " must be self-involutive and must not divide x^d - 1");
  }
}

// Values used by both the split and the non-split cases.
struct Common {
  Poly ell;
  Poly ef;
  FieldElem xi, xis, p_value;
};

Common common(const Ctx& c, size_t index) {
  const CosetFactor& f = c.rep.factors[index];
  const uint64_t s = c.dec.group.s();
  const Poly xs1 = (Poly::monomial(c.rep.field, 1, s - 1) - Poly::constant(c.rep.field, 1)) % f.poly;
  Common out;
  if (gcd(xs1.is_zero() ? f.poly : xs1, f.poly).degree() != 0) {
    panic("x^(s-1) - 1 is not invertible modulo " + f.poly.to_string());
  }
  out.ell = inverse_mod(xs1, f.poly);
  out.ef = c.ef(index);
  out.xi = c.root(index);
  out.xis = c.E.pow(out.xi, s);
  const FieldElem t = c.E.pow(out.xi, s - 1);
  // P(xi) = -xi^(s-1) / (1 - xi^(s-1))
  out.p_value = c.E.div(c.E.neg(t), c.E.sub(c.E.one(), t));
  return out;
}

// Some w in F_q(xi) with w * w^sigma = t, where sigma swaps xi and xi^s and t
// lies in the fixed field K0. With delta = xi - xi^s the norm of a + b*delta
// is a^2 - b^2 delta^2, so it suffices to find b in K0 making t + b^2 delta^2
// a square in K0.
FieldElem norm_preimage(const Ctx& c, size_t index, const FieldElem& t) {
  const Field& E = c.E;
  const uint64_t s = c.dec.group.s();
  const unsigned half = static_cast<unsigned>(c.rep.factors[index].coset.size() / 2);
  const FieldElem xi = c.root(index);
  const FieldElem delta = E.sub(xi, E.pow(xi, s));
  const FieldElem d2 = E.mul(delta, delta);
  const uint64_t p = E.characteristic();
  for (uint64_t j = 0; j < 4 * c.N + 4; ++j) {
    const FieldElem base = E.add(E.pow(xi, j), E.pow(xi, j * s));
    for (uint64_t k = 0; k < p; ++k) {
      const FieldElem b = E.add(base, E.from_int(static_cast<int64_t>(k)));
      const FieldElem v = E.add(t, E.mul(E.mul(b, b), d2));
      auto a = E.sqrt(v);
      if (!a || !E.in_subfield(*a, half)) continue;
      return E.add(*a, E.mul(b, delta));
    }
  }
  panic("no element of the required norm found");
}

NonCentralPair split_type_pair(const Ctx& c, size_t index, const std::string& tag) {
  const Common k = common(c, index);
  const Poly one = Poly::constant(c.rep.field, 1);
  Attempt at;
  at.formula = c.element(k.ef * (k.ell + one), -(k.ef * k.ell));
  at.p_value = k.p_value;
  const FieldElem t = c.E.pow(k.xi, c.dec.group.s() - 1);
  at.q_value = c.E.inv(c.E.sub(c.E.one(), t));
  return finish_pair(c, index, tag, at);
}

}  // namespace

IdempotentSet central_idempotents(const Decomposition& dec, const AlgebraPtr& A) {
  const Ctx c(dec, A);
  IdempotentSet out;
  for (size_t ci = 0; ci < dec.components.size(); ++ci) out.central.push_back(central_for_component(c, ci));
  return out;
}

IdempotentSet central_idempotents_split(const Decomposition& dec, const AlgebraPtr& A) {
  if (dec.group.kind() != GroupKind::Split) throw Error(Errc::InvalidArgument, "split group expected");
  return central_idempotents(dec, A);
}

IdempotentSet central_idempotents_nonsplit(const Decomposition& dec, const AlgebraPtr& A) {
  if (dec.group.kind() != GroupKind::NonSplit) throw Error(Errc::InvalidArgument, "non-split group expected");
  return central_idempotents(dec, A);
}

NonCentralPair noncentral_split(const Decomposition& dec, const AlgebraPtr& A, size_t factor) {
  const Ctx c(dec, A);
  if (dec.group.kind() != GroupKind::Split) throw Error(Errc::PreconditionFactor, "split group expected");
  require_splittable(c, factor);
  return split_type_pair(c, factor, "split");
}

NonCentralPair noncentral_nonsplit(const Decomposition& dec, const AlgebraPtr& A, size_t factor,
                                   bool interpolation_fallback) {
  const Ctx c(dec, A);
  const GroupPresentation& g = dec.group;
  if (g.kind() != GroupKind::NonSplit) throw Error(Errc::PreconditionFactor, "non-split group expected");
  if (factor >= c.rep.factors.size()) throw Error(Errc::PreconditionFactor, "factor index out of range");
  const uint64_t q = g.q();
  const unsigned vn = padic_valuation(2, static_cast<int64_t>(g.n()));
  const unsigned vq = padic_valuation(2, static_cast<int64_t>(q + 1));
  const CosetFactor& f = c.rep.factors[factor];
  const bool plus_side = g.n() % f.root_order != 0;
  // No factor of x^n + 1 is self-involutive in this subcase, so it is
  // reported before the factor precondition.
  if (plus_side && q % 4 == 3 && vn > vq && g.s() % 4 == 3 && !interpolation_fallback) {
    throw Error(Errc::CaseUnavailable, "no closed formula for q=3 mod 4, v2(n)>v2(q+1), s=3 mod 4");
  }
  require_splittable(c, factor);
  if (!plus_side) return split_type_pair(c, factor, "x^n=1");

  const Common k = common(c, factor);
  const Poly one = Poly::constant(c.rep.field, 1);
  const Field& E = c.E;
  const FieldElem D = E.sub(k.xi, k.xis);
  Attempt at;
  at.p_value = k.p_value;
  std::string tag;
  if (q % 4 == 1) {
    tag = "q=1 mod 4";
    const FieldElem& beta = c.sf.beta;
    ensure(E.in_base(beta), "beta must lie in F_q when q = 1 mod 4");
    const Poly pl = k.ef * (k.ell + one);
    at.formula = c.element(pl, pl.scale(beta.coeffs[0]));
    const FieldElem t = E.pow(k.xi, g.s() - 1);
    at.q_value = E.div(E.neg(E.mul(beta, t)), E.sub(E.one(), t));
  } else if (vn > vq && g.s() % 4 == 1) {
    tag = "q=3 mod 4, v2(n)>v2(q+1), s=1 mod 4";
    const Poly pl = k.ef * (k.ell + one);
    at.formula = c.element(pl, pl * c.xpow(static_cast<int64_t>(g.n() / 2)));
    at.q_value = E.div(E.neg(E.pow(k.xi, g.n() / 2 + g.s())), D);
  } else if (vn <= vq) {
    tag = "q=3 mod 4, v2(n)<=v2(q+1)";
    const Poly lf = k.ef * k.ell * formal_derivative(f.poly);
    at.formula = c.element(-(lf * c.xpow(static_cast<int64_t>(g.s()))), lf);
    at.q_value = E.inv(D);
    at.norm_q_value = E.div(norm_preimage(c, factor, E.neg(E.mul(k.xi, k.xis))), D);
  } else {
    tag = "q=3 mod 4, v2(n)>v2(q+1), s=3 mod 4";
    at.norm_q_value = E.div(norm_preimage(c, factor, E.neg(E.mul(k.xi, k.xis))), D);
  }
  return finish_pair(c, factor, tag, at);
}

IdempotentSet all_idempotents(const Decomposition& dec, const AlgebraPtr& A, bool include_noncentral,
                              bool interpolation_fallback) {
  IdempotentSet out = central_idempotents(dec, A);
  if (!include_noncentral) return out;
  const auto& fs = dec.factorization.factors;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].self_involutive || fs[i].divides_xd) continue;
    if (dec.group.kind() == GroupKind::Split) {
      out.noncentral.push_back(noncentral_split(dec, A, i));
      continue;
    }
    try {
      out.noncentral.push_back(noncentral_nonsplit(dec, A, i, interpolation_fallback));
    } catch (const Error& e) {
      if (e.code() != Errc::CaseUnavailable) throw;
      out.unavailable.push_back(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace fqg
