#include "fqg/oracle.hpp"

#include <map>
#include <random>

#include "fqg/numtheory.hpp"

namespace fqg {

AlgebraPtr GroupAlgebra::make(const GroupPresentation& g, const FieldPtr& Fq) {
  if (static_cast<uint64_t>(Fq->order()) != g.q()) {
    throw Error(Errc::FieldMismatch, "field order differs from the group's q");
  }
  std::shared_ptr<GroupAlgebra> A(new GroupAlgebra());
  A->g_ = g;
  A->field_ = Fq;
  A->order_ = g.order();
  const uint64_t N = g.N();
  const uint64_t s = g.s() % N;
  const uint64_t y2 = g.kind() == GroupKind::Split ? 0 : g.n() % N;
  A->table_.resize(A->order_ * A->order_);
  for (size_t a = 0; a < A->order_; ++a) {
    const uint64_t i = a % N;
    const unsigned j = static_cast<unsigned>(a / N);
    for (size_t b = 0; b < A->order_; ++b) {
      const uint64_t k = b % N;
      const unsigned l = static_cast<unsigned>(b / N);
      // x^i y^j x^k y^l = x^(i + k s^j) y^(j + l)
      uint64_t e = (i + (j ? k * s : k)) % N;
      unsigned yy = j + l;
      if (yy == 2) {
        e = (e + y2) % N;
        yy = 0;
      }
      A->table_[a * A->order_ + b] = static_cast<uint32_t>(yy * N + e);
    }
  }
  return A;
}

size_t GroupAlgebra::index(int64_t i, unsigned j) const {
  return j * g_.N() + static_cast<size_t>(mod_floor(i, static_cast<int64_t>(g_.N())));
}

bool GroupAlgebra::associative(uint64_t seed, size_t samples) const {
  if (order_ <= 32) {
    for (size_t a = 0; a < order_; ++a)
      for (size_t b = 0; b < order_; ++b)
        for (size_t c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, order_ - 1);
  for (size_t t = 0; t < samples; ++t) {
    const size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<uint32_t> coeffs)
    : A_(std::move(algebra)), c_(std::move(coeffs)) {
  if (c_.size() != A_->order()) throw Error(Errc::InvalidArgument, "coefficient vector has wrong length");
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& A) {
  return AlgebraElement(A, std::vector<uint32_t>(A->order(), 0));
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& A) { return basis(A, 0); }

AlgebraElement AlgebraElement::basis(const AlgebraPtr& A, size_t index) {
  AlgebraElement e = zero(A);
  e.c_.at(index) = 1;
  return e;
}

AlgebraElement AlgebraElement::from_polys(const AlgebraPtr& A, const Poly& P, const Poly& Q) {
  AlgebraElement e = zero(A);
  const Field& F = *A->field();
  const size_t N = A->group().N();
  for (size_t k = 0; k < P.coeffs().size(); ++k) {
    e.c_[k % N] = F.cadd(e.c_[k % N], P.coeff(k));
  }
  for (size_t k = 0; k < Q.coeffs().size(); ++k) {
    e.c_[N + k % N] = F.cadd(e.c_[N + k % N], Q.coeff(k));
  }
  return e;
}

bool AlgebraElement::is_zero() const {
  for (uint32_t c : c_) {
    if (c) return false;
  }
  return true;
}

Poly AlgebraElement::P() const {
  const size_t N = A_->group().N();
  return Poly(A_->field(), std::vector<uint32_t>(c_.begin(), c_.begin() + N));
}

Poly AlgebraElement::Q() const {
  const size_t N = A_->group().N();
  return Poly(A_->field(), std::vector<uint32_t>(c_.begin() + N, c_.end()));
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (A_ != o.A_ && !(A_->group() == o.A_->group() && A_->field()->same_as(*o.A_->field()))) {
    throw Error(Errc::GroupMismatch, "elements of different group algebras");
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same(o);
  AlgebraElement r = *this;
  const Field& F = *A_->field();
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.cadd(c_[i], o.c_[i]);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_same(o);
  AlgebraElement r = *this;
  const Field& F = *A_->field();
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.csub(c_[i], o.c_[i]);
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& c : r.c_) c = A_->field()->cneg(c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same(o);
  const Field& F = *A_->field();
  const size_t n = c_.size();
  AlgebraElement r = zero(A_);
  for (size_t a = 0; a < n; ++a) {
    if (c_[a] == 0) continue;
    for (size_t b = 0; b < n; ++b) {
      if (o.c_[b] == 0) continue;
      const size_t ab = A_->mul(a, b);
      r.c_[ab] = F.cadd(r.c_[ab], F.cmul(c_[a], o.c_[b]));
    }
  }
  return r;
}

AlgebraElement AlgebraElement::scaled(uint32_t c) const {
  AlgebraElement r = *this;
  for (auto& v : r.c_) v = A_->field()->cmul(c, v);
  return r;
}

AlgebraElement AlgebraElement::pow(uint64_t e) const {
  AlgebraElement result = one(A_);
  AlgebraElement b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  check_same(o);
  return c_ == o.c_;
}

namespace {

// Columns are basis elements g; rows stack g*x - x*g and g*y - y*g.
CodeMatrix commutator_system(const AlgebraPtr& A) {
  const size_t n = A->order();
  const Field& F = *A->field();
  const size_t gx = A->index(1, 0), gy = A->index(0, 1);
  CodeMatrix M(A->field(), 2 * n, n);
  for (size_t g = 0; g < n; ++g) {
    M.at(A->mul(g, gx), g) = F.cadd(M.at(A->mul(g, gx), g), 1);
    M.at(A->mul(gx, g), g) = F.csub(M.at(A->mul(gx, g), g), 1);
    M.at(n + A->mul(g, gy), g) = F.cadd(M.at(n + A->mul(g, gy), g), 1);
    M.at(n + A->mul(gy, g), g) = F.csub(M.at(n + A->mul(gy, g), g), 1);
  }
  return M;
}

}  // namespace

std::vector<AlgebraElement> center_basis(const AlgebraPtr& A) {
  std::vector<AlgebraElement> out;
  for (auto& v : commutator_system(A).nullspace()) out.emplace_back(A, std::move(v));
  return out;
}

size_t center_component_count(const AlgebraPtr& A) {
  const auto basis = center_basis(A);
  const size_t k = basis.size();
  const size_t n = A->order();
  const uint64_t q = A->group().q();
  // Write frob(z_i) - z_i in group coordinates; the kernel of this map on
  // span(z_i) is the Frobenius-fixed subalgebra.
  CodeMatrix M(A->field(), n, k);
  for (size_t i = 0; i < k; ++i) {
    const AlgebraElement img = basis[i].pow(q) - basis[i];
    for (size_t r = 0; r < n; ++r) M.at(r, i) = img.coeff(r);
  }
  return k - M.rank();
}

bool is_idempotent(const AlgebraElement& e) { return e * e == e; }

bool is_central(const AlgebraElement& e) {
  const AlgebraPtr& A = e.algebra();
  const auto x = AlgebraElement::basis(A, A->index(1, 0));
  const auto y = AlgebraElement::basis(A, A->index(0, 1));
  return e * x == x * e && e * y == y * e;
}

bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b) {
  return (a * b).is_zero() && (b * a).is_zero();
}

bool sums_to_one(const std::vector<AlgebraElement>& es) {
  if (es.empty()) return false;
  AlgebraElement acc = AlgebraElement::zero(es.front().algebra());
  for (const auto& e : es) acc = acc + e;
  return acc == AlgebraElement::one(es.front().algebra());
}

std::vector<CensusEntry> perlis_walker_census(const GroupPresentation& g) {
  const uint64_t d = g.d();
  const uint64_t y2 = g.kind() == GroupKind::Split ? 0 : g.n() % d;
  // In G/<x^d> the image of x is central, so x^i y^j multiply componentwise
  // with y^2 = x^y2.
  auto mul = [&](std::pair<uint64_t, unsigned> a, std::pair<uint64_t, unsigned> b) {
    uint64_t e = (a.first + b.first) % d;
    unsigned j = a.second + b.second;
    if (j == 2) {
      e = (e + y2) % d;
      j = 0;
    }
    return std::pair<uint64_t, unsigned>{e, j};
  };
  std::map<uint64_t, uint64_t> counts;
  for (unsigned j = 0; j < 2; ++j) {
    for (uint64_t i = 0; i < d; ++i) {
      const std::pair<uint64_t, unsigned> el{i, j};
      auto cur = el;
      uint64_t order = 1;
      while (cur != std::pair<uint64_t, unsigned>{0, 0}) {
        cur = mul(cur, el);
        ++order;
      }
      ++counts[order];
    }
  }
  std::vector<CensusEntry> out;
  for (auto [l, c] : counts) {
    CensusEntry e;
    e.l = l;
    e.elements = c;
    e.degree = ord_mod(l, static_cast<int64_t>(g.q()));
    ensure(c % e.degree == 0, "order census not divisible by residue degree");
    e.components = c / e.degree;
    out.push_back(e);
  }
  return out;
}

AlgebraElement interpolate(const AlgebraPtr& A, const std::vector<Prescription>& prescriptions) {
  const size_t n = A->order();
  size_t rows = 0;
  for (const auto& p : prescriptions) {
    if (p.images.size() != n) throw Error(Errc::InvalidArgument, "prescription needs one image per group element");
    const size_t l = p.target.size();
    rows += l * l * p.target.field()->degree();
  }
  const FieldPtr& Fq = A->field();
  CodeMatrix M(Fq, rows, n);
  std::vector<uint32_t> rhs(rows, 0);
  size_t row = 0;
  for (const auto& p : prescriptions) {
    const Field& E = *p.target.field();
    if (!E.base() || !E.base()->same_as(*Fq)) {
      throw Error(Errc::FieldMismatch, "prescriptions must live in an extension of F_q");
    }
    const size_t l = p.target.size();
    for (size_t a = 0; a < l; ++a) {
      for (size_t b = 0; b < l; ++b) {
        for (unsigned k = 0; k < E.degree(); ++k, ++row) {
          for (size_t g = 0; g < n; ++g) M.at(row, g) = p.images[g].at(a, b).coeffs[k];
          rhs[row] = p.target.at(a, b).coeffs[k];
        }
      }
    }
  }
  auto sol = M.solve(rhs);
  if (!sol) throw Error(Errc::InconsistentPrescription, "no group algebra element has the prescribed images");
  return AlgebraElement(A, std::move(*sol));
}

}  // namespace fqg
