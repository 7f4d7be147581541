#include "fqg/matrix.hpp"

#include <sstream>

namespace fqg {

FieldMatrix::FieldMatrix(FieldPtr field, size_t size)
    : field_(std::move(field)), n_(size), a_(size * size, field_->zero()) {}

FieldMatrix::FieldMatrix(FieldPtr field, std::vector<std::vector<FieldElem>> rows)
    : field_(std::move(field)), n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (auto& r : rows) {
    if (r.size() != n_) throw Error(Errc::InvalidArgument, "matrix rows must be square");
    for (auto& e : r) a_.push_back(std::move(e));
  }
}

FieldMatrix FieldMatrix::identity(const FieldPtr& field, size_t size) {
  return scalar(field, size, field->one());
}

FieldMatrix FieldMatrix::scalar(const FieldPtr& field, size_t size, const FieldElem& c) {
  FieldMatrix m(field, size);
  for (size_t i = 0; i < size; ++i) m.at(i, i) = c;
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  const Field& F = *field_;
  FieldMatrix r(field_, n_);
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) {
      FieldElem acc = F.zero();
      for (size_t k = 0; k < n_; ++k) acc = F.add(acc, F.mul(at(i, k), o.at(k, j)));
      r.at(i, j) = std::move(acc);
    }
  }
  return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  FieldMatrix r(field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  FieldMatrix r(field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
  return r;
}

FieldMatrix FieldMatrix::scaled(const FieldElem& c) const {
  FieldMatrix r(field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->mul(c, a_[i]);
  return r;
}

FieldMatrix FieldMatrix::pow(uint64_t e) const {
  FieldMatrix result = identity(field_, n_);
  FieldMatrix b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

bool FieldMatrix::is_zero() const {
  for (const auto& e : a_) {
    if (!field_->is_zero(e)) return false;
  }
  return true;
}

bool FieldMatrix::entries_in_subfield(unsigned m) const {
  for (const auto& e : a_) {
    if (!field_->in_subfield(e, m)) return false;
  }
  return true;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < n_; ++i) {
    os << (i ? ", " : "") << '[';
    for (size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << field_->to_string(at(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

CodeMatrix::CodeMatrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

std::vector<size_t> CodeMatrix::rref() {
  const Field& F = *field_;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = row;
    while (piv < rows_ && at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != row) {
      for (size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
    }
    const uint32_t inv = F.cinv(at(row, col));
    for (size_t j = col; j < cols_; ++j) at(row, j) = F.cmul(at(row, j), inv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const uint32_t c = at(i, col);
      for (size_t j = col; j < cols_; ++j) at(i, j) = F.csub(at(i, j), F.cmul(c, at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t CodeMatrix::rank() const {
  CodeMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<uint32_t>> CodeMatrix::nullspace() const {
  CodeMatrix r = *this;
  const auto pivots = r.rref();
  const Field& F = *field_;
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.cneg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<uint32_t>> CodeMatrix::solve(const std::vector<uint32_t>& b) const {
  if (b.size() != rows_) throw Error(Errc::InvalidArgument, "right-hand side has wrong length");
  CodeMatrix aug(field_, rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<uint32_t> x(cols_, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

}  // namespace fqg
