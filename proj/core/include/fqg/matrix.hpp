#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqg/ffield.hpp"

namespace fqg {

/// Small square matrix over an arbitrary (possibly uncoded) finite field.
/// Used for the l x l generator images, l in {1, 2}.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, size_t size);
  FieldMatrix(FieldPtr field, std::vector<std::vector<FieldElem>> rows);

  static FieldMatrix identity(const FieldPtr& field, size_t size);
  static FieldMatrix scalar(const FieldPtr& field, size_t size, const FieldElem& c);

  size_t size() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const FieldElem& at(size_t i, size_t j) const { return a_[i * n_ + j]; }
  FieldElem& at(size_t i, size_t j) { return a_[i * n_ + j]; }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix scaled(const FieldElem& c) const;
  FieldMatrix pow(uint64_t e) const;
  bool operator==(const FieldMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  bool is_zero() const;
  /// True when every entry is fixed by the m-th power of the base Frobenius.
  bool entries_in_subfield(unsigned m) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  size_t n_ = 0;
  std::vector<FieldElem> a_;
};

/// Dense rows x cols matrix of codes over a coded field, with exact Gaussian
/// elimination. Pivots are the first nonzero entry in column order.
class CodeMatrix {
 public:
  CodeMatrix(FieldPtr field, size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  const FieldPtr& field() const { return field_; }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<size_t> rref();
  size_t rank() const;
  /// Basis of {v : A v = 0}.
  std::vector<std::vector<uint32_t>> nullspace() const;
  /// Some solution of A v = b, or nullopt when inconsistent.
  std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& b) const;

 private:
  FieldPtr field_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

}  // namespace fqg
