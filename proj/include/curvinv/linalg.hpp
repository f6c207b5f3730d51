#pragma once

#include "curvinv/rational.hpp"

#include <cstddef>
#include <vector>

namespace curvinv {

// Dense row-major matrix of exact rationals.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;

  // m·x; x must have cols() entries.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  bool operator==(const DenseMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// A linear subspace of Q^d held as a reduced-row-echelon basis: pivot
// entries are 1 with zeros above and below, rows ordered by pivot column.
// The representation is unique per subspace, so equal subspaces compare
// equal entry for entry.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim);  // zero subspace
  SubspaceBasis(std::size_t ambient_dim, std::vector<std::vector<Rational>> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }

  bool contains(const std::vector<Rational>& v) const;

  bool operator==(const SubspaceBasis& other) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<std::vector<Rational>> vectors_;
};

std::size_t rank(const DenseMatrix& m);

// Canonical basis of { x : m·x = 0 }. A matrix with no rows annihilates
// nothing, so its nullspace is the whole column space.
SubspaceBasis nullspace(const DenseMatrix& m);

// Canonical basis of a ∩ b. Throws std::invalid_argument on ambient
// dimension mismatch.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// True iff the spanned subspaces coincide; both operands are canonical, so
// this is representation equality. Throws on ambient dimension mismatch.
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace curvinv
