#include "curvinv/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace curvinv {

namespace {

// target -= factor * src, skipping the zeros of src.
void submul(std::vector<Rational>& target, const Rational& factor, const std::vector<Rational>& src) {
  Rational tmp;
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (sgn(src[j]) == 0) continue;
    tmp = factor;
    tmp *= src[j];
    target[j] -= tmp;
  }
}

// Incrementally maintained reduced row echelon form: pivots are 1, their
// columns are zero elsewhere, rows ordered by pivot column. Feeding the
// rows of a matrix in any order yields the unique RREF of its row space.
class RrefBuilder {
 public:
  explicit RrefBuilder(std::size_t cols) : cols_(cols) {}

  void insert(std::vector<Rational> v) {
    assert(v.size() == cols_);
    reduce(v);
    std::size_t p = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) {
        p = j;
        break;
      }
    }
    if (p == cols_) return;  // linearly dependent
    if (v[p] != 1) {
      const Rational inv = 1 / v[p];
      for (auto& x : v) {
        if (sgn(x) != 0) x *= inv;
      }
    }
    for (auto& row : rows_) {
      if (sgn(row[p]) != 0) {
        const Rational factor = row[p];
        submul(row, factor, v);
      }
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  }

  // Reduces v against the accumulated rows; true iff v reduced to zero.
  bool reduce(std::vector<Rational>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(v[pivots_[i]]) != 0) {
        const Rational factor = v[pivots_[i]];
        submul(v, factor, rows_[i]);
      }
    }
    for (const auto& x : v) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::vector<Rational>> take_rows() { return std::move(rows_); }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

DenseMatrix basis_matrix(const SubspaceBasis& s) {
  DenseMatrix m(s.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
      m.at(i, j) = s.vectors()[i][j];
    }
  }
  return m;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> DenseMatrix::row(std::size_t r) const {
  assert(r < rows_);
  return std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Rational> DenseMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix apply: length mismatch");
  std::vector<Rational> y(rows_);
  Rational tmp;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = entries_[r * cols_ + c];
      if (sgn(a) == 0 || sgn(x[c]) == 0) continue;
      tmp = a;
      tmp *= x[c];
      y[r] += tmp;
    }
  }
  return y;
}

bool DenseMatrix::operator==(const DenseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<std::vector<Rational>> generators)
    : ambient_dim_(ambient_dim) {
  RrefBuilder rref(ambient_dim);
  for (auto& g : generators) {
    if (g.size() != ambient_dim) {
      throw std::invalid_argument("subspace: generator length does not match ambient dimension");
    }
    rref.insert(std::move(g));
  }
  vectors_ = rref.take_rows();
}

bool SubspaceBasis::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_dim_) {
    throw std::invalid_argument("subspace contains: vector length does not match ambient dimension");
  }
  std::vector<Rational> w = v;
  for (const auto& row : vectors_) {
    std::size_t p = ambient_dim_;
    for (std::size_t j = 0; j < ambient_dim_; ++j) {
      if (sgn(row[j]) != 0) {
        p = j;
        break;
      }
    }
    assert(p < ambient_dim_);
    if (sgn(w[p]) != 0) {
      const Rational factor = w[p];
      submul(w, factor, row);
    }
  }
  for (const auto& x : w) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
  return ambient_dim_ == other.ambient_dim_ && vectors_ == other.vectors_;
}

std::size_t rank(const DenseMatrix& m) {
  RrefBuilder rref(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rref.insert(m.row(r));
  return rref.rows().size();
}

SubspaceBasis nullspace(const DenseMatrix& m) {
  RrefBuilder rref(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rref.insert(m.row(r));

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rref.pivots()) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> x(m.cols());
    x[free_col] = 1;
    for (std::size_t i = 0; i < rref.pivots().size(); ++i) {
      x[rref.pivots()[i]] = -rref.rows()[i][free_col];
    }
    basis.push_back(std::move(x));
  }
  return SubspaceBasis(m.cols(), std::move(basis));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  }
  const std::size_t d = a.ambient_dim();
  // A subspace is the annihilator of its own annihilator, so the
  // intersection is the joint kernel of the two annihilators.
  const SubspaceBasis na = nullspace(basis_matrix(a));
  const SubspaceBasis nb = nullspace(basis_matrix(b));
  DenseMatrix stacked(na.dim() + nb.dim(), d);
  for (std::size_t i = 0; i < na.dim(); ++i) {
    for (std::size_t j = 0; j < d; ++j) stacked.at(i, j) = na.vectors()[i][j];
  }
  for (std::size_t i = 0; i < nb.dim(); ++i) {
    for (std::size_t j = 0; j < d; ++j) stacked.at(na.dim() + i, j) = nb.vectors()[i][j];
  }
  return nullspace(stacked);
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  }
  return a.vectors() == b.vectors();
}

}  // namespace curvinv
