#include "curvinv/multilinear.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace curvinv {

TetraForm::TetraForm(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("tetra form: dimension must be positive");
  const std::size_t nn = static_cast<std::size_t>(n);
  coeff_.resize(nn * nn * nn * nn);
}

TetraForm TetraForm::from_coefficients(int n, std::vector<Rational> coeff) {
  TetraForm f(n);
  if (coeff.size() != f.coeff_.size()) {
    throw std::invalid_argument("tetra form: expected " + std::to_string(f.coeff_.size()) +
                                " coefficients, got " + std::to_string(coeff.size()));
  }
  f.coeff_ = std::move(coeff);
  return f;
}

std::size_t TetraForm::index(int i, int j, int k, int l) const {
  assert(i >= 0 && i < n_ && j >= 0 && j < n_ && k >= 0 && k < n_ && l >= 0 && l < n_);
  const std::size_t nn = static_cast<std::size_t>(n_);
  return ((static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)) * nn +
          static_cast<std::size_t>(k)) *
             nn +
         static_cast<std::size_t>(l);
}

bool TetraForm::is_zero() const {
  for (const auto& c : coeff_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

TetraForm& TetraForm::operator+=(const TetraForm& other) {
  assert(n_ == other.n_);
  for (std::size_t t = 0; t < coeff_.size(); ++t) coeff_[t] += other.coeff_[t];
  return *this;
}

TetraForm& TetraForm::operator-=(const TetraForm& other) {
  assert(n_ == other.n_);
  for (std::size_t t = 0; t < coeff_.size(); ++t) coeff_[t] -= other.coeff_[t];
  return *this;
}

TetraForm& TetraForm::operator*=(const Rational& scalar) {
  for (auto& c : coeff_) c *= scalar;
  return *this;
}

bool TetraForm::operator==(const TetraForm& other) const {
  return n_ == other.n_ && coeff_ == other.coeff_;
}

std::pair<std::array<int, 4>, int> wedge_sort(std::array<int, 4> legs) {
  int sign = 1;
  for (int i = 1; i < 4; ++i) {
    for (int j = i; j > 0 && legs[j - 1] >= legs[j]; --j) {
      if (legs[j - 1] == legs[j]) return {legs, 0};
      std::swap(legs[j - 1], legs[j]);
      sign = -sign;
    }
  }
  return {legs, sign};
}

int bidegree(const std::array<int, 4>& legs, int n) {
  int count = 0;
  for (int leg : legs) {
    if (leg < 0 || leg >= 2 * n) {
      throw std::invalid_argument("bidegree: leg " + std::to_string(leg) +
                                  " out of range for n=" + std::to_string(n));
    }
    if (leg < n) ++count;
  }
  return count;
}

WedgeBasis::WedgeBasis(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("wedge basis: dimension must be positive");
  const int dim_w = 2 * n;
  for (int a = 0; a < dim_w; ++a) {
    for (int b = a + 1; b < dim_w; ++b) {
      for (int c = b + 1; c < dim_w; ++c) {
        for (int d = c + 1; d < dim_w; ++d) {
          monomials_.push_back({a, b, c, d});
        }
      }
    }
  }
}

std::size_t WedgeBasis::rank_of(const std::array<int, 4>& sorted_legs) const {
  const auto it = std::lower_bound(monomials_.begin(), monomials_.end(), sorted_legs);
  if (it == monomials_.end() || *it != sorted_legs) {
    throw std::invalid_argument("wedge basis: not a canonical monomial for n=" + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - monomials_.begin());
}

const WedgeBasis& wedge_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<WedgeBasis>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<WedgeBasis>(n);
  return *slot;
}

ExteriorElement::ExteriorElement(int n) : n_(n) { coeff_.resize(wedge_basis(n).size()); }

ExteriorElement ExteriorElement::from_coefficients(int n, std::vector<Rational> coeff) {
  ExteriorElement x(n);
  if (coeff.size() != x.coeff_.size()) {
    throw std::invalid_argument("exterior element: expected " + std::to_string(x.coeff_.size()) +
                                " coefficients, got " + std::to_string(coeff.size()));
  }
  x.coeff_ = std::move(coeff);
  return x;
}

ExteriorElement ExteriorElement::monomial(int n, std::size_t rank) {
  ExteriorElement x(n);
  x.coeff_.at(rank) = 1;
  return x;
}

void ExteriorElement::add_term(const std::array<int, 4>& legs, const Rational& value) {
  const auto [sorted, sign] = wedge_sort(legs);
  if (sign == 0) return;
  const std::size_t rank = wedge_basis(n_).rank_of(sorted);
  if (sign > 0) {
    coeff_[rank] += value;
  } else {
    coeff_[rank] -= value;
  }
}

bool ExteriorElement::is_zero() const {
  for (const auto& c : coeff_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  assert(n_ == other.n_);
  for (std::size_t t = 0; t < coeff_.size(); ++t) coeff_[t] += other.coeff_[t];
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
  assert(n_ == other.n_);
  for (std::size_t t = 0; t < coeff_.size(); ++t) coeff_[t] -= other.coeff_[t];
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& scalar) {
  for (auto& c : coeff_) c *= scalar;
  return *this;
}

bool ExteriorElement::operator==(const ExteriorElement& other) const {
  return n_ == other.n_ && coeff_ == other.coeff_;
}

ExteriorElement bidegree_component(const ExteriorElement& x, int i) {
  if (i < 0 || i > 4) {
    throw std::invalid_argument("bidegree component: index " + std::to_string(i) + " out of range");
  }
  const WedgeBasis& basis = wedge_basis(x.n());
  ExteriorElement out(x.n());
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    if (bidegree(basis.monomial(rank), x.n()) == i) out.set_coeff(rank, x.coeff(rank));
  }
  return out;
}

}  // namespace curvinv
