#pragma once

#include "curvinv/rational.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace curvinv {

// Dense tetralinear form on an n-dimensional space V: the value on every
// basis quadruple (e_i, e_j, e_k, e_l), n^4 coefficients in row-major
// (i,j,k,l) order.
class TetraForm {
 public:
  explicit TetraForm(int n);
  static TetraForm from_coefficients(int n, std::vector<Rational> coeff);

  int n() const { return n_; }
  const Rational& at(int i, int j, int k, int l) const { return coeff_[index(i, j, k, l)]; }
  void set(int i, int j, int k, int l, Rational value) { coeff_[index(i, j, k, l)] = std::move(value); }
  void add(int i, int j, int k, int l, const Rational& value) { coeff_[index(i, j, k, l)] += value; }

  const std::vector<Rational>& coefficients() const { return coeff_; }
  bool is_zero() const;

  TetraForm& operator+=(const TetraForm& other);
  TetraForm& operator-=(const TetraForm& other);
  TetraForm& operator*=(const Rational& scalar);
  friend TetraForm operator+(TetraForm a, const TetraForm& b) { return a += b; }
  friend TetraForm operator-(TetraForm a, const TetraForm& b) { return a -= b; }
  friend TetraForm operator*(const Rational& s, TetraForm f) { return f *= s; }

  bool operator==(const TetraForm& other) const;

 private:
  std::size_t index(int i, int j, int k, int l) const;

  int n_ = 0;
  std::vector<Rational> coeff_;
};

// Basis convention for W = U⊗V* of dimension 2n: legs 0..n-1 are
// u1⊗e*_0..u1⊗e*_{n-1}, legs n..2n-1 are u2⊗e*_0..u2⊗e*_{n-1}.

// Sorts four W legs into the canonical strictly increasing order and
// returns the sign of the sorting permutation; sign 0 when a leg repeats
// (the returned legs are meaningless in that case).
std::pair<std::array<int, 4>, int> wedge_sort(std::array<int, 4> legs);

// Number of legs in the u1 block (value < n). Throws std::invalid_argument
// when a leg is outside [0, 2n).
int bidegree(const std::array<int, 4>& legs, int n);

// Canonical monomial basis of Λ⁴(W): all strictly increasing 4-tuples of
// W legs in lexicographic order, C(2n,4) of them.
class WedgeBasis {
 public:
  explicit WedgeBasis(int n);

  int n() const { return n_; }
  std::size_t size() const { return monomials_.size(); }
  const std::array<int, 4>& monomial(std::size_t rank) const { return monomials_[rank]; }
  std::size_t rank_of(const std::array<int, 4>& sorted_legs) const;

 private:
  int n_ = 0;
  std::vector<std::array<int, 4>> monomials_;
};

// Shared per-n basis table; safe to call from multiple threads.
const WedgeBasis& wedge_basis(int n);

// Element of Λ⁴(W), one coefficient per canonical wedge monomial.
class ExteriorElement {
 public:
  explicit ExteriorElement(int n);
  static ExteriorElement from_coefficients(int n, std::vector<Rational> coeff);
  static ExteriorElement monomial(int n, std::size_t rank);  // unit coefficient

  int n() const { return n_; }
  std::size_t size() const { return coeff_.size(); }
  const Rational& coeff(std::size_t rank) const { return coeff_[rank]; }
  void set_coeff(std::size_t rank, Rational value) { coeff_[rank] = std::move(value); }

  // Accumulates value on the monomial with the given (possibly unsorted)
  // legs, folding in the wedge sign; a repeated leg contributes nothing.
  void add_term(const std::array<int, 4>& legs, const Rational& value);

  const std::vector<Rational>& coefficients() const { return coeff_; }
  bool is_zero() const;

  ExteriorElement& operator+=(const ExteriorElement& other);
  ExteriorElement& operator-=(const ExteriorElement& other);
  ExteriorElement& operator*=(const Rational& scalar);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(const Rational& s, ExteriorElement x) { return x *= s; }

  bool operator==(const ExteriorElement& other) const;

 private:
  int n_ = 0;
  std::vector<Rational> coeff_;
};

// Projection onto the monomials with exactly i legs in the u1 block.
// The five components (i = 0..4) sum back to x. Throws when i is outside
// [0, 4].
ExteriorElement bidegree_component(const ExteriorElement& x, int i);

}  // namespace curvinv
