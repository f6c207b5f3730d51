#pragma once

#include "curvinv/linalg.hpp"
#include "curvinv/multilinear.hpp"

#include <array>

namespace curvinv {

// Determinant-1 2x2 matrix acting on U: u1 -> a·u1 + c·u2, u2 -> b·u1 + d·u2
// (standard column-vector convention for [[a,b],[c,d]]).
class SL2Element {
 public:
  SL2Element(Rational a, Rational b, Rational c, Rational d);

  static SL2Element identity();
  // u1 -> u2, u2 -> -u1, i.e. [[0,-1],[1,0]].
  static SL2Element rotation();
  // u1 -> u1, u2 -> u2 + lambda·u1, i.e. [[1,lambda],[0,1]].
  static SL2Element upper_unipotent(const Rational& lambda);
  // u1 -> u1 + lambda·u2, u2 -> u2, i.e. [[1,0],[lambda,1]].
  static SL2Element lower_unipotent(const Rational& lambda);
  // diag(mu, 1/mu); mu must be nonzero.
  static SL2Element torus(const Rational& mu);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  SL2Element operator*(const SL2Element& other) const;  // matrix product
  SL2Element inverse() const;

  bool operator==(const SL2Element& other) const;

 private:
  Rational a_, b_, c_, d_;
};

// Element x_e·e + x_f·f + x_h·h of sl(2) with the generator actions
// e·u2 = u1, e·u1 = 0; f·u1 = u2, f·u2 = 0; h·u1 = u1, h·u2 = -u2.
class SL2LieElement {
 public:
  SL2LieElement(Rational x_e, Rational x_f, Rational x_h);

  static SL2LieElement e();
  static SL2LieElement f();
  static SL2LieElement h();

  const Rational& coeff_e() const { return e_; }
  const Rational& coeff_f() const { return f_; }
  const Rational& coeff_h() const { return h_; }

  // [this, other] via the 2x2 matrix commutator on U.
  SL2LieElement bracket(const SL2LieElement& other) const;

  bool operator==(const SL2LieElement& other) const;

 private:
  Rational e_, f_, h_;
};

// Action of g on the U factor of every wedge leg, extended multiplicatively
// to monomials. Linear in x; satisfies group_act(g1, group_act(g2, x)) =
// group_act(g1*g2, x).
ExteriorElement group_act(const SL2Element& g, const ExteriorElement& x);

// Leibniz extension of the sl(2) action: acts on one leg at a time and sums
// the four single-leg contributions. Linear in X and in x.
ExteriorElement lie_act(const SL2LieElement& X, const ExteriorElement& x);

// Torus weight 2·bidegree - 4: the eigenvalue of lie_act(h, ·) on this
// monomial.
int weight_of(const std::array<int, 4>& legs, int n);

// Matrix of lie_act(X, ·) on the canonical monomial basis of Λ⁴(W).
DenseMatrix lie_operator_matrix(const SL2LieElement& X, int n);

// Joint kernel of the h- and e-actions: weight-0 vectors killed by the
// raising operator, i.e. invariants of the triangular subgroup (torus plus
// the family u2 -> u2 + lambda·u1). Ambient dimension C(2n,4).
SubspaceBasis sb2_invariants(int n);

// Joint kernel of the e-, f- and h-actions: full Lie-algebra invariance,
// the invariance notion adopted for the connected group over Q.
SubspaceBasis sl2_invariants(int n);

// Triangular invariance already forces full invariance: the two subspaces
// coincide. Expected true for every n.
bool verify_lemma(int n);

// The weight-0 subspace of Λ⁴(W) is exactly the span of the bidegree-2
// monomials, of dimension C(n,2)^2.
bool weight_zero_equals_bidegree2(int n);

}  // namespace curvinv
