#include "curvinv/sl2.hpp"

#include <stdexcept>
#include <utility>

namespace curvinv {

SL2Element::SL2Element(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Rational det = a_ * d_;
  det -= b_ * c_;
  if (det != 1) {
    throw std::invalid_argument("sl2 element: determinant must be 1, got " + to_string(det));
  }
}

SL2Element SL2Element::identity() { return SL2Element(1, 0, 0, 1); }

SL2Element SL2Element::rotation() { return SL2Element(0, -1, 1, 0); }

SL2Element SL2Element::upper_unipotent(const Rational& lambda) {
  return SL2Element(1, lambda, 0, 1);
}

SL2Element SL2Element::lower_unipotent(const Rational& lambda) {
  return SL2Element(1, 0, lambda, 1);
}

SL2Element SL2Element::torus(const Rational& mu) {
  if (sgn(mu) == 0) throw std::invalid_argument("sl2 torus: mu must be nonzero");
  return SL2Element(mu, 0, 0, 1 / mu);
}

SL2Element SL2Element::operator*(const SL2Element& other) const {
  return SL2Element(a_ * other.a_ + b_ * other.c_, a_ * other.b_ + b_ * other.d_,
                    c_ * other.a_ + d_ * other.c_, c_ * other.b_ + d_ * other.d_);
}

SL2Element SL2Element::inverse() const { return SL2Element(d_, -b_, -c_, a_); }

bool SL2Element::operator==(const SL2Element& other) const {
  return a_ == other.a_ && b_ == other.b_ && c_ == other.c_ && d_ == other.d_;
}

SL2LieElement::SL2LieElement(Rational x_e, Rational x_f, Rational x_h)
    : e_(std::move(x_e)), f_(std::move(x_f)), h_(std::move(x_h)) {}

SL2LieElement SL2LieElement::e() { return SL2LieElement(1, 0, 0); }
SL2LieElement SL2LieElement::f() { return SL2LieElement(0, 1, 0); }
SL2LieElement SL2LieElement::h() { return SL2LieElement(0, 0, 1); }

SL2LieElement SL2LieElement::bracket(const SL2LieElement& other) const {
  // On U this element is the matrix [[h, e], [f, -h]]; the commutator of
  // two such matrices is again traceless.
  const Rational& xe = e_;
  const Rational& xf = f_;
  const Rational& xh = h_;
  const Rational& ye = other.e_;
  const Rational& yf = other.f_;
  const Rational& yh = other.h_;
  Rational ze = 2 * (xh * ye - xe * yh);
  Rational zf = 2 * (xf * yh - xh * yf);
  Rational zh = xe * yf - xf * ye;
  return SL2LieElement(std::move(ze), std::move(zf), std::move(zh));
}

bool SL2LieElement::operator==(const SL2LieElement& other) const {
  return e_ == other.e_ && f_ == other.f_ && h_ == other.h_;
}

namespace {

struct LegTerm {
  int target = 0;
  Rational coeff;
};

// g·w_p expanded in the W basis: two terms, one per block.
std::array<LegTerm, 2> group_leg_images(const SL2Element& g, int leg, int n) {
  if (leg < n) {
    return {LegTerm{leg, g.a()}, LegTerm{leg + n, g.c()}};
  }
  return {LegTerm{leg - n, g.b()}, LegTerm{leg, g.d()}};
}

// X·w_p expanded in the W basis.
std::array<LegTerm, 2> lie_leg_images(const SL2LieElement& X, int leg, int n) {
  if (leg < n) {
    return {LegTerm{leg, X.coeff_h()}, LegTerm{leg + n, X.coeff_f()}};
  }
  return {LegTerm{leg - n, X.coeff_e()}, LegTerm{leg, -X.coeff_h()}};
}

}  // namespace

ExteriorElement group_act(const SL2Element& g, const ExteriorElement& x) {
  const int n = x.n();
  const WedgeBasis& basis = wedge_basis(n);
  ExteriorElement out(n);
  Rational coeff;
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const Rational& q = x.coeff(m);
    if (sgn(q) == 0) continue;
    const auto& legs = basis.monomial(m);
    std::array<std::array<LegTerm, 2>, 4> images;
    for (int t = 0; t < 4; ++t) images[t] = group_leg_images(g, legs[t], n);
    for (int mask = 0; mask < 16; ++mask) {
      coeff = q;
      std::array<int, 4> target{};
      bool vanished = false;
      for (int t = 0; t < 4; ++t) {
        const LegTerm& term = images[t][(mask >> t) & 1];
        if (sgn(term.coeff) == 0) {
          vanished = true;
          break;
        }
        coeff *= term.coeff;
        target[t] = term.target;
      }
      if (vanished) continue;
      out.add_term(target, coeff);
    }
  }
  return out;
}

ExteriorElement lie_act(const SL2LieElement& X, const ExteriorElement& x) {
  const int n = x.n();
  const WedgeBasis& basis = wedge_basis(n);
  ExteriorElement out(n);
  Rational coeff;
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const Rational& q = x.coeff(m);
    if (sgn(q) == 0) continue;
    const auto& legs = basis.monomial(m);
    for (int t = 0; t < 4; ++t) {
      for (const LegTerm& term : lie_leg_images(X, legs[t], n)) {
        if (sgn(term.coeff) == 0) continue;
        std::array<int, 4> target = legs;
        target[t] = term.target;
        coeff = q;
        coeff *= term.coeff;
        out.add_term(target, coeff);
      }
    }
  }
  return out;
}

int weight_of(const std::array<int, 4>& legs, int n) { return 2 * bidegree(legs, n) - 4; }

DenseMatrix lie_operator_matrix(const SL2LieElement& X, int n) {
  const WedgeBasis& basis = wedge_basis(n);
  const std::size_t dim = basis.size();
  DenseMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const ExteriorElement image = lie_act(X, ExteriorElement::monomial(n, c));
    for (std::size_t r = 0; r < dim; ++r) {
      if (sgn(image.coeff(r)) != 0) m.at(r, c) = image.coeff(r);
    }
  }
  return m;
}

SubspaceBasis sb2_invariants(int n) {
  const SubspaceBasis ker_h = nullspace(lie_operator_matrix(SL2LieElement::h(), n));
  const SubspaceBasis ker_e = nullspace(lie_operator_matrix(SL2LieElement::e(), n));
  return intersect(ker_h, ker_e);
}

SubspaceBasis sl2_invariants(int n) {
  const SubspaceBasis ker_e = nullspace(lie_operator_matrix(SL2LieElement::e(), n));
  const SubspaceBasis ker_f = nullspace(lie_operator_matrix(SL2LieElement::f(), n));
  const SubspaceBasis ker_h = nullspace(lie_operator_matrix(SL2LieElement::h(), n));
  return intersect(intersect(ker_e, ker_f), ker_h);
}

bool verify_lemma(int n) { return subspace_equal(sb2_invariants(n), sl2_invariants(n)); }

bool weight_zero_equals_bidegree2(int n) {
  const WedgeBasis& basis = wedge_basis(n);
  const SubspaceBasis ker_h = nullspace(lie_operator_matrix(SL2LieElement::h(), n));

  std::vector<std::vector<Rational>> units;
  std::size_t expected = 0;
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    if (bidegree(basis.monomial(rank), n) != 2) continue;
    std::vector<Rational> unit(basis.size());
    unit[rank] = 1;
    units.push_back(std::move(unit));
    ++expected;
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (expected != pairs * pairs) return false;  // C(n,2)^2 bidegree-2 monomials
  return subspace_equal(ker_h, SubspaceBasis(basis.size(), std::move(units)));
}

}  // namespace curvinv
