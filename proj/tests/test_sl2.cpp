#include "curvinv/sl2.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <random>
#include <stdexcept>

using namespace curvinv;
using test_helpers::random_exterior;
using test_helpers::random_sl2;

TEST_CASE("sl2 elements must have determinant 1") {
  CHECK_THROWS_AS(SL2Element(1, 0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(SL2Element(0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(SL2Element::torus(0), std::invalid_argument);

  const SL2Element g = SL2Element::torus(make_rational(3, 2));
  CHECK(g.a() == make_rational(3, 2));
  CHECK(g.d() == make_rational(2, 3));
}

TEST_CASE("sl2 group structure") {
  std::mt19937 gen(271828);
  for (int trial = 0; trial < 20; ++trial) {
    const SL2Element g = random_sl2(gen);
    const SL2Element h = random_sl2(gen);
    CHECK(g * g.inverse() == SL2Element::identity());
    CHECK(g.inverse() * g == SL2Element::identity());
    CHECK((g * h).inverse() == h.inverse() * g.inverse());
  }
  // the quarter rotation is a product of unipotents
  const SL2Element rot = SL2Element::upper_unipotent(-1) * SL2Element::lower_unipotent(1) *
                         SL2Element::upper_unipotent(-1);
  CHECK(rot == SL2Element::rotation());
}

TEST_CASE("lie bracket relations on the generators") {
  const SL2LieElement e = SL2LieElement::e();
  const SL2LieElement f = SL2LieElement::f();
  const SL2LieElement h = SL2LieElement::h();
  CHECK(h.bracket(e) == SL2LieElement(2, 0, 0));   // [h,e] = 2e
  CHECK(h.bracket(f) == SL2LieElement(0, -2, 0));  // [h,f] = -2f
  CHECK(e.bracket(f) == h);                        // [e,f] = h
  CHECK(e.bracket(e) == SL2LieElement(0, 0, 0));
}

TEST_CASE("group action basics") {
  std::mt19937 gen(161803);
  for (int n = 2; n <= 3; ++n) {
    const ExteriorElement x = random_exterior(gen, n);
    CHECK(group_act(SL2Element::identity(), x) == x);
  }

  // n=2: the single monomial spans the top power, so every determinant-1
  // element fixes it
  const ExteriorElement top = ExteriorElement::monomial(2, 0);
  CHECK(group_act(SL2Element::upper_unipotent(1), top) == top);
  CHECK(group_act(SL2Element::lower_unipotent(-2), top) == top);
  CHECK(group_act(SL2Element::rotation(), top) == top);
  CHECK(group_act(SL2Element::torus(make_rational(5, 3)), top) == top);
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(group_act(random_sl2(gen), top) == top);
  }
}

TEST_CASE("torus scales a monomial by mu^(2i-4) for bidegree i") {
  const int n = 3;
  const WedgeBasis& basis = wedge_basis(n);
  const SL2Element g = SL2Element::torus(2);
  bool saw[5] = {false, false, false, false, false};
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    const int i = bidegree(basis.monomial(rank), n);
    saw[i] = true;
    const ExteriorElement m = ExteriorElement::monomial(n, rank);
    Rational scale = 1;
    for (int t = 0; t < 2 * i - 4; ++t) scale *= 2;
    for (int t = 0; t < 4 - 2 * i; ++t) scale /= 2;
    CHECK(group_act(g, m) == scale * m);
  }
  // all bidegrees except 0 and 4 occur at n=3 (C(3,4)=0)
  CHECK(!saw[0]);
  CHECK(saw[1]);
  CHECK(saw[2]);
  CHECK(saw[3]);
  CHECK(!saw[4]);

  // the named instance: bidegree 1 scales by 1/4
  std::size_t deg1_rank = basis.size();
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    if (bidegree(basis.monomial(rank), n) == 1) {
      deg1_rank = rank;
      break;
    }
  }
  REQUIRE(deg1_rank < basis.size());
  const ExteriorElement m = ExteriorElement::monomial(n, deg1_rank);
  CHECK(group_act(g, m) == make_rational(1, 4) * m);
}

TEST_CASE("group action satisfies the group law and inverses") {
  std::mt19937 gen(314159);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const SL2Element g1 = random_sl2(gen);
      const SL2Element g2 = random_sl2(gen);
      const ExteriorElement x = random_exterior(gen, n);
      CHECK(group_act(g1, group_act(g2, x)) == group_act(g1 * g2, x));
      CHECK(group_act(g1.inverse(), group_act(g1, x)) == x);
    }
  }
}

TEST_CASE("group action is linear") {
  std::mt19937 gen(8);
  const SL2Element g = random_sl2(gen);
  const ExteriorElement x = random_exterior(gen, 3);
  const ExteriorElement y = random_exterior(gen, 3);
  CHECK(group_act(g, x + y) == group_act(g, x) + group_act(g, y));
  const Rational c = make_rational(-7, 3);
  CHECK(group_act(g, c * x) == c * group_act(g, x));
}

TEST_CASE("lie action examples") {
  // h kills any bidegree-2 monomial: equal and opposite leg weights
  const ExteriorElement top2 = ExteriorElement::monomial(2, 0);
  CHECK(lie_act(SL2LieElement::h(), top2).is_zero());

  // e kills the n=2 top monomial: every substitution repeats a leg
  CHECK(lie_act(SL2LieElement::e(), top2).is_zero());

  // e on a bidegree-2 monomial at n=3 lands in bidegree 3 with the wedge sign
  const WedgeBasis& basis3 = wedge_basis(3);
  const ExteriorElement m = ExteriorElement::monomial(3, basis3.rank_of({0, 1, 3, 5}));
  const ExteriorElement image = lie_act(SL2LieElement::e(), m);
  // legs (0,1,3,5): leg 3 -> w0 repeats, leg 5 -> w2 gives -(0,1,2,3)
  ExteriorElement expected(3);
  expected.add_term({0, 1, 2, 3}, -1);
  CHECK(image == expected);
}

TEST_CASE("monomials are weight vectors of the h action") {
  for (int n = 1; n <= 5; ++n) {
    const WedgeBasis& basis = wedge_basis(n);
    for (std::size_t rank = 0; rank < basis.size(); ++rank) {
      const int w = weight_of(basis.monomial(rank), n);
      CHECK(w == 2 * bidegree(basis.monomial(rank), n) - 4);
      const ExteriorElement m = ExteriorElement::monomial(n, rank);
      CHECK(lie_act(SL2LieElement::h(), m) == Rational(w) * m);
    }
  }
}

TEST_CASE("bracket relations hold as operators on the exterior power") {
  for (int n = 2; n <= 3; ++n) {
    const WedgeBasis& basis = wedge_basis(n);
    const SL2LieElement e = SL2LieElement::e();
    const SL2LieElement f = SL2LieElement::f();
    const SL2LieElement h = SL2LieElement::h();
    for (std::size_t rank = 0; rank < basis.size(); ++rank) {
      const ExteriorElement m = ExteriorElement::monomial(n, rank);
      CHECK(lie_act(e, lie_act(f, m)) - lie_act(f, lie_act(e, m)) == lie_act(h, m));
      CHECK(lie_act(h, lie_act(e, m)) - lie_act(e, lie_act(h, m)) ==
            make_rational(2) * lie_act(e, m));
      CHECK(lie_act(h, lie_act(f, m)) - lie_act(f, lie_act(h, m)) ==
            make_rational(-2) * lie_act(f, m));
    }
  }
}

TEST_CASE("lie action is linear in both slots") {
  std::mt19937 gen(55);
  const ExteriorElement x = random_exterior(gen, 3);
  const ExteriorElement y = random_exterior(gen, 3);
  const SL2LieElement e = SL2LieElement::e();
  const SL2LieElement h = SL2LieElement::h();
  CHECK(lie_act(e, x + y) == lie_act(e, x) + lie_act(e, y));
  // (2e - h)·x = 2(e·x) - h·x
  const SL2LieElement combo(2, 0, -1);
  CHECK(lie_act(combo, x) == make_rational(2) * lie_act(e, x) - lie_act(h, x));
}

namespace {

// exact 5-point one-sided first derivative at 0 with unit step; exact for
// polynomials of degree <= 4
Rational stencil_derivative(const std::array<Rational, 5>& values) {
  Rational result = -25 * values[0];
  result += 48 * values[1];
  result -= 36 * values[2];
  result += 16 * values[3];
  result -= 3 * values[4];
  return result / 12;
}

}  // namespace

TEST_CASE("derivative stencil reproduces a known quartic slope") {
  const auto q = [](long t) {
    Rational r = 3 * Rational(t) * t * t * t;
    r -= 2 * Rational(t) * t * t;
    r += Rational(t);
    r -= 7;
    return r;
  };
  CHECK(stencil_derivative({q(0), q(1), q(2), q(3), q(4)}) == 1);  // q'(0) = 1
}

TEST_CASE("unipotent one-parameter families differentiate to e and f") {
  std::mt19937 gen(1618);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const ExteriorElement x = random_exterior(gen, n);
      // the action of [[1,lambda],[0,1]] is polynomial of degree 4 in lambda
      for (const bool upper : {true, false}) {
        std::array<ExteriorElement, 5> samples{ExteriorElement(n), ExteriorElement(n),
                                               ExteriorElement(n), ExteriorElement(n),
                                               ExteriorElement(n)};
        for (long lambda = 0; lambda <= 4; ++lambda) {
          const SL2Element g = upper ? SL2Element::upper_unipotent(lambda)
                                     : SL2Element::lower_unipotent(lambda);
          samples[static_cast<std::size_t>(lambda)] = group_act(g, x);
        }
        ExteriorElement derivative(n);
        for (std::size_t rank = 0; rank < x.size(); ++rank) {
          derivative.set_coeff(rank,
                               stencil_derivative({samples[0].coeff(rank), samples[1].coeff(rank),
                                                   samples[2].coeff(rank), samples[3].coeff(rank),
                                                   samples[4].coeff(rank)}));
        }
        const SL2LieElement generator = upper ? SL2LieElement::e() : SL2LieElement::f();
        CHECK(derivative == lie_act(generator, x));
      }
    }
  }
}

TEST_CASE("invariant subspace dimensions") {
  const std::size_t expected[] = {0, 0, 1, 6, 20};
  for (int n = 1; n <= 4; ++n) {
    CHECK(sb2_invariants(n).dim() == expected[n]);
    CHECK(sl2_invariants(n).dim() == expected[n]);
  }
}

TEST_CASE("full invariance implies triangular invariance") {
  for (int n = 2; n <= 4; ++n) {
    const SubspaceBasis sb2 = sb2_invariants(n);
    const SubspaceBasis sl2 = sl2_invariants(n);
    for (const auto& v : sl2.vectors()) CHECK(sb2.contains(v));
  }
}

TEST_CASE("triangular invariance already gives full invariance") {
  for (int n = 1; n <= 4; ++n) CHECK(verify_lemma(n));
}

TEST_CASE("invariants live in bidegree 2") {
  for (int n = 2; n <= 4; ++n) {
    const SubspaceBasis invariants = sl2_invariants(n);
    for (const auto& v : invariants.vectors()) {
      const ExteriorElement x = ExteriorElement::from_coefficients(n, v);
      CHECK(bidegree_component(x, 2) == x);
    }
  }
}

TEST_CASE("invariant vectors are fixed by group generators") {
  const std::vector<SL2Element> generators = {
      SL2Element::upper_unipotent(1), SL2Element::lower_unipotent(1), SL2Element::torus(3)};
  for (int n = 2; n <= 3; ++n) {
    const SubspaceBasis invariants = sl2_invariants(n);
    for (const auto& v : invariants.vectors()) {
      const ExteriorElement x = ExteriorElement::from_coefficients(n, v);
      for (const SL2Element& g : generators) CHECK(group_act(g, x) == x);
    }
  }
}

TEST_CASE("weight-0 subspace is the bidegree-2 block") {
  for (int n = 1; n <= 4; ++n) CHECK(weight_zero_equals_bidegree2(n));
}

TEST_CASE("operator matrix columns are the monomial images") {
  const int n = 2;
  const DenseMatrix m = lie_operator_matrix(SL2LieElement::f(), n);
  const WedgeBasis& basis = wedge_basis(n);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const ExteriorElement image = lie_act(SL2LieElement::f(), ExteriorElement::monomial(n, c));
    for (std::size_t r = 0; r < basis.size(); ++r) CHECK(m.at(r, c) == image.coeff(r));
  }
}
