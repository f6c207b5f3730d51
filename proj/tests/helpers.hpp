#pragma once

#include "curvinv/curvature.hpp"
#include "curvinv/linalg.hpp"
#include "curvinv/multilinear.hpp"
#include "curvinv/sl2.hpp"

#include <random>
#include <vector>

namespace test_helpers {

inline curvinv::Rational random_rational(std::mt19937& gen) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return curvinv::make_rational(num(gen), den(gen));
}

inline curvinv::Rational random_nonzero_rational(std::mt19937& gen) {
  while (true) {
    curvinv::Rational q = random_rational(gen);
    if (sgn(q) != 0) return q;
  }
}

inline curvinv::DenseMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols) {
  curvinv::DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_rational(gen);
  return m;
}

inline std::vector<curvinv::Rational> random_vector(std::mt19937& gen, std::size_t len) {
  std::vector<curvinv::Rational> v(len);
  for (auto& x : v) x = random_rational(gen);
  return v;
}

inline curvinv::ExteriorElement random_exterior(std::mt19937& gen, int n) {
  curvinv::ExteriorElement x(n);
  for (std::size_t rank = 0; rank < x.size(); ++rank) x.set_coeff(rank, random_rational(gen));
  return x;
}

inline curvinv::TetraForm random_form(std::mt19937& gen, int n) {
  curvinv::TetraForm f(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) f.set(i, j, k, l, random_rational(gen));
  return f;
}

inline curvinv::DenseMatrix random_symmetric_matrix(std::mt19937& gen, std::size_t n) {
  curvinv::DenseMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h.at(i, j) = random_rational(gen);
      h.at(j, i) = h.at(i, j);
    }
  return h;
}

// Product of a few random elementary matrices; determinant stays 1 exactly.
inline curvinv::SL2Element random_sl2(std::mt19937& gen) {
  using curvinv::SL2Element;
  SL2Element g = SL2Element::identity();
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> steps(2, 5);
  const int count = steps(gen);
  for (int s = 0; s < count; ++s) {
    switch (kind(gen)) {
      case 0:
        g = g * SL2Element::upper_unipotent(random_rational(gen));
        break;
      case 1:
        g = g * SL2Element::lower_unipotent(random_rational(gen));
        break;
      default:
        g = g * SL2Element::torus(random_nonzero_rational(gen));
        break;
    }
  }
  return g;
}

// The n=2 generator: full antisymmetry orbit of a single 1 at (0,1,0,1).
inline curvinv::TetraForm g_form() {
  curvinv::TetraForm g(2);
  g.set(0, 1, 0, 1, 1);
  g.set(1, 0, 0, 1, -1);
  g.set(0, 1, 1, 0, -1);
  g.set(1, 0, 1, 0, 1);
  return g;
}

// The n=3 product form (e*0∧e*1)⊗(e*0∧e*2): pair-antisymmetric but not
// Bianchi.
inline curvinv::TetraForm product_form_01_02() {
  curvinv::TetraForm f(3);
  f.set(0, 1, 0, 2, 1);
  f.set(0, 1, 2, 0, -1);
  f.set(1, 0, 0, 2, -1);
  f.set(1, 0, 2, 0, 1);
  return f;
}

}  // namespace test_helpers
