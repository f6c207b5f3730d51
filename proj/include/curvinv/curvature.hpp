#pragma once

#include "curvinv/linalg.hpp"
#include "curvinv/multilinear.hpp"

#include <array>
#include <optional>
#include <vector>

namespace curvinv {

// Antisymmetry in the first and in the second argument pair:
// f(i,j,k,l) = -f(j,i,k,l) = -f(i,j,l,k).
bool check_property1(const TetraForm& f);

// First Bianchi identity: f(i,j,k,l) + f(j,k,i,l) + f(k,i,j,l) = 0.
bool check_bianchi(const TetraForm& f);

// g(i,j,k,l) = f(k,l,i,j).
TetraForm pair_swap(const TetraForm& f);

// One witness quadruple per violated relation, or nullopt when the
// relation holds everywhere.
struct FormDiagnostics {
  std::optional<std::array<int, 4>> antisym_first;   // f(i,j,k,l) != -f(j,i,k,l)
  std::optional<std::array<int, 4>> antisym_second;  // f(i,j,k,l) != -f(i,j,l,k)
  std::optional<std::array<int, 4>> bianchi;         // cyclic sum != 0
  std::optional<std::array<int, 4>> pair_swap;       // f(i,j,k,l) != f(k,l,i,j)

  bool property1() const { return !antisym_first && !antisym_second; }
  bool property2() const { return !bianchi.has_value(); }
  bool pair_symmetric() const { return !pair_swap.has_value(); }
};

FormDiagnostics diagnose(const TetraForm& f);

// One row per instance of each linear relation behind check_property1 and
// check_bianchi (redundant rows included): 3*n^4 rows over the n^4
// coefficient space. Its nullspace is the space of forms satisfying both.
DenseMatrix constraint_matrix(int n);

// Canonical basis of nullspace(constraint_matrix(n)), ambient dimension n^4.
SubspaceBasis curvature_space_basis(int n);

// curvature_space_basis(n) repackaged as forms.
std::vector<TetraForm> curvature_basis_forms(int n);

// f(i,j,k,l) = h(i,k)h(j,l) - h(i,l)h(j,k) for a symmetric square h.
// Always satisfies both checks and pair symmetry. Throws
// std::invalid_argument when h is not square and symmetric.
TetraForm constant_curvature_form(const DenseMatrix& h);

// Spanning set of the forms satisfying check_property1: for every
// i<j, k<l the form with the full antisymmetry orbit of a single 1 at
// (i,j,k,l). C(n,2)^2 forms.
std::vector<TetraForm> property1_spanning_forms(int n);

}  // namespace curvinv
