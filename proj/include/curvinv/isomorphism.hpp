#pragma once

#include "curvinv/curvature.hpp"
#include "curvinv/multilinear.hpp"
#include "curvinv/sl2.hpp"

#include <string>
#include <vector>

namespace curvinv {

// The identification of a form f antisymmetric in both argument pairs with
// the bidegree-2 element Σ_{i<j,k<l} f(i,j,k,l)·w_i∧w_j∧w_{n+k}∧w_{n+l}.
// No normalization factor: both round trips are literal identities.
// Throws std::invalid_argument when f violates the pair antisymmetries.
ExteriorElement to_exterior(const TetraForm& f);

// Inverse reading: the unique pair-antisymmetric form whose image is x.
// x must be supported on bidegree-2 monomials; a nonzero coefficient
// elsewhere throws std::invalid_argument naming the offending monomial.
// With require_invariant, x must additionally lie in sl2_invariants(n).
TetraForm from_exterior(const ExteriorElement& x, bool require_invariant = false);

// The same identification built from the transformed basis pair
// (g·u1, g·u2) of U, expanded leg by leg; used to confirm the construction
// does not depend on the chosen basis. With g = identity this reproduces
// to_exterior along an independent code path.
ExteriorElement to_exterior_in_basis(const TetraForm& f, const SL2Element& g);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, context otherwise
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool pass() const;
  void add(std::string name, bool ok, std::string detail = "");
  void merge(const std::string& prefix, const VerificationReport& other);
};

// The four-way confirmation that the identification is an isomorphism
// between the curvature space and the invariant subspace: images of the
// curvature basis are invariant, preimages of the invariant basis satisfy
// both symmetry properties, both round trips are identities, and the
// dimensions agree.
VerificationReport verify_isomorphism(int n);

// Within the bidegree-2 subspace, the kernel of the e-action corresponds
// under from_exterior exactly to the forms satisfying the Bianchi identity:
// subspace equality in the n^4 coefficient space.
bool verify_bianchi_equals_ekernel(int n);

// Rebuilds the identification in the basis (g·u1, g·u2) and checks it
// agrees with group_act(g, ·) composed with the original one; on the
// curvature basis both identifications then agree outright.
bool verify_basis_independence(int n, const SL2Element& g);

// The quarter rotation u1 -> u2, u2 -> -u1 realizes the pair swap
// f(i,j,k,l) -> f(k,l,i,j) on exterior images with overall sign +1; on the
// curvature space, whose images are rotation-invariant, pair symmetry
// follows. Checks both halves.
bool verify_pair_symmetry_mechanism(int n);

// Report-producing variants used by the CLI and the acceptance suite.
VerificationReport lemma_report(int n);
VerificationReport bianchi_ekernel_report(int n);
VerificationReport pair_symmetry_report(int n);
VerificationReport basis_independence_report(int n);
VerificationReport verify_all(int n);

}  // namespace curvinv
