#include "curvinv/isomorphism.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace curvinv {

namespace {

std::string quad_string(const std::array<int, 4>& q) {
  std::ostringstream out;
  out << "(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")";
  return out.str();
}

// First basis vector of a that b misses, or vice versa; empty when equal.
std::string subspace_difference_witness(const SubspaceBasis& a, const SubspaceBasis& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!b.contains(a.vectors()[i])) {
      return "left basis vector #" + std::to_string(i) + " not in right subspace";
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!a.contains(b.vectors()[i])) {
      return "right basis vector #" + std::to_string(i) + " not in left subspace";
    }
  }
  return "";
}

}  // namespace

ExteriorElement to_exterior(const TetraForm& f) {
  const FormDiagnostics d = diagnose(f);
  if (!d.property1()) {
    const auto witness = d.antisym_first ? *d.antisym_first : *d.antisym_second;
    throw std::invalid_argument("to_exterior: form is not antisymmetric in both pairs, witness " +
                                quad_string(witness));
  }
  const int n = f.n();
  ExteriorElement x(n);
  const WedgeBasis& basis = wedge_basis(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Rational& value = f.at(i, j, k, l);
          if (sgn(value) == 0) continue;
          x.set_coeff(basis.rank_of({i, j, n + k, n + l}), value);
        }
  return x;
}

TetraForm from_exterior(const ExteriorElement& x, bool require_invariant) {
  const int n = x.n();
  const WedgeBasis& basis = wedge_basis(n);
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    if (sgn(x.coeff(rank)) == 0) continue;
    if (bidegree(basis.monomial(rank), n) != 2) {
      throw std::invalid_argument("from_exterior: nonzero coefficient on monomial " +
                                  quad_string(basis.monomial(rank)) + " of bidegree " +
                                  std::to_string(bidegree(basis.monomial(rank), n)));
    }
  }
  if (require_invariant && !sl2_invariants(n).contains(x.coefficients())) {
    throw std::invalid_argument("from_exterior: element is not an invariant");
  }

  TetraForm f(n);
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    const Rational& value = x.coeff(rank);
    if (sgn(value) == 0) continue;
    const auto& legs = basis.monomial(rank);
    const int i = legs[0];
    const int j = legs[1];
    const int k = legs[2] - n;
    const int l = legs[3] - n;
    f.set(i, j, k, l, value);
    f.set(j, i, k, l, -value);
    f.set(i, j, l, k, -value);
    f.set(j, i, l, k, value);
  }
  return f;
}

ExteriorElement to_exterior_in_basis(const TetraForm& f, const SL2Element& g) {
  if (!check_property1(f)) {
    throw std::invalid_argument("to_exterior_in_basis: form is not antisymmetric in both pairs");
  }
  const int n = f.n();
  ExteriorElement x(n);
  // g·u1 ⊗ e*_m = a·w_m + c·w_{n+m}; g·u2 ⊗ e*_m = b·w_m + d·w_{n+m}.
  const std::array<Rational, 2> first{g.a(), g.c()};
  const std::array<Rational, 2> second{g.b(), g.d()};
  Rational coeff;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Rational& value = f.at(i, j, k, l);
          if (sgn(value) == 0) continue;
          const std::array<int, 2> blocks{0, n};
          for (int s0 = 0; s0 < 2; ++s0)
            for (int s1 = 0; s1 < 2; ++s1)
              for (int s2 = 0; s2 < 2; ++s2)
                for (int s3 = 0; s3 < 2; ++s3) {
                  coeff = value;
                  coeff *= first[s0];
                  coeff *= first[s1];
                  coeff *= second[s2];
                  coeff *= second[s3];
                  if (sgn(coeff) == 0) continue;
                  x.add_term({i + blocks[s0], j + blocks[s1], k + blocks[s2], l + blocks[s3]},
                             coeff);
                }
        }
  return x;
}

bool VerificationReport::pass() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
}

void VerificationReport::merge(const std::string& prefix, const VerificationReport& other) {
  for (const auto& check : other.checks) {
    checks.push_back(CheckResult{prefix + check.name, check.pass, check.detail});
  }
}

VerificationReport verify_isomorphism(int n) {
  VerificationReport report;
  const SubspaceBasis curvature = curvature_space_basis(n);
  const SubspaceBasis invariants = sl2_invariants(n);

  report.add("dimensions", curvature.dim() == invariants.dim(),
             "curvature=" + std::to_string(curvature.dim()) +
                 " invariants=" + std::to_string(invariants.dim()));

  bool forward = true;
  std::string forward_witness;
  for (std::size_t i = 0; i < curvature.dim() && forward; ++i) {
    const TetraForm f = TetraForm::from_coefficients(n, curvature.vectors()[i]);
    if (!invariants.contains(to_exterior(f).coefficients())) {
      forward = false;
      forward_witness = "curvature basis vector #" + std::to_string(i) + " maps outside";
    }
  }
  report.add("curvature-to-invariant", forward, forward_witness);

  bool backward = true;
  std::string backward_witness;
  for (std::size_t i = 0; i < invariants.dim() && backward; ++i) {
    try {
      const TetraForm f =
          from_exterior(ExteriorElement::from_coefficients(n, invariants.vectors()[i]));
      if (!check_property1(f) || !check_bianchi(f)) {
        backward = false;
        backward_witness = "invariant basis vector #" + std::to_string(i) + " fails a property";
      }
    } catch (const std::invalid_argument& err) {
      backward = false;
      backward_witness = "invariant basis vector #" + std::to_string(i) + ": " + err.what();
    }
  }
  report.add("invariant-to-curvature", backward, backward_witness);

  bool round_trip = true;
  std::string round_trip_witness;
  for (std::size_t i = 0; i < curvature.dim() && round_trip; ++i) {
    const TetraForm f = TetraForm::from_coefficients(n, curvature.vectors()[i]);
    if (from_exterior(to_exterior(f)) != f) {
      round_trip = false;
      round_trip_witness = "curvature basis vector #" + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < invariants.dim() && round_trip; ++i) {
    const ExteriorElement x = ExteriorElement::from_coefficients(n, invariants.vectors()[i]);
    try {
      if (to_exterior(from_exterior(x)) != x) {
        round_trip = false;
        round_trip_witness = "invariant basis vector #" + std::to_string(i);
      }
    } catch (const std::invalid_argument& err) {
      round_trip = false;
      round_trip_witness = "invariant basis vector #" + std::to_string(i) + ": " + err.what();
    }
  }
  report.add("round-trip", round_trip, round_trip_witness);

  return report;
}

bool verify_bianchi_equals_ekernel(int n) {
  const WedgeBasis& basis = wedge_basis(n);
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t form_dim = nn * nn * nn * nn;

  // Ranks of the bidegree-2 monomials, i.e. the coordinates of the
  // subspace identified with the pair-antisymmetric forms.
  std::vector<std::size_t> deg2;
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    if (bidegree(basis.monomial(rank), n) == 2) deg2.push_back(rank);
  }

  // e-action restricted to the bidegree-2 coordinates.
  DenseMatrix restricted(basis.size(), deg2.size());
  for (std::size_t t = 0; t < deg2.size(); ++t) {
    const ExteriorElement image = lie_act(SL2LieElement::e(), ExteriorElement::monomial(n, deg2[t]));
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (sgn(image.coeff(r)) != 0) restricted.at(r, t) = image.coeff(r);
    }
  }

  const SubspaceBasis kernel = nullspace(restricted);
  std::vector<std::vector<Rational>> mapped;
  mapped.reserve(kernel.dim());
  for (const auto& kvec : kernel.vectors()) {
    ExteriorElement x(n);
    for (std::size_t t = 0; t < deg2.size(); ++t) {
      if (sgn(kvec[t]) != 0) x.set_coeff(deg2[t], kvec[t]);
    }
    mapped.push_back(from_exterior(x).coefficients());
  }
  const SubspaceBasis from_kernel(form_dim, std::move(mapped));
  return subspace_equal(from_kernel, curvature_space_basis(n));
}

bool verify_basis_independence(int n, const SL2Element& g) {
  for (const TetraForm& f : curvature_basis_forms(n)) {
    const ExteriorElement original = to_exterior(f);
    const ExteriorElement transported = group_act(g, original);
    if (to_exterior_in_basis(f, g) != transported) return false;
    // On the curvature space the image is invariant, so the primed and
    // unprimed identifications agree outright.
    if (transported != original) return false;
  }
  return true;
}

bool verify_pair_symmetry_mechanism(int n) {
  const SL2Element rot = SL2Element::rotation();
  for (const TetraForm& f : property1_spanning_forms(n)) {
    if (group_act(rot, to_exterior(f)) != to_exterior(pair_swap(f))) return false;
  }
  for (const TetraForm& f : curvature_basis_forms(n)) {
    if (pair_swap(f) != f) return false;
  }
  return true;
}

VerificationReport lemma_report(int n) {
  VerificationReport report;
  const SubspaceBasis sb2 = sb2_invariants(n);
  const SubspaceBasis sl2 = sl2_invariants(n);
  const bool equal = subspace_equal(sb2, sl2);
  std::string detail = "sb2=" + std::to_string(sb2.dim()) + " sl2=" + std::to_string(sl2.dim());
  if (!equal) detail += "; " + subspace_difference_witness(sb2, sl2);
  report.add("triangular-equals-full", equal, detail);
  return report;
}

VerificationReport bianchi_ekernel_report(int n) {
  VerificationReport report;
  report.add("weight0-equals-bidegree2", weight_zero_equals_bidegree2(n));
  report.add("ekernel-equals-bianchi", verify_bianchi_equals_ekernel(n));
  return report;
}

VerificationReport pair_symmetry_report(int n) {
  VerificationReport report;
  const SL2Element rot = SL2Element::rotation();

  bool intertwines = true;
  std::string witness;
  const auto spanning = property1_spanning_forms(n);
  for (std::size_t i = 0; i < spanning.size() && intertwines; ++i) {
    if (group_act(rot, to_exterior(spanning[i])) != to_exterior(pair_swap(spanning[i]))) {
      intertwines = false;
      witness = "spanning form #" + std::to_string(i);
    }
  }
  report.add("rotation-realizes-pair-swap", intertwines, witness);

  bool fixed = true;
  std::string fixed_witness;
  const auto forms = curvature_basis_forms(n);
  for (std::size_t i = 0; i < forms.size() && fixed; ++i) {
    if (pair_swap(forms[i]) != forms[i]) {
      fixed = false;
      fixed_witness = "curvature basis form #" + std::to_string(i);
    }
  }
  report.add("curvature-basis-pair-symmetric", fixed, fixed_witness);
  return report;
}

VerificationReport basis_independence_report(int n) {
  VerificationReport report;
  const std::vector<std::pair<std::string, SL2Element>> elements = {
      {"identity", SL2Element::identity()},
      {"upper-unipotent", SL2Element::upper_unipotent(1)},
      {"lower-unipotent", SL2Element::lower_unipotent(1)},
      {"rotation", SL2Element::rotation()},
      {"torus", SL2Element::torus(2)},
  };
  for (const auto& [name, g] : elements) {
    report.add(name, verify_basis_independence(n, g));
  }
  return report;
}

VerificationReport verify_all(int n) {
  VerificationReport report;
  report.merge("lemma.", lemma_report(n));
  report.merge("iso.", verify_isomorphism(n));
  report.merge("bianchi-ekernel.", bianchi_ekernel_report(n));
  report.merge("pair-symmetry.", pair_symmetry_report(n));
  report.merge("basis-independence.", basis_independence_report(n));
  return report;
}

}  // namespace curvinv
