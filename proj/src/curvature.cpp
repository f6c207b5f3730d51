#include "curvinv/curvature.hpp"

#include <stdexcept>
#include <utility>

namespace curvinv {

namespace {

std::optional<std::array<int, 4>> find_antisym_first_violation(const TetraForm& f) {
  const int n = f.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (f.at(i, j, k, l) != -f.at(j, i, k, l)) return std::array<int, 4>{i, j, k, l};
  return std::nullopt;
}

std::optional<std::array<int, 4>> find_antisym_second_violation(const TetraForm& f) {
  const int n = f.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (f.at(i, j, k, l) != -f.at(i, j, l, k)) return std::array<int, 4>{i, j, k, l};
  return std::nullopt;
}

std::optional<std::array<int, 4>> find_bianchi_violation(const TetraForm& f) {
  const int n = f.n();
  Rational sum;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          sum = f.at(i, j, k, l);
          sum += f.at(j, k, i, l);
          sum += f.at(k, i, j, l);
          if (sgn(sum) != 0) return std::array<int, 4>{i, j, k, l};
        }
  return std::nullopt;
}

std::optional<std::array<int, 4>> find_pair_swap_violation(const TetraForm& f) {
  const int n = f.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (f.at(i, j, k, l) != f.at(k, l, i, j)) return std::array<int, 4>{i, j, k, l};
  return std::nullopt;
}

}  // namespace

bool check_property1(const TetraForm& f) {
  return !find_antisym_first_violation(f) && !find_antisym_second_violation(f);
}

bool check_bianchi(const TetraForm& f) { return !find_bianchi_violation(f); }

TetraForm pair_swap(const TetraForm& f) {
  const int n = f.n();
  TetraForm g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) g.set(i, j, k, l, f.at(k, l, i, j));
  return g;
}

FormDiagnostics diagnose(const TetraForm& f) {
  FormDiagnostics d;
  d.antisym_first = find_antisym_first_violation(f);
  d.antisym_second = find_antisym_second_violation(f);
  d.bianchi = find_bianchi_violation(f);
  d.pair_swap = find_pair_swap_violation(f);
  return d;
}

DenseMatrix constraint_matrix(int n) {
  if (n < 1) throw std::invalid_argument("constraint matrix: dimension must be positive");
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t dim = nn * nn * nn * nn;
  const auto idx = [nn](int i, int j, int k, int l) {
    return ((static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)) * nn +
            static_cast<std::size_t>(k)) *
               nn +
           static_cast<std::size_t>(l);
  };

  DenseMatrix m(3 * dim, dim);
  std::size_t r = 0;
  // f(i,j,k,l) + f(j,i,k,l) = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          m.at(r, idx(i, j, k, l)) += 1;
          m.at(r, idx(j, i, k, l)) += 1;
          ++r;
        }
  // f(i,j,k,l) + f(i,j,l,k) = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          m.at(r, idx(i, j, k, l)) += 1;
          m.at(r, idx(i, j, l, k)) += 1;
          ++r;
        }
  // f(i,j,k,l) + f(j,k,i,l) + f(k,i,j,l) = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          m.at(r, idx(i, j, k, l)) += 1;
          m.at(r, idx(j, k, i, l)) += 1;
          m.at(r, idx(k, i, j, l)) += 1;
          ++r;
        }
  return m;
}

SubspaceBasis curvature_space_basis(int n) { return nullspace(constraint_matrix(n)); }

std::vector<TetraForm> curvature_basis_forms(int n) {
  const SubspaceBasis basis = curvature_space_basis(n);
  std::vector<TetraForm> forms;
  forms.reserve(basis.dim());
  for (const auto& v : basis.vectors()) forms.push_back(TetraForm::from_coefficients(n, v));
  return forms;
}

TetraForm constant_curvature_form(const DenseMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("constant curvature form: h must be square");
  const int n = static_cast<int>(h.rows());
  if (n < 1) throw std::invalid_argument("constant curvature form: h must be nonempty");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (h.at(i, j) != h.at(j, i)) {
        throw std::invalid_argument("constant curvature form: h must be symmetric");
      }

  TetraForm f(n);
  Rational value, tmp;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          value = h.at(i, k);
          value *= h.at(j, l);
          tmp = h.at(i, l);
          tmp *= h.at(j, k);
          value -= tmp;
          f.set(i, j, k, l, std::move(value));
        }
  return f;
}

std::vector<TetraForm> property1_spanning_forms(int n) {
  std::vector<TetraForm> forms;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          TetraForm f(n);
          f.set(i, j, k, l, 1);
          f.set(j, i, k, l, -1);
          f.set(i, j, l, k, -1);
          f.set(j, i, l, k, 1);
          forms.push_back(std::move(f));
        }
  return forms;
}

}  // namespace curvinv
