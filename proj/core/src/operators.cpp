// Copyright 2026 The mrae Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mrae/operators.hpp"

#include <stdexcept>

namespace mrae {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

SparseOp kron_sparse(const SparseOp& a, const SparseOp& b) {
  std::vector<Eigen::Triplet<complexd>> trips;
  trips.reserve(static_cast<size_t>(a.nonZeros()) * b.nonZeros());
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SparseOp::InnerIterator ita(a, ka); ita; ++ita)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SparseOp::InnerIterator itb(b, kb); itb; ++itb)
          trips.emplace_back(ita.row() * b.rows() + itb.row(),
                             ita.col() * b.cols() + itb.col(),
                             ita.value() * itb.value());
  SparseOp out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

Matrix dagger(const Matrix& a) { return a.adjoint(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_error(const Matrix& a) {
  return max_abs(a - Matrix(a.adjoint()));
}

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && hermiticity_error(a) < tol;
}

bool is_density_matrix(const Matrix& rho, double trace_tol, double psd_tol) {
  if (rho.rows() != rho.cols()) return false;
  if (std::abs(rho.trace() - 1.0) > trace_tol) return false;
  if (hermiticity_error(rho) > 1e-9) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -psd_tol;
}

Matrix hermitian_propagator(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& v = es.eigenvectors();
  Vector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    phases(k) = std::exp(-ii * es.eigenvalues()(k) * t);
  return v * phases.asDiagonal() * v.adjoint();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::JacobiSVD<Matrix> svd(a - b);
  return 0.5 * svd.singularValues().sum();
}

const std::vector<Matrix>& pauli_basis() {
  static const std::vector<Matrix> basis = [] {
    std::vector<Matrix> out(4, Matrix::Zero(2, 2));
    out[0] << 1, 0, 0, 1;
    out[1] << 0, 1, 1, 0;
    out[2] << 0, -ii, ii, 0;
    out[3] << 1, 0, 0, -1;
    return out;
  }();
  return basis;
}

std::vector<Matrix> pauli_strings(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("pauli_strings: n_qubits < 1");
  const auto& p = pauli_basis();
  std::vector<Matrix> out = p;
  for (int q = 1; q < n_qubits; ++q) {
    std::vector<Matrix> next;
    next.reserve(out.size() * 4);
    for (const auto& a : out)
      for (const auto& b : p) next.push_back(kron(a, b));
    out = std::move(next);
  }
  return out;
}

Matrix basis_projector(int dim, int k) {
  Matrix out = Matrix::Zero(dim, dim);
  out(k, k) = 1.0;
  return out;
}

Vector basis_vector(int dim, int k) {
  Vector out = Vector::Zero(dim);
  out(k) = 1.0;
  return out;
}

}  // namespace mrae
