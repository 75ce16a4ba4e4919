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

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace mrae {

using complexd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseOp = Eigen::SparseMatrix<complexd>;

inline constexpr double two_pi = 6.283185307179586476925286766559;
inline constexpr complexd ii{0.0, 1.0};

// Dense operators are plain matrices; Hamiltonian entries are in rad/us.
Matrix kron(const Matrix& a, const Matrix& b);
SparseOp kron_sparse(const SparseOp& a, const SparseOp& b);

Matrix dagger(const Matrix& a);
Matrix commutator(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& a);
// max |A - A^dagger| over entries
double hermiticity_error(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = 1e-12);

// Checks trace within tol of 1 and eigenvalues >= -psd_tol.
bool is_density_matrix(const Matrix& rho, double trace_tol = 1e-9,
                       double psd_tol = 1e-9);

// exp(-i H t) for Hermitian H, via eigendecomposition.
Matrix hermitian_propagator(const Matrix& h, double t);

// 0.5 * || a - b ||_1 (trace norm of the difference / 2)
double trace_distance(const Matrix& a, const Matrix& b);

// {I, sigma_x, sigma_y, sigma_z}
const std::vector<Matrix>& pauli_basis();
// All 4^n_qubits tensor products of Pauli matrices, index in base-4 digits
// ordered most-significant qubit first.
std::vector<Matrix> pauli_strings(int n_qubits);

Matrix basis_projector(int dim, int k);
Vector basis_vector(int dim, int k);

}  // namespace mrae
