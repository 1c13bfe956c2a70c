// Copyright 2026 The nvsim Authors
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
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace nvsim {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;

// Global convention: qubit 0 is the LEFT Kronecker factor everywhere.
// Basis index of |q0 q1 ... q_{n-1}> is sum_k q_k * 2^(n-1-k).

enum class Pauli { I, X, Y, Z };

const char* to_string(Pauli p);
Pauli pauli_from_char(char c);

Mat2 pauli_matrix(Pauli p);
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();
Mat2 sigma_minus();  // |0><1|, lowers the excited state
Mat2 identity2();

/// Kronecker product with operand `a` acting on the lower-numbered qubits.
Mat tensor(const Mat& a, const Mat& b);

/// Lifts a single-qubit operator onto qubit `qubit` of an n-qubit register.
Mat embed_single(const Mat2& op, int qubit, int n_qubits);

/// Density matrix over a 1-3 qubit register. Construction symmetrizes the
/// input and enforces hermiticity, unit trace, and positivity within `tol`.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat rho, double tol = 1e-9);
  static DensityMatrix pure(const Vec& psi);

  const Mat& mat() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  int n_qubits() const { return n_qubits_; }

 private:
  Mat rho_;
  int n_qubits_ = 0;
};

/// Reduced state of qubit `keep` of a two-qubit state.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

/// Partial transpose of a two-qubit state with respect to one subsystem.
/// The result is Hermitian with unit trace but may be non-positive.
Mat partial_transpose(const Mat& rho, int subsystem);
Mat partial_transpose(const DensityMatrix& rho, int subsystem);

struct EigenSystem {
  Eigen::VectorXd values;  // sorted descending
  Mat vectors;             // columns, same order as values
};

/// Eigendecomposition of a Hermitian matrix (checked within `herm_tol`).
EigenSystem eig_hermitian(const Mat& m, double herm_tol = 1e-9);

double purity(const DensityMatrix& rho);

/// (1/2) * trace norm of (a - b); both arguments Hermitian.
double trace_distance(const Mat& a, const Mat& b);

}  // namespace nvsim
