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

#include "nvsim/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace nvsim {

namespace {

constexpr Complex kI{0.0, 1.0};

int qubit_count_for_dim(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim && n <= 3) {
    d *= 2;
    ++n;
  }
  if (d != dim || n < 1 || n > 3) {
    throw std::invalid_argument("operator dimension must be 2, 4, or 8, got " +
                                std::to_string(dim));
  }
  return n;
}

}  // namespace

const char* to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("unknown Pauli label: ") + c);
  }
}

Mat2 pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return identity2();
    case Pauli::X: return sigma_x();
    case Pauli::Y: return sigma_y();
    case Pauli::Z: return sigma_z();
  }
  throw std::invalid_argument("unknown Pauli label");
}

Mat2 sigma_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 sigma_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 sigma_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 sigma_minus() {
  Mat2 m;
  m << 0, 1, 0, 0;
  return m;
}

Mat2 identity2() { return Mat2::Identity(); }

Mat tensor(const Mat& a, const Mat& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  Mat out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i) {
    for (Eigen::Index j = 0; j < ac; ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

Mat embed_single(const Mat2& op, int qubit, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3) {
    throw std::invalid_argument("register size must be 1-3 qubits");
  }
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  Mat out = (qubit == 0) ? Mat(op) : Mat(Mat::Identity(2, 2));
  for (int q = 1; q < n_qubits; ++q) {
    out = tensor(out, (q == qubit) ? Mat(op) : Mat(Mat::Identity(2, 2)));
  }
  return out;
}

DensityMatrix::DensityMatrix(Mat rho, double tol) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  n_qubits_ = qubit_count_for_dim(rho.rows());

  const double herm_err = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > tol) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                std::to_string(herm_err) + ")");
  }
  rho_ = 0.5 * (rho + rho.adjoint());

  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw std::invalid_argument("density matrix trace is " + std::to_string(tr));
  }
  rho_ /= tr;

  Eigen::SelfAdjointEigenSolver<Mat> solver(rho_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    throw std::invalid_argument("density matrix has eigenvalue " +
                                std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::pure(const Vec& psi) {
  const double norm = psi.norm();
  if (norm <= 0) {
    throw std::invalid_argument("cannot build a state from the zero vector");
  }
  Vec v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument("partial_trace expects a two-qubit state");
  }
  if (keep != 0 && keep != 1) {
    throw std::invalid_argument("partial_trace: keep must be 0 or 1");
  }
  const Mat& r = rho.mat();
  Mat out = Mat::Zero(2, 2);
  // Index (i, a): i = qubit-0 bit, a = qubit-1 bit.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex sum = 0;
      for (int t = 0; t < 2; ++t) {
        if (keep == 0) {
          sum += r(2 * i + t, 2 * j + t);
        } else {
          sum += r(2 * t + i, 2 * t + j);
        }
      }
      out(i, j) = sum;
    }
  }
  return DensityMatrix(out);
}

Mat partial_transpose(const Mat& rho, int subsystem) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("partial_transpose expects a 4x4 matrix");
  }
  if (subsystem != 0 && subsystem != 1) {
    throw std::invalid_argument("partial_transpose: subsystem must be 0 or 1");
  }
  Mat out(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if (subsystem == 0) {
            out(2 * i + a, 2 * j + b) = rho(2 * j + a, 2 * i + b);
          } else {
            out(2 * i + a, 2 * j + b) = rho(2 * i + b, 2 * j + a);
          }
        }
      }
    }
  }
  return out;
}

Mat partial_transpose(const DensityMatrix& rho, int subsystem) {
  return partial_transpose(rho.mat(), subsystem);
}

EigenSystem eig_hermitian(const Mat& m, double herm_tol) {
  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > herm_tol) {
    throw std::invalid_argument("eig_hermitian: input deviates from Hermitian by " +
                                std::to_string(herm_err));
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  }
  const Eigen::Index n = m.rows();
  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen reports eigenvalues ascending; flip to descending.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double purity(const DensityMatrix& rho) {
  return (rho.mat() * rho.mat()).trace().real();
}

double trace_distance(const Mat& a, const Mat& b) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace nvsim
