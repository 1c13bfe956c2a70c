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

#include "nvsim/measurement.hpp"

#include <array>
#include <cmath>

#include "nvsim/pulses.hpp"
#include "nvsim/rng.hpp"

namespace nvsim {

MeasurementSetting::MeasurementSetting(Pauli b0, Pauli b1) : basis0(b0), basis1(b1) {
  if (b0 == Pauli::I || b1 == Pauli::I) {
    throw std::invalid_argument("measurement settings exclude the identity axis");
  }
}

std::string MeasurementSetting::label() const {
  return std::string(to_string(basis0)) + to_string(basis1);
}

double expectation_exact(const DensityMatrix& rho, const MeasurementSetting& s) {
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument("expectation_exact expects a two-qubit state");
  }
  const Mat obs = tensor(pauli_matrix(s.basis0), pauli_matrix(s.basis1));
  return (rho.mat() * obs).trace().real();
}

double expectation_from_counts(const CountTable& c) {
  if (c.shots == 0) throw std::invalid_argument("count table has zero shots");
  const double n = static_cast<double>(c.shots);
  return (static_cast<double>(c.n00) + static_cast<double>(c.n11) -
          static_cast<double>(c.n01) - static_cast<double>(c.n10)) / n;
}

Mat2 measurement_prerotation(Pauli axis) {
  switch (axis) {
    case Pauli::X: return rotation_unitary(M_PI / 2.0, -M_PI / 2.0);
    case Pauli::Y: return rotation_unitary(M_PI / 2.0, 0.0);
    case Pauli::Z:
    case Pauli::I: return identity2();
  }
  return identity2();
}

CountTable sample_setting(const DensityMatrix& rho, const MeasurementSetting& s,
                          std::uint64_t shots, std::uint64_t seed,
                          double readout_flip_prob) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument("sample_setting expects a two-qubit state");
  }
  const Mat u = tensor(Mat(measurement_prerotation(s.basis0)),
                       Mat(measurement_prerotation(s.basis1)));
  const Mat rotated = u * rho.mat() * u.adjoint();

  std::array<double, 4> p{};
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    p[k] = std::max(0.0, rotated(k, k).real());
    total += p[k];
  }
  for (auto& v : p) v /= total;

  Rng rng(seed);
  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u01 = rng.uniform();
    int outcome = 3;
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
      acc += p[k];
      if (u01 < acc) {
        outcome = k;
        break;
      }
    }
    if (readout_flip_prob > 0.0) {
      if (rng.uniform() < readout_flip_prob) outcome ^= 0b10;  // qubit 0 bit
      if (rng.uniform() < readout_flip_prob) outcome ^= 0b01;  // qubit 1 bit
    }
    ++counts[static_cast<std::size_t>(outcome)];
  }
  return CountTable{counts[0], counts[1], counts[2], counts[3], shots};
}

Discriminator IQModel::midpoint_discriminator() const {
  const Eigen::Vector2d diff = center1 - center0;
  const double d = diff.norm();
  if (d <= 0) throw std::invalid_argument("IQ centers coincide");
  Discriminator disc;
  disc.normal = diff / d;
  disc.offset = disc.normal.dot(0.5 * (center0 + center1));
  return disc;
}

double IQModel::analytic_error() const {
  const double d = (center1 - center0).norm();
  return 0.5 * std::erfc(d / (2.0 * std::sqrt(2.0) * cloud_sigma));
}

IqRun simulate_iq(double p_excited, const IQModel& model, std::uint64_t shots,
                  std::uint64_t seed) {
  if (p_excited < 0.0 || p_excited > 1.0) {
    throw std::invalid_argument("p_excited must lie in [0, 1]");
  }
  if (model.cloud_sigma <= 0) throw std::invalid_argument("cloud_sigma must be positive");
  const Discriminator disc = model.midpoint_discriminator();

  IqRun run;
  run.points.reserve(shots);
  run.assigned.reserve(shots);
  run.truth.reserve(shots);
  Rng rng(seed);
  for (std::uint64_t k = 0; k < shots; ++k) {
    const int truth = rng.uniform() < p_excited ? 1 : 0;
    const Eigen::Vector2d& center = truth ? model.center1 : model.center0;
    Eigen::Vector2d pt = center + model.cloud_sigma * Eigen::Vector2d(rng.normal(), rng.normal());
    run.points.push_back(pt);
    run.truth.push_back(truth);
    run.assigned.push_back(disc.classify(pt));
  }
  return run;
}

Discriminator train_discriminator(const std::vector<Eigen::Vector2d>& points0,
                                  const std::vector<Eigen::Vector2d>& points1) {
  if (points0.empty() || points1.empty()) {
    throw std::invalid_argument("both classes need at least one point");
  }
  auto centroid = [](const std::vector<Eigen::Vector2d>& pts) {
    Eigen::Vector2d c{0.0, 0.0};
    for (const auto& p : pts) c += p;
    return Eigen::Vector2d(c / static_cast<double>(pts.size()));
  };
  const Eigen::Vector2d c0 = centroid(points0);
  const Eigen::Vector2d c1 = centroid(points1);
  const Eigen::Vector2d diff = c1 - c0;
  const double d = diff.norm();
  if (d <= 0) throw std::invalid_argument("class centroids coincide");
  Discriminator disc;
  disc.normal = diff / d;
  disc.offset = disc.normal.dot(0.5 * (c0 + c1));
  return disc;
}

}  // namespace nvsim
