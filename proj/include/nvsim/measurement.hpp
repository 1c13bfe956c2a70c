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

#include <cstdint>
#include <vector>

#include "nvsim/qcore.hpp"

namespace nvsim {

/// One of the 9 two-qubit Pauli measurement settings (identity excluded).
struct MeasurementSetting {
  Pauli basis0 = Pauli::Z;
  Pauli basis1 = Pauli::Z;

  MeasurementSetting() = default;
  MeasurementSetting(Pauli b0, Pauli b1);
  std::string label() const;
};

struct CountTable {
  std::uint64_t n00 = 0;
  std::uint64_t n01 = 0;
  std::uint64_t n10 = 0;
  std::uint64_t n11 = 0;
  std::uint64_t shots = 0;
};

double expectation_exact(const DensityMatrix& rho, const MeasurementSetting& s);

/// (n00 + n11 - n01 - n10) / shots
double expectation_from_counts(const CountTable& c);

/// Unitary mapping the given Pauli axis onto Z: U sigma_axis U^dag = sigma_z.
Mat2 measurement_prerotation(Pauli axis);

/// Rotates into the measurement basis, then draws `shots` outcomes from the
/// diagonal. Deterministic per seed. Optional symmetric per-qubit readout
/// flip probability models assignment errors.
CountTable sample_setting(const DensityMatrix& rho, const MeasurementSetting& s,
                          std::uint64_t shots, std::uint64_t seed,
                          double readout_flip_prob = 0.0);

/// Linear IQ-plane classifier: side of the line normal.p = offset.
struct Discriminator {
  Eigen::Vector2d normal{1.0, 0.0};
  double offset = 0.0;

  int classify(const Eigen::Vector2d& point) const {
    return normal.dot(point) > offset ? 1 : 0;
  }
};

struct IQModel {
  Eigen::Vector2d center0{0.0, 0.0};
  Eigen::Vector2d center1{1.0, 0.0};
  double cloud_sigma = 0.1;

  Discriminator midpoint_discriminator() const;
  /// Per-shot assignment error of the midpoint rule for equal Gaussians:
  /// erfc(d / (2 sqrt(2) sigma)) / 2 with d the center separation.
  double analytic_error() const;
};

struct IqRun {
  std::vector<Eigen::Vector2d> points;
  std::vector<int> assigned;
  std::vector<int> truth;
};

IqRun simulate_iq(double p_excited, const IQModel& model, std::uint64_t shots,
                  std::uint64_t seed);

/// Centroid-midpoint rule: normal along the line joining class centroids,
/// threshold at their midpoint.
Discriminator train_discriminator(const std::vector<Eigen::Vector2d>& points0,
                                  const std::vector<Eigen::Vector2d>& points1);

}  // namespace nvsim
