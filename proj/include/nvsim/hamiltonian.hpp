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

#include <limits>
#include <vector>

#include "nvsim/pulses.hpp"
#include "nvsim/qcore.hpp"

namespace nvsim {

inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

/// NV ground-state triplet: H = D*Sz^2 + muB*Sz on the m = 0, +-1 manifold.
struct NvSpinModel {
  double zero_field_splitting = 2.0 * M_PI * 2.87e9;  // rad/s
  double zeeman = 0.0;                                // rad/s (mu * B)
};

struct NvTransitions {
  double f_plus;   // rad/s, |0> <-> |+1>
  double f_minus;  // rad/s, |0> <-> |-1>, the sensing transition
};

NvTransitions nv_transition_frequencies(const NvSpinModel& m);

struct QubitNoise {
  double t1 = kInfiniteTime;    // s
  double tphi = kInfiniteTime;  // s, pure dephasing
};

struct CouplingSpec {
  int a = 0;
  int b = 1;
  double zz = 0.0;        // rad/s, J
  double exchange = 0.0;  // rad/s, A_ex
};

/// Rotating-frame description of the simulated register.
struct SystemSpec {
  int n_qubits = 2;
  std::vector<double> detunings;       // rad/s per qubit
  std::vector<CouplingSpec> couplings;
  std::vector<QubitNoise> noise;
  double rabi_rate_per_amp = 0.0;      // rad/(s * a.u.)

  void validate() const;
};

/// Drift part of the Hamiltonian: detunings plus couplings.
///
/// ZZ enters as (J/4) sz sz, so the sensor frequency shift conditioned on the
/// impurity state is +-J/2. Exchange enters as A_ex (sx sx + sy sy), which
/// makes the |+-> <-> |-+> amplitude oscillate at exactly A_ex, i.e. maximal
/// entanglement first occurs at t = pi / (4 A_ex).
Mat static_hamiltonian(const SystemSpec& spec);

/// Full H(t) including every pulse active at time t.
Mat build_hamiltonian(const SystemSpec& spec, const PulseSchedule& schedule, double t);

}  // namespace nvsim
