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

#include <string>
#include <vector>

#include "nvsim/hamiltonian.hpp"
#include "nvsim/pulses.hpp"
#include "nvsim/qcore.hpp"

namespace nvsim {

/// Fixed-step RK4. The effective step never exceeds dt and is further
/// reduced so that (fastest angular frequency) * step <= 1/20 within each
/// schedule segment.
struct IntegratorConfig {
  double dt = 1e-7;        // s, base maximum step
  int sample_stride = 1;   // record every n-th step; <= 0 records endpoints only
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<DensityMatrix> states;

  const DensityMatrix& final_state() const { return states.back(); }
};

/// Right-hand side of the master equation:
///   -i[H, rho] + sum_q (1/T1_q) D[sm_q] rho + sum_q (1/(2 Tphi_q)) D[sz_q] rho
/// with D[L] rho = L rho L^dag - {L^dag L, rho}/2.
///
/// The sz rate is Gamma_phi/2 so that off-diagonal elements of a single qubit
/// decay exactly as exp(-t/Tphi), giving 1/T2 = 1/(2 T1) + 1/Tphi.
Mat lindblad_rhs(const Mat& rho, const Mat& h, const SystemSpec& spec);

EvolutionResult evolve(const DensityMatrix& rho0, const PulseSchedule& schedule,
                       const SystemSpec& spec, const IntegratorConfig& cfg);

/// CSV export: header then one row per sample, time followed by the
/// row-major re/im pairs of the state.
std::string evolution_to_csv(const EvolutionResult& result);

}  // namespace nvsim
