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

#include "nvsim/hamiltonian.hpp"

#include <cmath>

namespace nvsim {

NvTransitions nv_transition_frequencies(const NvSpinModel& m) {
  if (m.zero_field_splitting <= 0) {
    throw std::invalid_argument("zero-field splitting must be positive");
  }
  // E(m_s) = D m_s^2 + muB m_s relative to E(0) = 0.
  return NvTransitions{m.zero_field_splitting + m.zeeman,
                       m.zero_field_splitting - m.zeeman};
}

void SystemSpec::validate() const {
  if (n_qubits < 1 || n_qubits > 3) {
    throw std::invalid_argument("n_qubits must be 1, 2, or 3");
  }
  if (detunings.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("detunings must list one value per qubit");
  }
  if (noise.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("noise must list one channel pair per qubit");
  }
  for (const auto& nz : noise) {
    if (!(nz.t1 > 0) || !(nz.tphi > 0)) {
      throw std::invalid_argument("T1 and Tphi must be positive (or infinite)");
    }
  }
  for (const auto& c : couplings) {
    if (c.a == c.b || c.a < 0 || c.b < 0 || c.a >= n_qubits || c.b >= n_qubits) {
      throw std::invalid_argument("coupling pair indices must be distinct qubits");
    }
    if (!std::isfinite(c.zz) || !std::isfinite(c.exchange)) {
      throw std::invalid_argument("coupling strengths must be finite");
    }
  }
}

Mat static_hamiltonian(const SystemSpec& spec) {
  spec.validate();
  const int n = spec.n_qubits;
  const Eigen::Index dim = Eigen::Index(1) << n;
  Mat h = Mat::Zero(dim, dim);

  for (int q = 0; q < n; ++q) {
    if (spec.detunings[q] != 0.0) {
      h += 0.5 * spec.detunings[q] * embed_single(sigma_z(), q, n);
    }
  }
  for (const auto& c : spec.couplings) {
    if (c.zz != 0.0) {
      h += 0.25 * c.zz *
           (embed_single(sigma_z(), c.a, n) * embed_single(sigma_z(), c.b, n));
    }
    if (c.exchange != 0.0) {
      h += c.exchange *
           (embed_single(sigma_x(), c.a, n) * embed_single(sigma_x(), c.b, n) +
            embed_single(sigma_y(), c.a, n) * embed_single(sigma_y(), c.b, n));
    }
  }
  return h;
}

Mat build_hamiltonian(const SystemSpec& spec, const PulseSchedule& schedule, double t) {
  if (t < 0 || t > schedule.total_duration()) {
    throw std::out_of_range("time outside schedule span");
  }
  if (schedule.n_qubits() > spec.n_qubits) {
    throw std::invalid_argument("schedule addresses more qubits than the system has");
  }
  const int n = spec.n_qubits;
  Mat h = static_hamiltonian(spec);

  for (int q = 0; q < schedule.n_qubits(); ++q) {
    for (const auto& timed : schedule.items(q)) {
      if (!std::holds_alternative<GaussianPulse>(timed.item)) continue;
      const auto& p = std::get<GaussianPulse>(timed.item);
      const double env = envelope_value(p, t);
      if (env == 0.0) continue;
      const double omega_t = spec.rabi_rate_per_amp * env;
      h += 0.5 * omega_t *
           (std::cos(p.phase) * embed_single(sigma_x(), q, n) +
            std::sin(p.phase) * embed_single(sigma_y(), q, n));
    }
  }
  return h;
}

}  // namespace nvsim
