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

#include "nvsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace nvsim {

namespace {

struct CollapseChannel {
  Mat op;       // sqrt(rate) * L
  Mat op_dag_op;
};

struct ActivePulse {
  int qubit;
  GaussianPulse pulse;
};

struct RotationEvent {
  double time;
  Mat unitary;
};

// Precomputed operators for one evolve() call.
struct Propagation {
  int n_qubits = 0;
  Mat h_static;
  std::vector<Mat> drive_x;  // per qubit
  std::vector<Mat> drive_y;
  std::vector<CollapseChannel> channels;
  std::vector<ActivePulse> pulses;
  double rabi_rate = 0.0;
  double noise_rate_sum = 0.0;
};

std::vector<CollapseChannel> collapse_channels(const SystemSpec& spec) {
  std::vector<CollapseChannel> out;
  for (int q = 0; q < spec.n_qubits; ++q) {
    const auto& nz = spec.noise[q];
    if (std::isfinite(nz.t1)) {
      Mat l = std::sqrt(1.0 / nz.t1) * embed_single(sigma_minus(), q, spec.n_qubits);
      out.push_back({l, l.adjoint() * l});
    }
    if (std::isfinite(nz.tphi)) {
      Mat l = std::sqrt(0.5 / nz.tphi) * embed_single(sigma_z(), q, spec.n_qubits);
      out.push_back({l, l.adjoint() * l});
    }
  }
  return out;
}

Mat dissipator(const std::vector<CollapseChannel>& channels, const Mat& rho) {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& ch : channels) {
    out += ch.op * rho * ch.op.adjoint();
    out -= 0.5 * (ch.op_dag_op * rho + rho * ch.op_dag_op);
  }
  return out;
}

Mat rhs_at(const Propagation& prop, double t, const Mat& rho) {
  Mat h = prop.h_static;
  for (const auto& ap : prop.pulses) {
    const double env = envelope_value(ap.pulse, t);
    if (env == 0.0) continue;
    const double omega_t = prop.rabi_rate * env;
    h += (0.5 * omega_t * std::cos(ap.pulse.phase)) * prop.drive_x[ap.qubit];
    h += (0.5 * omega_t * std::sin(ap.pulse.phase)) * prop.drive_y[ap.qubit];
  }
  const Complex i{0.0, 1.0};
  Mat out = -i * (h * rho - rho * h);
  out += dissipator(prop.channels, rho);
  return out;
}

// Gershgorin bound on the spectral radius, used for step control.
double spectral_scale(const Mat& h) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    best = std::max(best, h.row(r).cwiseAbs().sum());
  }
  return best;
}

}  // namespace

Mat lindblad_rhs(const Mat& rho, const Mat& h, const SystemSpec& spec) {
  spec.validate();
  const Eigen::Index dim = Eigen::Index(1) << spec.n_qubits;
  if (rho.rows() != dim || rho.cols() != dim || h.rows() != dim || h.cols() != dim) {
    throw std::invalid_argument("lindblad_rhs: dimension mismatch with spec");
  }
  const Complex i{0.0, 1.0};
  Mat out = -i * (h * rho - rho * h);
  out += dissipator(collapse_channels(spec), rho);
  return out;
}

EvolutionResult evolve(const DensityMatrix& rho0, const PulseSchedule& schedule,
                       const SystemSpec& spec, const IntegratorConfig& cfg) {
  spec.validate();
  if (cfg.dt <= 0) throw std::invalid_argument("integrator dt must be positive");
  if (rho0.n_qubits() != spec.n_qubits) {
    throw std::invalid_argument("initial state does not match the system size");
  }

  Propagation prop;
  prop.n_qubits = spec.n_qubits;
  prop.h_static = static_hamiltonian(spec);
  prop.rabi_rate = spec.rabi_rate_per_amp;
  for (int q = 0; q < spec.n_qubits; ++q) {
    prop.drive_x.push_back(embed_single(sigma_x(), q, spec.n_qubits));
    prop.drive_y.push_back(embed_single(sigma_y(), q, spec.n_qubits));
  }
  prop.channels = collapse_channels(spec);
  for (const auto& ch : prop.channels) {
    prop.noise_rate_sum += spectral_scale(ch.op_dag_op);
  }

  std::vector<RotationEvent> rotations;
  std::set<double> breaks{0.0, schedule.total_duration()};
  for (int q = 0; q < schedule.n_qubits(); ++q) {
    for (const auto& timed : schedule.items(q)) {
      if (std::holds_alternative<GaussianPulse>(timed.item)) {
        prop.pulses.push_back({q, std::get<GaussianPulse>(timed.item)});
        breaks.insert(timed.start);
        breaks.insert(timed.end());
      } else if (std::holds_alternative<IdealRotation>(timed.item)) {
        const auto& r = std::get<IdealRotation>(timed.item);
        rotations.push_back(
            {timed.start, embed_single(rotation_unitary(r.theta, r.phi), q, spec.n_qubits)});
        breaks.insert(timed.start);
      } else {
        breaks.insert(timed.start);
        breaks.insert(timed.end());
      }
    }
  }
  std::sort(rotations.begin(), rotations.end(),
            [](const RotationEvent& a, const RotationEvent& b) { return a.time < b.time; });

  std::vector<double> edges(breaks.begin(), breaks.end());

  EvolutionResult result;
  Mat rho = rho0.mat();
  long step_counter = 0;
  const double abort_tol = 1e-6;
  const double renorm_tol = 1e-9;

  auto record = [&](double t, Mat& state) {
    const double herm = (state - state.adjoint()).cwiseAbs().maxCoeff();
    const double trace_err = std::abs(state.trace().real() - 1.0);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (state + state.adjoint()),
                                          Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (herm > abort_tol || trace_err > abort_tol || min_eig < -abort_tol) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "integrator invariant violated at t=%.6e s "
                    "(herm %.2e, trace drift %.2e, min eig %.2e)",
                    t, herm, trace_err, min_eig);
      throw std::runtime_error(buf);
    }
    if (herm > renorm_tol || trace_err > renorm_tol) {
      state = 0.5 * (state + state.adjoint());
      state /= state.trace().real();
    }
    result.times.push_back(t);
    result.states.push_back(DensityMatrix(state, abort_tol));
  };

  record(0.0, rho);
  std::size_t next_rotation = 0;
  const double edge_eps = 1e-15;

  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double t0 = edges[e];
    const double t1 = edges[e + 1];

    while (next_rotation < rotations.size() &&
           rotations[next_rotation].time <= t0 + edge_eps) {
      const Mat& u = rotations[next_rotation].unitary;
      rho = u * rho * u.adjoint();
      ++next_rotation;
    }
    if (t1 - t0 <= edge_eps) continue;

    // Segment step: bounded by the static scale, active pulse peaks (both
    // amplitude and envelope shape), and the configured base dt.
    double omega = spectral_scale(prop.h_static) + prop.noise_rate_sum;
    double h_step = cfg.dt;
    for (const auto& ap : prop.pulses) {
      if (ap.pulse.end() <= t0 + edge_eps || ap.pulse.start() >= t1 - edge_eps) continue;
      omega += prop.rabi_rate * ap.pulse.amplitude;
      h_step = std::min(h_step, ap.pulse.sigma / 20.0);
    }
    if (omega > 0) h_step = std::min(h_step, 1.0 / (20.0 * omega));

    const long steps = std::max(1L, static_cast<long>(std::ceil((t1 - t0) / h_step)));
    const double h = (t1 - t0) / static_cast<double>(steps);

    for (long s = 0; s < steps; ++s) {
      const double t = t0 + h * static_cast<double>(s);
      const Mat k1 = rhs_at(prop, t, rho);
      const Mat k2 = rhs_at(prop, t + 0.5 * h, rho + (0.5 * h) * k1);
      const Mat k3 = rhs_at(prop, t + 0.5 * h, rho + (0.5 * h) * k2);
      const Mat k4 = rhs_at(prop, t + h, rho + h * k3);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ++step_counter;
      const bool last_overall = (e + 2 == edges.size()) && (s + 1 == steps);
      if (!last_overall && cfg.sample_stride > 0 && step_counter % cfg.sample_stride == 0) {
        record(t + h, rho);
      }
    }
  }

  // Rotations scheduled exactly at the end of the span.
  while (next_rotation < rotations.size()) {
    const Mat& u = rotations[next_rotation].unitary;
    rho = u * rho * u.adjoint();
    ++next_rotation;
  }
  if (schedule.total_duration() > 0) {
    record(schedule.total_duration(), rho);
  } else if (!rotations.empty()) {
    result.times.clear();
    result.states.clear();
    record(0.0, rho);
  }
  return result;
}

std::string evolution_to_csv(const EvolutionResult& result) {
  std::string out = "time_s";
  if (!result.states.empty()) {
    const int dim = result.states.front().dim();
    char buf[48];
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        std::snprintf(buf, sizeof buf, ",re_%d_%d,im_%d_%d", r, c, r, c);
        out += buf;
      }
    }
  }
  out += "\n";
  char num[40];
  for (std::size_t k = 0; k < result.times.size(); ++k) {
    std::snprintf(num, sizeof num, "%.12g", result.times[k]);
    out += num;
    const Mat& m = result.states[k].mat();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        std::snprintf(num, sizeof num, ",%.12g", m(r, c).real());
        out += num;
        std::snprintf(num, sizeof num, ",%.12g", m(r, c).imag());
        out += num;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace nvsim
