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

#include "nvsim/pulses.hpp"

#include <algorithm>
#include <cmath>

namespace nvsim {

double envelope_value(const GaussianPulse& p, double t) {
  if (t < p.start() || t > p.end()) return 0.0;
  const double dt = t - p.t0;
  return p.amplitude * std::exp(-dt * dt / (2.0 * p.sigma * p.sigma));
}

double gaussian_pulse_area(double sigma, double truncation) {
  return sigma * std::sqrt(2.0 * M_PI) * std::erf(truncation / std::sqrt(2.0));
}

double pulse_theta(const GaussianPulse& p, double rabi_rate_per_amp) {
  if (rabi_rate_per_amp <= 0) {
    throw std::invalid_argument("rabi_rate_per_amp must be positive");
  }
  return rabi_rate_per_amp * p.amplitude * gaussian_pulse_area(p.sigma, p.truncation);
}

Mat2 rotation_unitary(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex i{0.0, 1.0};
  Mat2 u;
  // cos(t/2) I - i sin(t/2) (sx cos(phi) + sy sin(phi))
  u << c, -i * s * std::exp(-i * phi),
       -i * s * std::exp(i * phi), c;
  return u;
}

double TimedItem::duration() const {
  if (std::holds_alternative<GaussianPulse>(item)) {
    return std::get<GaussianPulse>(item).duration();
  }
  if (std::holds_alternative<Idle>(item)) {
    return std::get<Idle>(item).duration;
  }
  return 0.0;  // ideal rotations are instantaneous
}

PulseSchedule::PulseSchedule(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3) {
    throw std::invalid_argument("schedule supports 1-3 qubits");
  }
  items_.resize(static_cast<std::size_t>(n_qubits));
}

double PulseSchedule::qubit_end(int qubit) const {
  const auto& list = items_.at(qubit);
  return list.empty() ? 0.0 : list.back().end();
}

double PulseSchedule::total_duration() const {
  double t = 0.0;
  for (int q = 0; q < n_qubits(); ++q) t = std::max(t, qubit_end(q));
  return t;
}

void PulseSchedule::insert(int qubit, TimedItem timed) {
  auto& list = items_.at(qubit);
  const double eps = 1e-15;
  for (const auto& other : list) {
    const bool disjoint = timed.end() <= other.start + eps || timed.start >= other.end() - eps;
    if (!disjoint) {
      throw std::invalid_argument("schedule items overlap on qubit " + std::to_string(qubit));
    }
  }
  list.push_back(timed);
  std::sort(list.begin(), list.end(),
            [](const TimedItem& a, const TimedItem& b) { return a.start < b.start; });
}

void PulseSchedule::append(int qubit, const GaussianPulse& pulse) {
  GaussianPulse p = pulse;
  const double start = qubit_end(qubit);
  p.t0 = start + p.truncation * p.sigma;
  insert(qubit, TimedItem{start, p});
}

void PulseSchedule::append(int qubit, const IdealRotation& rot) {
  insert(qubit, TimedItem{qubit_end(qubit), rot});
}

void PulseSchedule::append(int qubit, const Idle& idle) {
  if (idle.duration < 0) throw std::invalid_argument("idle duration must be >= 0");
  insert(qubit, TimedItem{qubit_end(qubit), idle});
}

void PulseSchedule::place(int qubit, double start, const GaussianPulse& pulse) {
  GaussianPulse p = pulse;
  p.t0 = start + p.truncation * p.sigma;
  insert(qubit, TimedItem{start, p});
}

nlohmann::json PulseSchedule::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (int q = 0; q < n_qubits(); ++q) {
    for (const auto& timed : items_[q]) {
      nlohmann::json entry;
      entry["qubit"] = q;
      entry["start_s"] = timed.start;
      if (std::holds_alternative<GaussianPulse>(timed.item)) {
        const auto& p = std::get<GaussianPulse>(timed.item);
        entry["kind"] = "gaussian_pulse";
        entry["params"] = {{"amplitude", p.amplitude}, {"t0_s", p.t0},
                           {"sigma_s", p.sigma},       {"phase_rad", p.phase},
                           {"truncation", p.truncation}};
      } else if (std::holds_alternative<IdealRotation>(timed.item)) {
        const auto& r = std::get<IdealRotation>(timed.item);
        entry["kind"] = "ideal_rotation";
        entry["params"] = {{"theta_rad", r.theta}, {"phi_rad", r.phi}};
      } else {
        entry["kind"] = "idle";
        entry["params"] = {{"duration_s", std::get<Idle>(timed.item).duration}};
      }
      out.push_back(entry);
    }
  }
  return out;
}

const char* to_string(SequenceKind::Type t) {
  switch (t) {
    case SequenceKind::Type::Ramsey: return "ramsey";
    case SequenceKind::Type::HahnEcho: return "hahn_echo";
    case SequenceKind::Type::NuclearImpurity: return "nuclear_impurity";
    case SequenceKind::Type::NvNvImpurity: return "nv_nv";
  }
  return "?";
}

SequenceKind::Type sequence_type_from_string(const std::string& s) {
  if (s == "ramsey") return SequenceKind::Type::Ramsey;
  if (s == "hahn_echo") return SequenceKind::Type::HahnEcho;
  if (s == "nuclear_impurity") return SequenceKind::Type::NuclearImpurity;
  if (s == "nv_nv") return SequenceKind::Type::NvNvImpurity;
  throw std::invalid_argument("unknown sequence kind: " + s);
}

namespace {

GaussianPulse scaled(const GaussianPulse& tmpl, double amp_factor, double phase) {
  GaussianPulse p = tmpl;
  p.amplitude = tmpl.amplitude * amp_factor;
  p.phase = phase;
  return p;
}

void append_echo(PulseSchedule& sched, int qubit, double tau, const GaussianPulse& tmpl,
                 double prep_phase, double refocus_phase, double close_phase) {
  sched.append(qubit, scaled(tmpl, 0.5, prep_phase));
  sched.append(qubit, Idle{tau});
  sched.append(qubit, scaled(tmpl, 1.0, refocus_phase));
  sched.append(qubit, Idle{tau});
  sched.append(qubit, scaled(tmpl, 0.5, close_phase));
}

}  // namespace

PulseSchedule build_sequence(const SequenceKind& kind, const GaussianPulse& tmpl) {
  if (kind.tau < 0) throw std::invalid_argument("sequence tau must be >= 0");
  const double tau = kind.tau;
  constexpr double kX = 0.0;
  constexpr double kY = M_PI / 2.0;

  switch (kind.type) {
    case SequenceKind::Type::Ramsey: {
      PulseSchedule sched(1);
      sched.append(0, scaled(tmpl, 0.5, kX));
      sched.append(0, Idle{tau});
      sched.append(0, scaled(tmpl, 0.5, kX));
      return sched;
    }
    case SequenceKind::Type::HahnEcho: {
      PulseSchedule sched(1);
      append_echo(sched, 0, tau, tmpl, kX, kY, kX);
      return sched;
    }
    case SequenceKind::Type::NuclearImpurity: {
      PulseSchedule sched(2);
      append_echo(sched, 0, tau, tmpl, kX, kY, kX);
      // Impurity is inverted once at t=0 and then left to relax.
      sched.append(1, scaled(tmpl, 1.0, kX));
      sched.append(1, Idle{sched.qubit_end(0) - sched.qubit_end(1)});
      return sched;
    }
    case SequenceKind::Type::NvNvImpurity: {
      PulseSchedule sched(2);
      // |+> on the sensor, |-> on the impurity, shared refocusing axis X.
      append_echo(sched, 0, tau, tmpl, kY, kX, kY);
      append_echo(sched, 1, tau, tmpl, -kY, kX, -kY);
      return sched;
    }
  }
  throw std::invalid_argument("unknown sequence kind");
}

}  // namespace nvsim
