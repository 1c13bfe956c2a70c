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
#include <variant>
#include <vector>

#include "nvsim/qcore.hpp"

#include <json.hpp>

namespace nvsim {

/// Gaussian microwave pulse envelope, truncated to t0 +- truncation*sigma.
/// Phase selects the rotation axis in the rotating frame (0 -> X, pi/2 -> Y);
/// the carrier omega is informational except in lab-frame calibration models.
struct GaussianPulse {
  double amplitude = 0.0;   // a.u.
  double t0 = 0.0;          // s, pulse center
  double sigma = 10e-9;     // s
  double omega = 0.0;       // rad/s
  double phase = 0.0;       // rad
  double truncation = 3.0;  // window half-width in units of sigma

  double start() const { return t0 - truncation * sigma; }
  double end() const { return t0 + truncation * sigma; }
  double duration() const { return 2.0 * truncation * sigma; }
};

double envelope_value(const GaussianPulse& p, double t);

/// Area of the truncated envelope at unit amplitude:
/// integral of exp(-(t-t0)^2 / 2 sigma^2) over the window.
double gaussian_pulse_area(double sigma, double truncation);

/// Rotation angle delivered by a pulse given the drive-to-Rabi conversion.
double pulse_theta(const GaussianPulse& p, double rabi_rate_per_amp);

/// exp(-i theta/2 (sx cos(phi) + sy sin(phi)))
Mat2 rotation_unitary(double theta, double phi);

struct IdealRotation {
  double theta = 0.0;  // rad, in [0, 2*pi)
  double phi = 0.0;    // rad
};

struct Idle {
  double duration = 0.0;  // s
};

struct TimedItem {
  double start = 0.0;
  std::variant<GaussianPulse, IdealRotation, Idle> item;

  double duration() const;
  double end() const { return start + duration(); }
};

/// Per-qubit timed item lists. Items on one qubit must not overlap.
class PulseSchedule {
 public:
  explicit PulseSchedule(int n_qubits);

  /// Appends an item at the current end of the qubit's timeline.
  void append(int qubit, const GaussianPulse& pulse);
  void append(int qubit, const IdealRotation& rot);
  void append(int qubit, const Idle& idle);

  /// Places an item at an explicit start time (overlap-checked).
  void place(int qubit, double start, const GaussianPulse& pulse);

  int n_qubits() const { return static_cast<int>(items_.size()); }
  const std::vector<TimedItem>& items(int qubit) const { return items_.at(qubit); }
  double qubit_end(int qubit) const;
  double total_duration() const;

  nlohmann::json to_json() const;

 private:
  void insert(int qubit, TimedItem timed);

  std::vector<std::vector<TimedItem>> items_;
};

struct SequenceKind {
  enum class Type { Ramsey, HahnEcho, NuclearImpurity, NvNvImpurity };
  Type type = Type::Ramsey;
  double tau = 0.0;  // s, free-evolution interval (per interval for echoes)
};

const char* to_string(SequenceKind::Type t);
SequenceKind::Type sequence_type_from_string(const std::string& s);

/// Builds the named sequence from a pulse template whose amplitude is the
/// calibrated pi-pulse amplitude. Pi/2 pulses use half the template amplitude.
///
///   Ramsey:          q0: pi/2(X) - tau - pi/2(X)
///   HahnEcho:        q0: pi/2(X) - tau - pi(Y) - tau - pi/2(X)
///   NuclearImpurity: sensor HahnEcho; q1: initial pi(X), then idle
///   NvNvImpurity:    echo on both; q0 prepared in |+> (pi/2 about Y),
///                    q1 in |-> (pi/2 about -Y), refocusing pi about X
PulseSchedule build_sequence(const SequenceKind& kind, const GaussianPulse& tmpl);

}  // namespace nvsim
