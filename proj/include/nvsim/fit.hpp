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

#include <functional>
#include <string>
#include <vector>

namespace nvsim {

struct FitResult {
  std::vector<std::string> names;
  std::vector<double> params;
  double residual_norm = 0.0;  // sqrt(sum of squared residuals)
  bool converged = false;
  int iterations = 0;
  std::vector<std::string> flags;

  double param(const std::string& name) const;
  bool has_flag(const std::string& flag) const;
};

struct FitOptions {
  int max_iterations = 200;
  double param_tol = 1e-8;      // relative parameter change at convergence
  double jacobian_step = 1e-6;  // relative central-difference step
  // Called with (iteration, cost) after every accepted step.
  std::function<void(int, double)> on_accept;
};

using ModelFn = std::function<double(double, const std::vector<double>&)>;

/// Levenberg-Marquardt-style damped Gauss-Newton with numeric Jacobians.
/// Steps are only accepted when they reduce the squared-residual cost.
FitResult curve_fit(const ModelFn& model, const std::vector<double>& xs,
                    const std::vector<double>& ys, std::vector<double> initial,
                    std::vector<std::string> names, const FitOptions& opts = {});

/// Least-squares coefficients for y ~ sum_k c_k * basis_k(x).
std::vector<double> solve_linear_ls(
    const std::vector<std::function<double(double)>>& basis,
    const std::vector<double>& xs, const std::vector<double>& ys);

double linear_ls_residual(const std::vector<std::function<double(double)>>& basis,
                          const std::vector<double>& coeffs,
                          const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace nvsim
