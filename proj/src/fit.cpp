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

#include "nvsim/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace nvsim {

double FitResult::param(const std::string& name) const {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return params[k];
  }
  throw std::invalid_argument("no fit parameter named " + name);
}

bool FitResult::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

namespace {

double cost_of(const ModelFn& model, const std::vector<double>& xs,
               const std::vector<double>& ys, const std::vector<double>& p) {
  double cost = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - model(xs[i], p);
    cost += r * r;
  }
  return cost;
}

}  // namespace

FitResult curve_fit(const ModelFn& model, const std::vector<double>& xs,
                    const std::vector<double>& ys, std::vector<double> p,
                    std::vector<std::string> names, const FitOptions& opts) {
  if (xs.size() != ys.size()) throw std::invalid_argument("x/y length mismatch");
  const std::size_t n = xs.size();
  const std::size_t np = p.size();
  if (n < np + 1) throw std::invalid_argument("not enough data points for the model");
  if (!names.empty() && names.size() != np) {
    throw std::invalid_argument("parameter name count mismatch");
  }

  double cost = cost_of(model, xs, ys, p);
  double lambda = 1e-3;
  bool converged = false;
  int accepted = 0;

  Eigen::MatrixXd jac(n, np);
  Eigen::VectorXd resid(n);

  for (int iter = 0; iter < opts.max_iterations && !converged; ++iter) {
    for (std::size_t i = 0; i < n; ++i) resid(i) = ys[i] - model(xs[i], p);

    // Central differences, step relative to parameter magnitude.
    for (std::size_t j = 0; j < np; ++j) {
      const double h = opts.jacobian_step * (1.0 + std::abs(p[j]));
      std::vector<double> lo = p, hi = p;
      hi[j] += h;
      lo[j] -= h;
      for (std::size_t i = 0; i < n; ++i) {
        jac(i, j) = (model(xs[i], hi) - model(xs[i], lo)) / (2.0 * h);
      }
    }

    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * resid;

    bool stepped = false;
    for (int damp = 0; damp < 40; ++damp) {
      Eigen::MatrixXd damped = jtj;
      for (std::size_t j = 0; j < np; ++j) {
        damped(j, j) += lambda * std::max(jtj(j, j), 1e-30);
      }
      const Eigen::VectorXd delta = damped.ldlt().solve(jtr);
      if (!delta.allFinite()) {
        lambda *= 6.0;
        continue;
      }
      std::vector<double> trial = p;
      for (std::size_t j = 0; j < np; ++j) trial[j] += delta(j);
      const double trial_cost = cost_of(model, xs, ys, trial);
      if (trial_cost < cost) {
        double rel_change = 0.0;
        for (std::size_t j = 0; j < np; ++j) {
          rel_change = std::max(rel_change, std::abs(delta(j)) / (1.0 + std::abs(p[j])));
        }
        p = trial;
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-12);
        ++accepted;
        if (opts.on_accept) opts.on_accept(accepted, cost);
        if (rel_change < opts.param_tol) converged = true;
        stepped = true;
        break;
      }
      lambda *= 6.0;
    }
    if (!stepped) {
      // No damping level improved the cost: stationary within precision.
      converged = true;
    }
  }

  FitResult out;
  out.names = std::move(names);
  out.params = std::move(p);
  out.residual_norm = std::sqrt(cost);
  out.converged = converged;
  out.iterations = accepted;
  return out;
}

std::vector<double> solve_linear_ls(
    const std::vector<std::function<double(double)>>& basis,
    const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  const std::size_t k = basis.size();
  Eigen::MatrixXd a(n, k);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = basis[j](xs[i]);
    b(i) = ys[i];
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
  return std::vector<double>(c.data(), c.data() + k);
}

double linear_ls_residual(const std::vector<std::function<double(double)>>& basis,
                          const std::vector<double>& coeffs,
                          const std::vector<double>& xs, const std::vector<double>& ys) {
  double cost = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double fit = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) fit += coeffs[j] * basis[j](xs[i]);
    const double r = ys[i] - fit;
    cost += r * r;
  }
  return cost;
}

}  // namespace nvsim
