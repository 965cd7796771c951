// SPDX-License-Identifier: Apache-2.0
//
// irsmux - placement and resource allocation for multi-IRS aided MIMO links
// Copyright (C) 2026 The irsmux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "irsmux/allocation.hpp"
#include "irsmux/errors.hpp"

namespace irsmux {

namespace {

constexpr double kClamp = 1e-9;
constexpr double kFrozen = kClamp * (1.0 + 1e-6);
const double kLn2 = std::numbers::ln2;

// Reduced concave program over z = (p_1..p_n, m_1..m_n):
//   sum_k log2(1 + c_k (1 + ln p_k + ln(2 mh_k m_k - mh_k^2) - s_k))
// subject to sum p = P and sum m = M.
struct Reduced {
  std::vector<double> c;   // chi_k e^{x^ + y^}
  std::vector<double> s;   // x^ + y^
  std::vector<double> mh;  // local element counts
  double power = 0.0;
  double elements = 0.0;

  std::size_t n() const { return c.size(); }

  // Returns -inf outside the domain.
  double value(const Eigen::VectorXd& z) const {
    double f = 0.0;
    for (std::size_t k = 0; k < n(); ++k) {
      const double p = z(static_cast<Eigen::Index>(k));
      const double m = z(static_cast<Eigen::Index>(n() + k));
      const double q = 2.0 * mh[k] * m - mh[k] * mh[k];
      if (!(p > 0) || !(q > 0)) return -std::numeric_limits<double>::infinity();
      const double u = 1.0 + c[k] * (1.0 + std::log(p) + std::log(q) - s[k]);
      if (!(u > 0)) return -std::numeric_limits<double>::infinity();
      f += std::log(u);
    }
    return f / kLn2;
  }

  void derivatives(const Eigen::VectorXd& z, Eigen::VectorXd& grad, Eigen::MatrixXd& neg_hess) const {
    const auto nn = static_cast<Eigen::Index>(n());
    grad.setZero(2 * nn);
    neg_hess.setZero(2 * nn, 2 * nn);
    for (Eigen::Index k = 0; k < nn; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      const double p = z(k);
      const double m = z(nn + k);
      const double q = 2.0 * mh[ku] * m - mh[ku] * mh[ku];
      const double u = 1.0 + c[ku] * (1.0 + std::log(p) + std::log(q) - s[ku]);
      const double a = c[ku] / u;
      const double hp = 1.0 / p;
      const double hm = 2.0 * mh[ku] / q;
      grad(k) = a * hp / kLn2;
      grad(nn + k) = a * hm / kLn2;
      neg_hess(k, k) = (a + a * a) * hp * hp / kLn2;
      neg_hess(nn + k, nn + k) = (a + a * a) * hm * hm / kLn2;
      neg_hess(k, nn + k) = a * a * hp * hm / kLn2;
      neg_hess(nn + k, k) = neg_hess(k, nn + k);
    }
  }
};

// Relative spread of the gradient entries around their equality multiplier.
double kkt_residual(const Eigen::VectorXd& grad, Eigen::Index n) {
  double worst = 0.0;
  for (int block = 0; block < 2; ++block) {
    const auto g = grad.segment(block * n, n);
    const double nu = g.mean();
    const double scale = std::max(std::abs(nu), std::numeric_limits<double>::min());
    worst = std::max(worst, (g.array() - nu).abs().maxCoeff() / scale);
  }
  return worst;
}

}  // namespace

ScaState make_sca_state(std::span<const double> powers, std::span<const double> elements,
                        std::span<const double> chi) {
  if (powers.size() != chi.size() || elements.size() != chi.size())
    throw DomainError("make_sca_state: length mismatch");
  ScaState st;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    const double p = std::max(powers[k], kClamp);
    const double m = std::max(elements[k], kClamp);
    st.x_hat.push_back(std::log(p));
    st.y_hat.push_back(2.0 * std::log(m));
    st.m_hat.push_back(m);
    st.l.push_back(chi[k] * p * m * m);
  }
  return st;
}

namespace {

struct NewtonRun {
  Eigen::VectorXd z;
  bool converged = false;
  int iterations = 0;
  double decrement = 0.0;
  double kkt_residual = 0.0;
};

// Damped Newton on the reduced program from a feasible start.
NewtonRun maximise(const Reduced& prob, Eigen::VectorXd z, const SubproblemOptions& options) {
  const auto n = static_cast<Eigen::Index>(prob.n());
  NewtonRun run;
  double f = prob.value(z);
  if (!std::isfinite(f))
    throw SolverError("convex_subproblem: start point outside the domain",
                      {z.data(), z.data() + z.size()}, NAN, NAN);

  // Steps live in the null space of the two budget equalities: within each
  // block, free coordinates move and the last one absorbs the negated sum.
  // Budget-normalised coordinates keep both blocks O(1).
  const Eigen::Index free = 2 * (n - 1);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(2 * n, free);
  for (Eigen::Index b = 0; b < 2; ++b) {
    const double unit = b == 0 ? prob.power : prob.elements;
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
      basis(b * n + j, b * (n - 1) + j) = unit;
      basis(b * n + n - 1, b * (n - 1) + j) = -unit;
    }
  }

  Eigen::VectorXd grad;
  Eigen::MatrixXd neg_hess;
  run.converged = free == 0;
  int it = 0;
  for (; !run.converged && it < options.max_newton_iterations; ++it) {
    prob.derivatives(z, grad, neg_hess);
    const Eigen::VectorXd g = basis.transpose() * grad;
    const Eigen::MatrixXd h = basis.transpose() * neg_hess * basis;
    const Eigen::VectorXd step = h.ldlt().solve(g);
    run.decrement = 0.5 * step.dot(g);
    if (!(run.decrement > options.gap_tolerance)) {
      run.converged = true;
      break;
    }

    const Eigen::VectorXd dz = basis * step;
    const double slope = grad.dot(dz);
    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 80; ++ls, t *= 0.5) {
      const Eigen::VectorXd trial = z + t * dz;
      const double ft = prob.value(trial);
      if (std::isfinite(ft) && ft >= f + 0.25 * t * slope) {
        z = trial;
        f = ft;
        moved = true;
        break;
      }
    }
    if (!moved) {
      // roundoff floor: accept if the remaining gap is negligible
      run.converged = run.decrement <= 1e-9;
      break;
    }
  }
  // iteration cap with a negligible remaining gap counts as converged
  if (!run.converged && run.decrement <= 1e-9) run.converged = true;
  run.iterations = it;
  prob.derivatives(z, grad, neg_hess);
  run.kkt_residual = kkt_residual(grad, n);
  run.z = std::move(z);
  return run;
}

}  // namespace

SubproblemResult convex_subproblem(const ChannelQuality& chi, const SystemConfig& config,
                                   const ScaState& state, const SubproblemOptions& options) {
  const std::size_t count = chi.size();
  if (state.x_hat.size() != count || state.y_hat.size() != count || state.m_hat.size() != count)
    throw DomainError("convex_subproblem: local point does not match the number of surfaces");
  if (!(config.power_budget > 0))
    throw DomainError("convex_subproblem: power budget must be positive");

  SubproblemResult res;
  res.p.assign(count, 0.0);
  res.m_tilde.assign(count, 0.0);
  res.l.assign(count, 0.0);
  res.x.assign(count, -std::numeric_limits<double>::infinity());
  res.y.assign(count, -std::numeric_limits<double>::infinity());
  res.frozen.assign(count, true);

  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < count; ++k) {
    if (!(state.m_hat[k] > 0)) throw DomainError("convex_subproblem: local M must be positive");
    const double p_hat = std::exp(state.x_hat[k]);
    if (chi.chi[k] <= 0 || p_hat <= kFrozen || state.m_hat[k] <= kFrozen) continue;
    active.push_back(k);
  }

  Reduced prob;
  NewtonRun run;
  int newton_total = 0;
  for (;;) {
    if (active.empty()) throw DomainError("convex_subproblem: every surface is frozen at zero");
    prob = Reduced{};
    prob.power = config.power_budget;
    prob.elements = static_cast<double>(config.element_budget);
    double p_hat_sum = 0.0;
    double m_hat_sum = 0.0;
    for (std::size_t k : active) {
      prob.s.push_back(state.x_hat[k] + state.y_hat[k]);
      prob.c.push_back(chi.chi[k] * std::exp(prob.s.back()));
      prob.mh.push_back(state.m_hat[k]);
      p_hat_sum += std::exp(state.x_hat[k]);
      m_hat_sum += state.m_hat[k];
    }
    if (!(m_hat_sum < 2.0 * prob.elements))
      throw DomainError("convex_subproblem: local point leaves no feasible element split");

    const auto n = static_cast<Eigen::Index>(active.size());
    Eigen::VectorXd z(2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const std::size_t src = active[static_cast<std::size_t>(k)];
      z(k) = prob.power * std::exp(state.x_hat[src]) / p_hat_sum;
      z(n + k) = prob.elements * state.m_hat[src] / m_hat_sum;
    }
    run = maximise(prob, std::move(z), options);
    newton_total += run.iterations;
    if (run.converged) break;

    // An optimum on the p_k = 0 face cannot be certified in the log domain;
    // freeze collapsed surfaces and solve again over the rest.
    std::vector<std::size_t> kept;
    for (Eigen::Index k = 0; k < n; ++k)
      if (run.z(k) > 1e-6 * prob.power) kept.push_back(active[static_cast<std::size_t>(k)]);
    if (kept.empty() || kept.size() == active.size()) {
      throw SolverError("convex_subproblem: Newton iteration did not converge",
                        {run.z.data(), run.z.data() + run.z.size()}, run.kkt_residual,
                        run.decrement);
    }
    active = std::move(kept);
  }
  for (std::size_t k : active) res.frozen[k] = false;
  res.newton_iterations = newton_total;
  res.newton_decrement = run.decrement;
  res.kkt_residual = run.kkt_residual;
  const auto n = static_cast<Eigen::Index>(active.size());
  const Eigen::VectorXd& z = run.z;

  double objective = 0.0;
  double worst = 0.0;
  double p_sum = 0.0;
  double m_sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const std::size_t dst = active[static_cast<std::size_t>(k)];
    const auto ku = static_cast<std::size_t>(k);
    const double p = z(k);
    const double m = z(n + k);
    const double q = 2.0 * prob.mh[ku] * m - prob.mh[ku] * prob.mh[ku];
    res.p[dst] = p;
    res.m_tilde[dst] = m;
    res.x[dst] = std::log(p);
    res.y[dst] = std::log(q);
    res.l[dst] = prob.c[ku] * (1.0 + res.x[dst] + res.y[dst] - prob.s[ku]);
    objective += std::log1p(res.l[dst]) / kLn2;
    p_sum += p;
    m_sum += m;
    worst = std::max(worst, (std::exp(res.x[dst]) - p) / p);
    worst = std::max(worst, (std::exp(res.y[dst]) - q) / q);
    worst = std::max(worst, std::max(0.0, -p));
    worst = std::max(worst, std::max(0.0, -m));
  }
  worst = std::max(worst, (p_sum - prob.power) / prob.power);
  worst = std::max(worst, (m_sum - prob.elements) / prob.elements);
  res.objective = objective;
  res.max_residual = std::max(worst, 0.0);
  return res;
}

}  // namespace irsmux
