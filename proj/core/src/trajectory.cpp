// Copyright 2026 The ramanlc Authors
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

#include "ramanlc/trajectory.hpp"

#include <cmath>

#include "ramanlc/errors.hpp"
#include "ramanlc/parallel.hpp"
#include "ramanlc/rng.hpp"

namespace ramanlc {

namespace {

// Degree-4 Taylor polynomial of exp(h*A); identical to one classical RK4 step
// for the autonomous linear system psi' = A psi.
Matrix4cd rk4_propagator(const Matrix4cd& a, double h) {
  const Matrix4cd id = Matrix4cd::Identity();
  Matrix4cd p = id + (h / 4.0) * a;
  p = id + (h / 3.0) * (a * p);
  p = id + (h / 2.0) * (a * p);
  p = id + h * (a * p);
  return p;
}

struct JumpWeights {
  double w[4];
  double total;
};

JumpWeights channel_weights(const LevelState& psi, double gamma) {
  // C_c = |g><t|: the weight gamma * |<t|psi>|^2 only probes trion amplitudes.
  JumpWeights jw{};
  jw.total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto [g, t] = channel_levels(kAllChannels[i]);
    (void)g;
    jw.w[i] = gamma * std::norm(psi(t));
    jw.total += jw.w[i];
  }
  return jw;
}

}  // namespace

void TrajectoryConfig::validate(const PhysicalParams& p) const {
  p.validate();
  if (!(duration > 0.0)) throw ValidationError("duration must be > 0");
  if (!(dt_max > 0.0)) throw ValidationError("dt_max must be > 0");
  if (dt_max > 0.01 / p.gamma + 1e-15)
    throw ValidationError("dt_max must be <= 0.01/gamma");
  if (t_bin < 0.0) throw ValidationError("t_bin must be >= 0");
  if (n_bins > 0 && t_bin > 0.0 &&
      std::abs(duration - n_bins * t_bin) > 1e-9 * duration)
    throw ValidationError("duration must equal n_bins * t_bin");
}

LevelState default_initial_state() {
  LevelState s;
  s << 1.0, 1.0, 0.0, 0.0;
  return s / std::sqrt(2.0);
}

TrajectoryResult run_trajectory(const PhysicalParams& p, const TrajectoryConfig& c,
                                std::uint64_t trajectory_index,
                                std::optional<LevelState> initial) {
  c.validate(p);
  const Matrix4cd drift = std::complex<double>(0.0, -1.0) * build_effective_hamiltonian(p);
  const double dt = c.dt_max;
  const Matrix4cd step = rk4_propagator(drift, dt);

  Rng rng(c.seed, trajectory_index);
  LevelState psi = initial.value_or(default_initial_state());
  psi.normalize();

  TrajectoryResult result;
  double t = 0.0;
  double threshold = rng.uniform_open_closed();
  double norm2 = 1.0;

  while (t < c.duration - 1e-12) {
    const double h = std::min(dt, c.duration - t);
    LevelState next = (h == dt) ? LevelState(step * psi)
                                : LevelState(rk4_propagator(drift, h) * psi);
    const double next_norm2 = next.squaredNorm();
    if (next_norm2 > norm2 + 1e-12)
      throw NonConvergence("norm increased between jumps; dt_max too large");

    if (next_norm2 > threshold) {
      psi = next;
      norm2 = next_norm2;
      t += h;
      continue;
    }

    // Jump inside (t, t+h]: bisect the monotone norm for the crossing time.
    double lo = 0.0, hi = h;
    const double tol = 1e-6 * c.dt_max;
    int iters = 0;
    while (hi - lo > tol) {
      if (++iters > 200) throw NonConvergence("jump-time bisection stalled");
      const double mid = 0.5 * (lo + hi);
      if ((rk4_propagator(drift, mid) * psi).squaredNorm() > threshold)
        lo = mid;
      else
        hi = mid;
    }
    const double s = 0.5 * (lo + hi);
    LevelState at_jump = rk4_propagator(drift, s) * psi;
    const double t_jump = t + s;

    const JumpWeights jw = channel_weights(at_jump, p.gamma);
    if (jw.total < 1e-300) {
      // No decaying amplitude; the threshold was met only by integrator
      // round-off. Undo the drift and rearm.
      psi = next / std::sqrt(next_norm2);
      norm2 = 1.0;
      threshold = rng.uniform_open_closed();
      t += h;
      continue;
    }
    const double u = rng.uniform() * jw.total;
    int pick = 3;
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
      acc += jw.w[i];
      if (u <= acc) {
        pick = i;
        break;
      }
    }
    const JumpChannel channel = kAllChannels[pick];
    const auto [g, tr] = channel_levels(channel);
    LevelState collapsed = LevelState::Zero();
    collapsed(g) = at_jump(tr);
    psi = collapsed / collapsed.norm();
    norm2 = 1.0;

    ScatterEvent ev;
    ev.t = t_jump;
    ev.channel = channel;
    ev.bin_index = c.t_bin > 0.0 ? static_cast<int>(std::floor(t_jump / c.t_bin)) : 0;
    result.events.push_back(ev);

    t = t_jump;
    threshold = rng.uniform_open_closed();
  }

  result.final_state = psi;
  return result;
}

double perturbative_rate(const PhysicalParams& p) {
  const auto [delta_h, delta_e] = zeeman_frequencies(p);
  const double delta = delta_h + delta_e;
  if (delta == 0.0) throw DegenerateDetuning("delta_e + delta_h is zero");
  return p.omega_v * p.omega_v * p.gamma / (8.0 * delta * delta);
}

std::pair<double, double> raman_amplitudes(const PhysicalParams& p) {
  const auto [delta_h, delta_e] = zeeman_frequencies(p);
  const double d1 = delta_h + delta_e;   // dn -> up path through T_dn
  const double d2 = -delta_h - delta_e;  // up -> dn path through T_up
  if (d1 == 0.0 || d2 == 0.0) throw DegenerateDetuning("degenerate Raman denominator");
  return {0.5 * p.omega_v / d1, 0.5 * p.omega_v / d2};
}

std::vector<int> bin_statistics(const std::vector<ScatterEvent>& events, double t_bin,
                                int n_bins) {
  if (!(t_bin > 0.0) || n_bins <= 0) throw ValidationError("bins must be positive");
  std::vector<int> counts(static_cast<std::size_t>(n_bins), 0);
  for (const auto& ev : events) {
    if (!is_h_polarised(ev.channel)) continue;
    const int b = static_cast<int>(std::floor(ev.t / t_bin));
    if (b >= 0 && b < n_bins) ++counts[static_cast<std::size_t>(b)];
  }
  return counts;
}

RateEstimate estimate_raman_rate(const PhysicalParams& p, double duration, int n_traj,
                                 std::uint64_t seed, double dt_max, int n_threads) {
  if (n_traj < 1) throw ValidationError("n_traj must be >= 1");
  TrajectoryConfig c;
  c.duration = duration;
  c.dt_max = dt_max;
  c.seed = seed;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n_traj), 0);
  parallel_for_indexed(static_cast<std::size_t>(n_traj), n_threads, [&](std::size_t i) {
    const TrajectoryResult r = run_trajectory(p, c, i);
    std::int64_t n_h = 0;
    for (const auto& ev : r.events) n_h += is_h_polarised(ev.channel);
    counts[i] = n_h;
  });
  RateEstimate est;
  for (std::int64_t n : counts) est.n_events += n;
  // Two Raman transitions share the H-polarised stream: per-transition
  // exposure is twice the simulated time.
  est.total_time = 2.0 * duration * n_traj;
  est.rate = static_cast<double>(est.n_events) / est.total_time;
  est.stderr_ = std::sqrt(static_cast<double>(est.n_events)) / est.total_time;
  return est;
}

SuccessEstimate success_probability(const PhysicalParams& p, double t_bin, int n,
                                    int n_traj, std::uint64_t seed, double dt_max,
                                    int n_threads) {
  if (n < 1) throw ValidationError("n must be >= 1");
  if (n_traj < 1) throw ValidationError("n_traj must be >= 1");
  TrajectoryConfig c;
  c.duration = n * t_bin;
  c.dt_max = dt_max;
  c.seed = seed;
  c.t_bin = t_bin;
  c.n_bins = n;
  std::vector<unsigned char> success(static_cast<std::size_t>(n_traj), 0);
  parallel_for_indexed(static_cast<std::size_t>(n_traj), n_threads, [&](std::size_t i) {
    const TrajectoryResult r = run_trajectory(p, c, i);
    const std::vector<int> counts = bin_statistics(r.events, t_bin, n);
    bool ok = true;
    for (int b = 0; b < n; ++b) ok = ok && counts[static_cast<std::size_t>(b)] == 1;
    success[i] = ok ? 1 : 0;
  });
  int hits = 0;
  for (unsigned char s : success) hits += s;
  SuccessEstimate est;
  est.n_trials = n_traj;
  est.p_success = static_cast<double>(hits) / n_traj;
  est.stderr_ = std::sqrt(est.p_success * (1.0 - est.p_success) / n_traj);
  return est;
}

}  // namespace ramanlc
