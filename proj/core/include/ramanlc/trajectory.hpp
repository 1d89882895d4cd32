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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramanlc/system.hpp"

namespace ramanlc {

// Quantum-jump Monte Carlo unraveling of the driven four-level system.
//
// Between jumps the state evolves under H_eff with a fixed-step classical RK4
// scheme; for this constant generator the RK4 step equals the quartic Taylor
// propagator, which is precomputed once and applied as a single 4x4 matvec
// per step. Jump times are localised by bisection on the monotone norm.

struct TrajectoryConfig {
  double duration = 1e4;   // ns
  double dt_max = 0.01;    // ns; must satisfy dt_max <= 0.01/gamma
  std::uint64_t seed = 0;  // master seed; trajectory i uses stream (seed, i)
  double t_bin = 0.0;      // ns; bin length for event bookkeeping (0 = single bin)
  int n_bins = 0;          // derived bookkeeping; duration = n_bins * t_bin when set

  void validate(const PhysicalParams& p) const;
};

struct ScatterEvent {
  double t = 0.0;  // ns, strictly increasing within a trajectory
  JumpChannel channel = JumpChannel::kRamanRed;
  int bin_index = 0;  // floor(t / t_bin)
};

struct TrajectoryResult {
  std::vector<ScatterEvent> events;
  LevelState final_state;
};

struct RateEstimate {
  double rate = 0.0;    // 1/ns, = n_events / total_time
  double stderr_ = 0.0; // 1/ns, Poisson: sqrt(n_events) / total_time
  std::int64_t n_events = 0;
  double total_time = 0.0;  // ns
};

// Default initial state (|up> + |dn>)/sqrt(2).
LevelState default_initial_state();

// Runs one trajectory; deterministic given (params, config, stream index).
// Throws NonConvergence if a jump time cannot be bisected to 1e-6 * dt_max.
TrajectoryResult run_trajectory(const PhysicalParams& p, const TrajectoryConfig& c,
                                std::uint64_t trajectory_index = 0,
                                std::optional<LevelState> initial = std::nullopt);

// Second-order perturbative rate of a single Raman transition, Omega_V^2 *
// gamma / (8 Delta^2) with Delta = delta_e + delta_h.
// Throws DegenerateDetuning when Delta == 0.
double perturbative_rate(const PhysicalParams& p);

// Second-order Raman flip amplitudes (dn->up, up->dn), keeping the term driven
// by the vertically polarised field; in units of the emission matrix element.
// |amp|^2 * gamma / 2 equals perturbative_rate up to the common solid-angle
// factor. Throws DegenerateDetuning when delta_h + delta_e == 0.
std::pair<double, double> raman_amplitudes(const PhysicalParams& p);

// Per-bin H-polarised (Raman) event counts; Rayleigh events are excluded.
std::vector<int> bin_statistics(const std::vector<ScatterEvent>& events, double t_bin,
                                int n_bins);

// Monte Carlo estimate of the per-transition Raman rate over n_traj
// trajectories of the given duration. The H-polarised stream contains the two
// alternating Raman colours, so the per-transition estimate divides the event
// count by twice the simulated time; RateEstimate records that exposure.
RateEstimate estimate_raman_rate(const PhysicalParams& p, double duration,
                                 int n_traj, std::uint64_t seed,
                                 double dt_max = 0.01, int n_threads = 1);

struct SuccessEstimate {
  double p_success = 0.0;
  double stderr_ = 0.0;  // binomial
  int n_trials = 0;
};

// Probability that each of n consecutive bins of length t_bin contains exactly
// one Raman event. Trials are independent trajectories of duration n * t_bin,
// each starting from (|up>+|dn>)/sqrt(2).
SuccessEstimate success_probability(const PhysicalParams& p, double t_bin, int n,
                                    int n_traj, std::uint64_t seed,
                                    double dt_max = 0.01, int n_threads = 1);

}  // namespace ramanlc
