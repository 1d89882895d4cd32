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

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "ramanlc/protocol.hpp"
#include "ramanlc/rng.hpp"

namespace ramanlc {

// Frozen-fluctuation Overhauser model: the nuclear field is one static
// Gaussian draw per experiment, resampled across experiments.
//
// Axes: the applied field defines x; z is the growth axis. The in-plane
// components are suppressed by the hh-lh mixing factor alpha.

struct OverhauserParams {
  double delta_b_perp = 14.0;          // mT, sigma of the z component
  double alpha = 0.0;                  // in-plane sigma = alpha * delta_b_perp
  std::array<double, 3> mean = {0, 0, 0};  // mT

  void validate() const;  // delta_b_perp >= 0, 0 <= alpha <= 1
};

struct OverhauserSample {
  double bx = 0.0, by = 0.0, bz = 0.0;  // mT
};

OverhauserSample sample_overhauser(const OverhauserParams& op, Rng& rng);
OverhauserSample sample_overhauser(const OverhauserParams& op, std::uint64_t seed);

// Spin g-factors used to convert field components to precession frequency.
// The z value is not fixed by the source model; it defaults to the in-plane
// one and is configurable.
struct GFactors {
  double g_h_x = 0.1;
  double g_h_z = -1.0;  // < 0 means "use g_h_x"

  double z() const { return g_h_z < 0.0 ? g_h_x : g_h_z; }
};

// Exact SU(2) rotation about the total field (B_ext + bx, by, bz) for the
// given duration; B_ext is implied by omega_b = g_h_x * mu_B * B_ext / hbar.
// Reduces to diag(e^{-i(w_B+w_N)t/2}, e^{+i(w_B+w_N)t/2}) when by = bz = 0.
Eigen::Matrix2cd noisy_precession(double omega_b, const OverhauserSample& sample,
                                  GFactors g, double duration);

// Closed-form single-photon average fidelity
//   F = 1/2 + sqrt(2 pi) / (4 T_B delta) * erf(T_B delta / sqrt(2)),
// with delta the frequency-units fluctuation g_h_x * mu_B * dB^x / hbar.
// Analytic limit 1 as T_B * delta -> 0.
double analytic_fidelity_n1(double t_bin, double delta_omega);

struct FidelityEstimate {
  double fidelity = 0.0;
  double stderr_ = 0.0;
  int n_samples = 0;
};

// <psi_ideal| rho_bar |psi_ideal> where rho_bar averages the protocol rerun
// with noisy_precession substituted for U_p, one frozen sample per run and
// the same schedule throughout. Throws SampleBudgetTooSmall below 100 samples.
FidelityEstimate ensemble_fidelity(int n, const ScatterSchedule& schedule,
                                   double omega_b, const OverhauserParams& op,
                                   GFactors g, int n_samples, std::uint64_t seed,
                                   int n_threads = 1);

// Same average with the scattering schedule redrawn per sample (each
// experiment has its own random scattering times and frozen field).
FidelityEstimate ensemble_fidelity_random_times(int n, double t_bin, double omega_b,
                                                const OverhauserParams& op, GFactors g,
                                                int n_samples, std::uint64_t seed,
                                                int n_threads = 1);

// Deterministic core used by the estimators and by oracle tests: overlap
// fidelity for explicitly supplied samples.
FidelityEstimate ensemble_fidelity_with_samples(int n, const ScatterSchedule& schedule,
                                                double omega_b,
                                                const std::vector<OverhauserSample>& samples,
                                                GFactors g, int n_threads = 1);

struct CoherenceCurve {
  std::vector<double> t;         // ns
  std::vector<double> envelope;  // |ensemble-averaged transverse pseudospin|
  double t2_star = 0.0;          // ns, first 1/e crossing (linear interpolation)
};

// Transverse pseudospin envelope in the frame rotating at omega_B for a spin
// prepared perpendicular to the applied field. Throws NoCrossing when the
// envelope stays above 1/e on the grid.
CoherenceCurve coherence_envelope(double b_ext_mT, const OverhauserParams& op, GFactors g,
                                  const std::vector<double>& t_grid, int n_samples,
                                  std::uint64_t seed, int n_threads = 1);

}  // namespace ramanlc
