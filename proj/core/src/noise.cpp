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

#include "ramanlc/noise.hpp"

#include <cmath>
#include <complex>

#include "ramanlc/errors.hpp"
#include "ramanlc/parallel.hpp"
#include "ramanlc/system.hpp"

namespace ramanlc {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

// Protocol run with the ideal precession replaced by the noisy rotation.
JointState run_protocol_noisy(int n, const ScatterSchedule& schedule, double omega_b,
                              const OverhauserSample& sample, GFactors g) {
  JointState state = JointState::initial(n);
  for (int k = 1; k <= n; ++k) {
    const double tau1 = schedule.tau1[static_cast<std::size_t>(k - 1)];
    apply_spin_unitary(state, noisy_precession(omega_b, sample, g, tau1));
    apply_t_s(state, k);
    apply_spin_unitary(state, noisy_precession(omega_b, sample, g, schedule.t_bin - tau1));
    apply_u_r(state);
  }
  return state;
}

double overlap_fidelity(const JointState& a, const JointState& b) {
  return std::norm(a.amps.dot(b.amps));
}

FidelityEstimate reduce_samples(const std::vector<double>& vals) {
  FidelityEstimate est;
  est.n_samples = static_cast<int>(vals.size());
  double sum = 0.0;
  for (double v : vals) sum += v;
  est.fidelity = sum / est.n_samples;
  double ss = 0.0;
  for (double v : vals) ss += (v - est.fidelity) * (v - est.fidelity);
  est.stderr_ = est.n_samples > 1
                    ? std::sqrt(ss / (est.n_samples - 1.0) / est.n_samples)
                    : 0.0;
  return est;
}

}  // namespace

void OverhauserParams::validate() const {
  if (delta_b_perp < 0.0) throw ValidationError("delta_b_perp must be >= 0");
  if (alpha < 0.0 || alpha > 1.0) throw ValidationError("alpha must be in [0, 1]");
}

OverhauserSample sample_overhauser(const OverhauserParams& op, Rng& rng) {
  op.validate();
  const double sigma_par = op.alpha * op.delta_b_perp;
  OverhauserSample s;
  s.bx = rng.normal(op.mean[0], sigma_par);
  s.by = rng.normal(op.mean[1], sigma_par);
  s.bz = rng.normal(op.mean[2], op.delta_b_perp);
  return s;
}

OverhauserSample sample_overhauser(const OverhauserParams& op, std::uint64_t seed) {
  Rng rng(seed);
  return sample_overhauser(op, rng);
}

Eigen::Matrix2cd noisy_precession(double omega_b, const OverhauserSample& sample,
                                  GFactors g, double duration) {
  if (duration < 0.0) throw ValidationError("duration must be >= 0");
  // Frequency-units field vector; x is the applied-field axis.
  const double vx = omega_b + g.g_h_x * kMuBOverHbar * sample.bx;
  const double vy = g.g_h_x * kMuBOverHbar * sample.by;
  const double vz = g.z() * kMuBOverHbar * sample.bz;
  const double rate = std::sqrt(vx * vx + vy * vy + vz * vz);
  if (rate == 0.0) return Eigen::Matrix2cd::Identity();
  const double nx = vx / rate, ny = vy / rate, nz = vz / rate;
  const double half = 0.5 * rate * duration;
  const double c = std::cos(half), s = std::sin(half);
  // Physical axes map onto spin-basis Paulis as (x, y, z) -> (sz, sx, sy):
  // the applied-field axis is diagonal in the (up, dn) eigenbasis.
  Eigen::Matrix2cd u;
  u(0, 0) = c - kI * s * nx;
  u(1, 1) = c + kI * s * nx;
  u(0, 1) = -kI * s * ny - s * nz;
  u(1, 0) = -kI * s * ny + s * nz;
  return u;
}

double analytic_fidelity_n1(double t_bin, double delta_omega) {
  if (!(t_bin > 0.0)) throw ValidationError("t_bin must be > 0");
  if (delta_omega < 0.0) throw ValidationError("delta_omega must be >= 0");
  const double x = t_bin * delta_omega;
  if (x < 1e-4) {
    // erf expansion; relative error below 1e-16 in this range.
    return 1.0 - x * x / 12.0 + x * x * x * x / 80.0;
  }
  return 0.5 + std::sqrt(2.0 * std::numbers::pi) / (4.0 * x) * std::erf(x / std::sqrt(2.0));
}

FidelityEstimate ensemble_fidelity_with_samples(int n, const ScatterSchedule& schedule,
                                                double omega_b,
                                                const std::vector<OverhauserSample>& samples,
                                                GFactors g, int n_threads) {
  auto [ideal, ledger] = run_protocol(n, schedule, omega_b);
  (void)ledger;
  std::vector<double> vals(samples.size());
  parallel_for_indexed(samples.size(), n_threads, [&](std::size_t i) {
    const JointState noisy = run_protocol_noisy(n, schedule, omega_b, samples[i], g);
    vals[i] = overlap_fidelity(ideal, noisy);
  });
  return reduce_samples(vals);
}

FidelityEstimate ensemble_fidelity(int n, const ScatterSchedule& schedule, double omega_b,
                                   const OverhauserParams& op, GFactors g, int n_samples,
                                   std::uint64_t seed, int n_threads) {
  if (n_samples < 100) throw SampleBudgetTooSmall("need at least 100 samples");
  op.validate();
  std::vector<OverhauserSample> samples(static_cast<std::size_t>(n_samples));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Rng rng(seed, i);
    samples[i] = sample_overhauser(op, rng);
  }
  return ensemble_fidelity_with_samples(n, schedule, omega_b, samples, g, n_threads);
}

FidelityEstimate ensemble_fidelity_random_times(int n, double t_bin, double omega_b,
                                                const OverhauserParams& op, GFactors g,
                                                int n_samples, std::uint64_t seed,
                                                int n_threads) {
  if (n_samples < 100) throw SampleBudgetTooSmall("need at least 100 samples");
  op.validate();
  std::vector<double> vals(static_cast<std::size_t>(n_samples));
  parallel_for_indexed(vals.size(), n_threads, [&](std::size_t i) {
    Rng rng(seed, i);
    const ScatterSchedule schedule = ScatterSchedule::random(n, t_bin, rng);
    const OverhauserSample sample = sample_overhauser(op, rng);
    auto [ideal, ledger] = run_protocol(n, schedule, omega_b);
    (void)ledger;
    const JointState noisy = run_protocol_noisy(n, schedule, omega_b, sample, g);
    vals[i] = overlap_fidelity(ideal, noisy);
  });
  return reduce_samples(vals);
}

CoherenceCurve coherence_envelope(double b_ext_mT, const OverhauserParams& op, GFactors g,
                                  const std::vector<double>& t_grid, int n_samples,
                                  std::uint64_t seed, int n_threads) {
  op.validate();
  if (t_grid.empty()) throw ValidationError("t_grid must be non-empty");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1]) throw ValidationError("t_grid must be ascending");
  if (n_samples < 1) throw ValidationError("n_samples must be >= 1");

  const double omega_b = g.g_h_x * kMuBOverHbar * b_ext_mT;
  const std::size_t n_t = t_grid.size();
  // Fixed chunk count, independent of the worker count, so the reduction
  // order (and the output bytes) never depend on the thread count.
  constexpr std::size_t kChunks = 16;
  std::vector<std::vector<std::complex<double>>> partial(
      kChunks, std::vector<std::complex<double>>(n_t, {0.0, 0.0}));
  const std::size_t per_chunk = (static_cast<std::size_t>(n_samples) + kChunks - 1) / kChunks;
  parallel_for_indexed(kChunks, n_threads, [&](std::size_t w) {
    auto& acc = partial[w];
    const std::size_t lo = w * per_chunk;
    const std::size_t hi = std::min(lo + per_chunk, static_cast<std::size_t>(n_samples));
    for (std::size_t i = lo; i < hi; ++i) {
      Rng rng(seed, i);
      const OverhauserSample s = sample_overhauser(op, rng);
      const double vx = omega_b + g.g_h_x * kMuBOverHbar * s.bx;
      const double vy = g.g_h_x * kMuBOverHbar * s.by;
      const double vz = g.z() * kMuBOverHbar * s.bz;
      const double rate = std::sqrt(vx * vx + vy * vy + vz * vz);
      if (rate == 0.0) {
        for (std::size_t j = 0; j < n_t; ++j) acc[j] += 1.0;
        continue;
      }
      const double n1 = vy / rate, n2 = vz / rate, n3 = vx / rate;  // Bloch axes
      for (std::size_t j = 0; j < n_t; ++j) {
        // Rodrigues rotation of the initial transverse Bloch vector (1,0,0):
        // transverse = (sx, sy) with the applied-field axis longitudinal.
        const double th = rate * t_grid[j];
        const double c = std::cos(th), si = std::sin(th);
        const double sx = c + (1.0 - c) * n1 * n1;
        const double sy = si * n3 + (1.0 - c) * n1 * n2;
        const std::complex<double> sperp(sx, sy);
        acc[j] += sperp * std::exp(-kI * (omega_b * t_grid[j]));
      }
    }
  });

  CoherenceCurve curve;
  curve.t = t_grid;
  curve.envelope.resize(n_t);
  for (std::size_t j = 0; j < n_t; ++j) {
    std::complex<double> sum(0.0, 0.0);
    for (const auto& acc : partial) sum += acc[j];
    curve.envelope[j] = std::abs(sum) / n_samples;
  }

  const double level = 1.0 / std::numbers::e;
  for (std::size_t j = 0; j < n_t; ++j) {
    if (curve.envelope[j] < level) {
      if (j == 0) {
        curve.t2_star = curve.t[0];
      } else {
        const double f0 = curve.envelope[j - 1], f1 = curve.envelope[j];
        const double w = (f0 - level) / (f0 - f1);
        curve.t2_star = curve.t[j - 1] + w * (curve.t[j] - curve.t[j - 1]);
      }
      return curve;
    }
  }
  throw NoCrossing("envelope stays above 1/e on the grid");
}

}  // namespace ramanlc
