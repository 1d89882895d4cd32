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

#include "ramanlc/protocol.hpp"

#include <cmath>

#include "ramanlc/errors.hpp"

namespace ramanlc {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

Eigen::Index pow3(int n) {
  Eigen::Index p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

void check_slot(const JointState& state, int slot) {
  if (slot < 1 || slot > state.n_slots)
    throw SlotOutOfRange("slot " + std::to_string(slot) + " outside 1.." +
                         std::to_string(state.n_slots));
}

// Stride of slot k's digit in the amplitude index.
Eigen::Index slot_stride(int n_slots, int slot) { return pow3(n_slots - slot); }

}  // namespace

JointState JointState::initial(int n_slots) {
  if (n_slots < 0 || n_slots > kMaxSlots)
    throw ValidationError("n_slots must be in 0.." + std::to_string(kMaxSlots));
  JointState s;
  s.n_slots = n_slots;
  const Eigen::Index half = pow3(n_slots);
  s.amps = Eigen::VectorXcd::Zero(2 * half);
  // all slots in |Ray>: digit 2 everywhere -> offset half - 1 within each spin block
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  s.amps(half - 1) = inv_sqrt2;
  s.amps(2 * half - 1) = inv_sqrt2;
  return s;
}

double JointState::ray_amplitude(int slot) const {
  check_slot(*this, slot);
  const Eigen::Index stride = slot_stride(n_slots, slot);
  double max_amp = 0.0;
  for (Eigen::Index idx = 0; idx < dim(); ++idx) {
    const int digit = static_cast<int>((idx / stride) % 3);
    if (digit == static_cast<int>(SlotValue::kRayleigh))
      max_amp = std::max(max_amp, std::abs(amps(idx)));
  }
  return max_amp;
}

std::string JointState::basis_label(Eigen::Index idx) const {
  const Eigen::Index half = pow3(n_slots);
  std::string label = idx < half ? "up:" : "dn:";
  Eigen::Index rest = idx % half;
  std::string slots(static_cast<std::size_t>(n_slots), '?');
  for (int k = n_slots - 1; k >= 0; --k) {
    const int digit = static_cast<int>(rest % 3);
    slots[static_cast<std::size_t>(k)] = "BRY"[digit];
    rest /= 3;
  }
  return label + slots;
}

void ScatterSchedule::validate() const {
  if (!(t_bin > 0.0)) throw ValidationError("t_bin must be > 0");
  for (double t1 : tau1)
    if (t1 < 0.0 || t1 > t_bin)
      throw ValidationError("tau1 must lie in [0, t_bin]");
}

ScatterSchedule ScatterSchedule::random(int n, double t_bin, Rng& rng) {
  // Conditional law of a single Poisson arrival in a window is uniform.
  ScatterSchedule s;
  s.t_bin = t_bin;
  s.tau1.resize(static_cast<std::size_t>(n));
  for (double& t1 : s.tau1) t1 = rng.uniform_in(0.0, t_bin);
  return s;
}

void apply_u_p(JointState& state, double phi) {
  const Eigen::Index half = state.dim() / 2;
  const std::complex<double> up = std::exp(-kI * (phi / 2.0));
  const std::complex<double> dn = std::exp(+kI * (phi / 2.0));
  state.amps.head(half) *= up;
  state.amps.tail(half) *= dn;
}

void apply_u_r(JointState& state) {
  const Eigen::Index half = state.dim() / 2;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < half; ++j) {
    const std::complex<double> a_up = state.amps(j);
    const std::complex<double> a_dn = state.amps(half + j);
    state.amps(j) = inv_sqrt2 * (a_up + a_dn);
    state.amps(half + j) = inv_sqrt2 * (-a_up + a_dn);
  }
}

void apply_spin_unitary(JointState& state, const Eigen::Matrix2cd& u) {
  const Eigen::Index half = state.dim() / 2;
  for (Eigen::Index j = 0; j < half; ++j) {
    const std::complex<double> a_up = state.amps(j);
    const std::complex<double> a_dn = state.amps(half + j);
    state.amps(j) = u(0, 0) * a_up + u(0, 1) * a_dn;
    state.amps(half + j) = u(1, 0) * a_up + u(1, 1) * a_dn;
  }
}

void apply_t_s(JointState& state, int slot) {
  check_slot(state, slot);
  const Eigen::Index half = state.dim() / 2;
  const Eigen::Index stride = slot_stride(state.n_slots, slot);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.dim());
  for (Eigen::Index j = 0; j < half; ++j) {
    const int digit = static_cast<int>((j / stride) % 3);
    if (digit != static_cast<int>(SlotValue::kRayleigh)) continue;
    const Eigen::Index to_blue = j - 2 * stride;  // Ray -> B
    const Eigen::Index to_red = j - stride;       // Ray -> R
    out(half + to_blue) = state.amps(j);          // up,Ray -> dn,B
    out(to_red) = state.amps(half + j);           // dn,Ray -> up,R
  }
  state.amps.swap(out);
}

void apply_q(JointState& state, int slot, double phi1, double phi2) {
  apply_u_p(state, phi1);
  apply_t_s(state, slot);
  apply_u_p(state, phi2);
  apply_u_r(state);
}

std::pair<JointState, PhaseLedger> run_protocol(int n, const ScatterSchedule& schedule,
                                                double omega_b) {
  if (n < 1 || n > kMaxSlots)
    throw ValidationError("n must be in 1.." + std::to_string(kMaxSlots));
  schedule.validate();
  if (static_cast<int>(schedule.tau1.size()) != n)
    throw ValidationError("schedule must carry n entries");
  JointState state = JointState::initial(n);
  PhaseLedger ledger;
  ledger.phi1.reserve(static_cast<std::size_t>(n));
  ledger.phi2.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double tau1 = schedule.tau1[static_cast<std::size_t>(k - 1)];
    const double phi1 = omega_b * tau1;
    const double phi2 = omega_b * (schedule.t_bin - tau1);
    apply_q(state, k, phi1, phi2);
    ledger.phi1.push_back(phi1);
    ledger.phi2.push_back(phi2);
  }
  return {std::move(state), std::move(ledger)};
}

std::pair<Eigen::VectorXcd, double> encode_and_measure(const JointState& state,
                                                       SpinOutcome outcome) {
  const int n = state.n_slots;
  for (int k = 1; k <= n; ++k)
    if (state.ray_amplitude(k) > 1e-12)
      throw SlotUnscattered("slot " + std::to_string(k) + " retains |Ray> amplitude");

  const Eigen::Index half = state.dim() / 2;
  const Eigen::Index offset = outcome == SpinOutcome::kPlus ? 0 : half;
  Eigen::VectorXcd qubits = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  for (Eigen::Index j = 0; j < half; ++j) {
    const std::complex<double> amp = state.amps(offset + j);
    if (amp == 0.0) continue;
    Eigen::Index rest = j;
    Eigen::Index bits = 0;
    bool scattered = true;
    for (int k = n - 1; k >= 0; --k) {
      const int digit = static_cast<int>(rest % 3);
      rest /= 3;
      if (digit == static_cast<int>(SlotValue::kRayleigh)) {
        scattered = false;
        break;
      }
      // |B> = |1>, |R> = |0>; slot k (0-based here) maps to bit n-1-k.
      if (digit == static_cast<int>(SlotValue::kBlue)) bits |= Eigen::Index(1) << (n - 1 - k);
    }
    if (scattered) qubits(bits) += amp;
  }
  const double prob = qubits.squaredNorm();
  if (prob > 0.0) qubits /= std::sqrt(prob);
  return {std::move(qubits), prob};
}

void phase_correct(JointState& state, const PhaseLedger& ledger) {
  if (ledger.size() != state.n_slots)
    throw ValidationError("ledger inconsistent with state length");
  for (int k = 1; k <= state.n_slots; ++k) {
    const double chi = ledger.chi(k - 1);
    const std::complex<double> on_blue = std::exp(+kI * (chi / 2.0));
    const std::complex<double> on_red = std::exp(-kI * (chi / 2.0));
    const Eigen::Index stride = slot_stride(state.n_slots, k);
    for (Eigen::Index idx = 0; idx < state.dim(); ++idx) {
      const int digit = static_cast<int>((idx / stride) % 3);
      if (digit == static_cast<int>(SlotValue::kBlue))
        state.amps(idx) *= on_blue;
      else if (digit == static_cast<int>(SlotValue::kRed))
        state.amps(idx) *= on_red;
    }
  }
}

Eigen::VectorXcd to_qubit_state_with_spin(const JointState& state) {
  const int n = state.n_slots;
  auto [plus, p_plus] = encode_and_measure(state, SpinOutcome::kPlus);
  auto [minus, p_minus] = encode_and_measure(state, SpinOutcome::kMinus);
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(Eigen::Index(1) << (n + 1));
  // spin is the last qubit (least significant bit), up = |1>.
  for (Eigen::Index b = 0; b < (Eigen::Index(1) << n); ++b) {
    full(2 * b + 1) = std::sqrt(p_plus) * plus(b);
    full(2 * b) = std::sqrt(p_minus) * minus(b);
  }
  const double nrm = full.norm();
  if (nrm > 0.0) full /= nrm;
  return full;
}

}  // namespace ramanlc
