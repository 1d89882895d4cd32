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
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ramanlc/rng.hpp"

namespace ramanlc {

// Exact linear-algebra engine for the spin-photon entangling sequence.
//
// Joint state layout: amplitude index = s * 3^n + sum_k d_k * 3^(n-k) with
// spin s in {0 = up, 1 = dn} and slot digit d in {0 = B, 1 = R, 2 = Ray};
// slot 1 is the most significant digit. Dimension 2 * 3^n, n capped at 8.

inline constexpr int kMaxSlots = 8;

enum class SlotValue : int { kBlue = 0, kRed = 1, kRayleigh = 2 };
enum class SpinOutcome : int { kPlus = 0, kMinus = 1 };  // measured up / dn

struct JointState {
  int n_slots = 0;
  Eigen::VectorXcd amps;

  static JointState initial(int n_slots);  // (|up>+|dn>)/sqrt(2) x |Ray>^n
  Eigen::Index dim() const { return amps.size(); }
  double norm() const { return amps.norm(); }
  // Largest |amplitude| carried by basis states with slot k in |Ray>.
  double ray_amplitude(int slot) const;
  std::string basis_label(Eigen::Index idx) const;  // e.g. "up:BRY"
};

// Per-bin scattering times tau1 (time from bin start to the Raman event);
// tau2 = t_bin - tau1.
struct ScatterSchedule {
  std::vector<double> tau1;
  double t_bin = 0.0;

  void validate() const;  // 0 <= tau1 <= t_bin for every bin
  static ScatterSchedule random(int n, double t_bin, Rng& rng);  // tau1 ~ U[0, t_bin]
};

struct PhaseLedger {
  std::vector<double> phi1;  // radians, precession before the scattering event
  std::vector<double> phi2;  // radians, precession after it

  int size() const { return static_cast<int>(phi1.size()); }
  double chi(int bin) const { return phi1[static_cast<std::size_t>(bin)] - phi2[static_cast<std::size_t>(bin)]; }
};

// Free precession U_p(phi) = diag(e^{-i phi/2}, e^{+i phi/2}) (x) 1.
void apply_u_p(JointState& state, double phi);

// pi/2 Y-rotation U_r = exp(i pi sigma_y / 4) (x) 1:
// |up> -> (|up>-|dn>)/sqrt(2), |dn> -> (|up>+|dn>)/sqrt(2).
void apply_u_r(JointState& state);

// Raman scattering T_s^(k): flips the spin and writes the photon colour,
// |up>|Ray_k> -> |dn>|B_k>, |dn>|Ray_k> -> |up>|R_k>; annihilates everything
// with slot k already scattered. Throws SlotOutOfRange unless 1 <= k <= n.
void apply_t_s(JointState& state, int slot);

// Q^(k) = U_r U_p(phi2) T_s^(k) U_p(phi1); an isometry on states with slot k
// in |Ray>.
void apply_q(JointState& state, int slot, double phi1, double phi2);

// Arbitrary spin rotation (x) 1; used by the noise model.
void apply_spin_unitary(JointState& state, const Eigen::Matrix2cd& u);

// Runs Q^(k) for k = 1..n with phi1 = omega_B * tau1, phi2 = omega_B * tau2
// on the initial state. schedule must carry n entries.
std::pair<JointState, PhaseLedger> run_protocol(int n, const ScatterSchedule& schedule,
                                                double omega_b);

// Projects the spin onto up (kPlus) or dn (kMinus), renormalises and relabels
// slots as qubits (|B> = |1>, |R> = |0>, qubit 1 = most significant bit).
// Returns the 2^n photonic state and the projection probability.
// Throws SlotUnscattered if any slot retains |Ray> amplitude > 1e-12.
std::pair<Eigen::VectorXcd, double> encode_and_measure(const JointState& state,
                                                       SpinOutcome outcome);

// Undoes the recorded precession phases with diagonal single-qubit rotations
// on the photon slots (never the spin): slot k gains e^{+i chi_k/2} on |B>
// and e^{-i chi_k/2} on |R>, so the output equals the zero-phase state.
void phase_correct(JointState& state, const PhaseLedger& ledger);

// Full (n+1)-qubit state with the spin kept as the last qubit (up = |1>).
Eigen::VectorXcd to_qubit_state_with_spin(const JointState& state);

}  // namespace ramanlc
