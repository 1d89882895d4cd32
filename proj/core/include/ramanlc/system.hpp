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
#include <complex>
#include <string>

namespace ramanlc {

// Basis ordering is fixed everywhere in this library:
//   index 0 = |up>  (heavy-hole spin along +x, the applied-field axis)
//   index 1 = |dn>
//   index 2 = |T_up>   (trion)
//   index 3 = |T_dn>   (trion)
// Energies and rates are in rad/ns and 1/ns; magnetic fields in mT.

inline constexpr double kMuBOverHbar = 0.087941;  // rad/ns per mT (Bohr magneton / hbar)
inline constexpr double kNsPerHour = 3.6e12;

using Matrix4cd = Eigen::Matrix4cd;
using LevelState = Eigen::Vector4cd;  // amplitudes over (up, dn, T_up, T_dn)

struct PhysicalParams {
  double b_ext_mT = 100.0;   // applied field, Voigt geometry
  double g_h_x = 0.1;        // hole in-plane g-factor
  double g_e_x = 0.5;        // electron in-plane g-factor (not given by the source model; free)
  double gamma = 1.0;        // spontaneous emission rate per decay channel, 1/ns
  double omega_v = 0.0;      // vertical-transition Rabi frequency, rad/ns
  double omega_h = 0.0;      // horizontal-transition Rabi frequency, rad/ns

  // b_ext >= 0, gamma > 0, omega_v >= 0, omega_h >= 0
  void validate() const;

  // Sub-saturation driving: omega_v <= gamma / sqrt(2).
  bool sub_saturation() const;
};

enum class JumpChannel : int {
  kRamanRed = 0,     // |up><T_dn| , H-polarised
  kRamanBlue = 1,    // |dn><T_up| , H-polarised
  kRayleighUp = 2,   // |up><T_up| , V-polarised
  kRayleighDown = 3  // |dn><T_dn| , V-polarised
};

inline constexpr std::array<JumpChannel, 4> kAllChannels = {
    JumpChannel::kRamanRed, JumpChannel::kRamanBlue, JumpChannel::kRayleighUp,
    JumpChannel::kRayleighDown};

bool is_h_polarised(JumpChannel c);
std::string channel_name(JumpChannel c);
JumpChannel channel_from_name(const std::string& name);

// Jump operator C_c as a (ground index, trion index) pair: C = |g><t|.
std::pair<int, int> channel_levels(JumpChannel c);
Matrix4cd jump_operator(JumpChannel c);

// Half-splittings (delta_h, delta_e) = g * mu_B * B / (2 hbar), so the
// up/dn energy gap 2*delta_h reproduces the precession rate
// omega_B = g_h_x * mu_B * B_ext / hbar.
std::pair<double, double> zeeman_frequencies(const PhysicalParams& p);

// Larmor frequency of the relative up/dn phase, rad/ns.
double larmor_frequency(const PhysicalParams& p);

// Rotating-frame Hamiltonian: diag(delta_h, -delta_h, -delta_e, delta_e)
// with -omega_h/2 on (T_up,dn),(T_dn,up) and -omega_v/2 on (T_dn,dn),(T_up,up),
// plus Hermitian conjugates. Exactly Hermitian by construction.
Matrix4cd build_hamiltonian(const PhysicalParams& p);

// H_eff = H - (i/2) gamma sum_c C_c^dag C_c. Each trion level decays through
// two channels, so the anti-Hermitian part is -i*gamma on each trion diagonal.
Matrix4cd build_effective_hamiltonian(const PhysicalParams& p);

}  // namespace ramanlc
