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

#include "ramanlc/system.hpp"

#include "ramanlc/errors.hpp"

namespace ramanlc {

void PhysicalParams::validate() const {
  if (b_ext_mT < 0.0) throw ValidationError("b_ext_mT must be >= 0");
  if (!(gamma > 0.0)) throw ValidationError("gamma must be > 0");
  if (omega_v < 0.0) throw ValidationError("omega_v must be >= 0");
  if (omega_h < 0.0) throw ValidationError("omega_h must be >= 0");
}

bool PhysicalParams::sub_saturation() const {
  return omega_v <= gamma / std::sqrt(2.0);
}

bool is_h_polarised(JumpChannel c) {
  return c == JumpChannel::kRamanRed || c == JumpChannel::kRamanBlue;
}

std::string channel_name(JumpChannel c) {
  switch (c) {
    case JumpChannel::kRamanRed: return "raman_red";
    case JumpChannel::kRamanBlue: return "raman_blue";
    case JumpChannel::kRayleighUp: return "rayleigh_up";
    case JumpChannel::kRayleighDown: return "rayleigh_down";
  }
  throw ValidationError("unknown channel");
}

JumpChannel channel_from_name(const std::string& name) {
  for (JumpChannel c : kAllChannels) {
    if (channel_name(c) == name) return c;
  }
  throw ValidationError("unknown channel name: " + name);
}

std::pair<int, int> channel_levels(JumpChannel c) {
  switch (c) {
    case JumpChannel::kRamanRed: return {0, 3};     // T_dn -> up
    case JumpChannel::kRamanBlue: return {1, 2};    // T_up -> dn
    case JumpChannel::kRayleighUp: return {0, 2};   // T_up -> up
    case JumpChannel::kRayleighDown: return {1, 3}; // T_dn -> dn
  }
  throw ValidationError("unknown channel");
}

Matrix4cd jump_operator(JumpChannel c) {
  Matrix4cd op = Matrix4cd::Zero();
  const auto [g, t] = channel_levels(c);
  op(g, t) = 1.0;
  return op;
}

std::pair<double, double> zeeman_frequencies(const PhysicalParams& p) {
  p.validate();
  const double delta_h = 0.5 * p.g_h_x * kMuBOverHbar * p.b_ext_mT;
  const double delta_e = 0.5 * p.g_e_x * kMuBOverHbar * p.b_ext_mT;
  return {delta_h, delta_e};
}

double larmor_frequency(const PhysicalParams& p) {
  return 2.0 * zeeman_frequencies(p).first;
}

Matrix4cd build_hamiltonian(const PhysicalParams& p) {
  const auto [delta_h, delta_e] = zeeman_frequencies(p);
  Matrix4cd h = Matrix4cd::Zero();
  h(0, 0) = delta_h;
  h(1, 1) = -delta_h;
  h(2, 2) = -delta_e;
  h(3, 3) = delta_e;
  h(2, 1) = -0.5 * p.omega_h;  // |T_up><dn|
  h(3, 0) = -0.5 * p.omega_h;  // |T_dn><up|
  h(3, 1) = -0.5 * p.omega_v;  // |T_dn><dn|
  h(2, 0) = -0.5 * p.omega_v;  // |T_up><up|
  h(1, 2) = h(2, 1);
  h(0, 3) = h(3, 0);
  h(1, 3) = h(3, 1);
  h(0, 2) = h(2, 0);
  return h;
}

Matrix4cd build_effective_hamiltonian(const PhysicalParams& p) {
  Matrix4cd h = build_hamiltonian(p);
  // sum_c C^dag C = 2 * (|T_up><T_up| + |T_dn><T_dn|)
  const std::complex<double> drain(0.0, -p.gamma);
  h(2, 2) += drain;
  h(3, 3) += drain;
  return h;
}

}  // namespace ramanlc
