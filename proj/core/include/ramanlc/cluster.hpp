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
#include <string>
#include <vector>

namespace ramanlc {

// Line-graph stabilizer toolkit. Qubit a (1-based) maps to bit n-a of the
// amplitude index, so qubit 1 is the most significant bit.

inline constexpr int kMaxClusterQubits = 10;
inline constexpr double kStabilizerTolerance = 1e-10;

enum class Branch : int { kPlus = 0, kMinus = 1 };

struct PauliString {
  std::string factors;  // over {I, X, Y, Z}, index 0 = qubit 1
  int sign = +1;

  int size() const { return static_cast<int>(factors.size()); }
  // Parses "+XZII" / "-IZXI"; a missing sign means '+'.
  static PauliString parse(const std::string& text);
  std::string to_string() const;
  // sign * P |psi>; psi has dimension 2^n.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi) const;
  Eigen::MatrixXcd dense() const;
};

struct StabilizerGenerator {
  PauliString pauli;      // X at site a, Z on the line-graph neighbours
  int site = 1;           // a, 1-based
  int eigen_sign_bit = 0; // k^(a); expected eigenvalue (-1)^k
};

// The n line-graph generators K^(a) with the branch's expected sign bits:
// plus branch: k^(a) = 1 iff a in {1, n}; minus: k^(a) = 1 iff a = 1.
std::vector<StabilizerGenerator> lc_generators(int n, Branch branch);

std::vector<int> expected_signs(int n, Branch branch);

// S^(n)_± from the recursion S_± = S'_+ |1_n> ± S'_- |0_n> with the base
// case S^(1)_± = (|1> ± |0>)/sqrt(2); normalised.
Eigen::VectorXcd build_lc_recursive(int n, Branch branch);

// max_a || K^(a) psi - (-1)^{k^(a)} psi ||; a state passes at <= 1e-10.
// Throws DimensionMismatch unless dim(psi) == 2^n.
double verify_stabilizers(const Eigen::VectorXcd& psi, int n, Branch branch);

// Z on the last qubit maps S_± to -S_∓ (used by the acceptance suite).
Eigen::VectorXcd last_qubit_z(const Eigen::VectorXcd& psi, int n);

}  // namespace ramanlc
