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

#include "ramanlc/cluster.hpp"

#include <cmath>
#include <complex>

#include "ramanlc/errors.hpp"

namespace ramanlc {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

int qubit_count_for_dim(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d <<= 1;
    ++n;
  }
  if (d != dim) throw DimensionMismatch("state dimension is not a power of two");
  return n;
}

}  // namespace

PauliString PauliString::parse(const std::string& text) {
  PauliString p;
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    p.sign = text[0] == '+' ? +1 : -1;
    start = 1;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw ValidationError("invalid Pauli factor '" + std::string(1, c) + "'");
    p.factors.push_back(c);
  }
  if (p.factors.empty()) throw ValidationError("empty Pauli string");
  return p;
}

std::string PauliString::to_string() const {
  return (sign >= 0 ? "+" : "-") + factors;
}

Eigen::VectorXcd PauliString::apply(const Eigen::VectorXcd& psi) const {
  const int n = size();
  if (psi.size() != (Eigen::Index(1) << n))
    throw DimensionMismatch("state dimension does not match Pauli length");
  Eigen::VectorXcd out(psi.size());
  // Basis-state action: X flips the bit, Z contributes (-1)^bit, Y = iXZ.
  Eigen::Index flip_mask = 0;
  Eigen::Index z_mask = 0;
  int y_count = 0;
  for (int a = 0; a < n; ++a) {
    const Eigen::Index bit = Eigen::Index(1) << (n - 1 - a);
    const char c = factors[static_cast<std::size_t>(a)];
    if (c == 'X' || c == 'Y') flip_mask |= bit;
    if (c == 'Z' || c == 'Y') z_mask |= bit;
    if (c == 'Y') ++y_count;
  }
  const std::complex<double> y_phase = std::pow(kI, y_count);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    const Eigen::Index src = idx ^ flip_mask;
    const int z_parity = __builtin_popcountll(static_cast<unsigned long long>(src & z_mask)) & 1;
    std::complex<double> amp = psi(src) * y_phase * static_cast<double>(sign);
    if (z_parity) amp = -amp;
    out(idx) = amp;
  }
  return out;
}

Eigen::MatrixXcd PauliString::dense() const {
  const Eigen::Index dim = Eigen::Index(1) << size();
  Eigen::MatrixXcd m(dim, dim);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    basis(col) = 1.0;
    m.col(col) = apply(basis);
    basis(col) = 0.0;
  }
  return m;
}

std::vector<int> expected_signs(int n, Branch branch) {
  if (n < 2) throw ValidationError("sign table needs n >= 2");
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  k[0] = 1;
  if (branch == Branch::kPlus) k[static_cast<std::size_t>(n - 1)] = 1;
  return k;
}

std::vector<StabilizerGenerator> lc_generators(int n, Branch branch) {
  const std::vector<int> signs = expected_signs(n, branch);
  std::vector<StabilizerGenerator> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    StabilizerGenerator g;
    g.site = a;
    g.eigen_sign_bit = signs[static_cast<std::size_t>(a - 1)];
    g.pauli.factors.assign(static_cast<std::size_t>(n), 'I');
    g.pauli.factors[static_cast<std::size_t>(a - 1)] = 'X';
    if (a > 1) g.pauli.factors[static_cast<std::size_t>(a - 2)] = 'Z';
    if (a < n) g.pauli.factors[static_cast<std::size_t>(a)] = 'Z';
    gens.push_back(std::move(g));
  }
  return gens;
}

Eigen::VectorXcd build_lc_recursive(int n, Branch branch) {
  if (n < 1 || n > kMaxClusterQubits)
    throw ValidationError("n must be in 1.." + std::to_string(kMaxClusterQubits));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd plus(2), minus(2);
  plus << inv_sqrt2, inv_sqrt2;    // (|0> + |1>)/sqrt2 ordered [amp(0), amp(1)]
  minus << -inv_sqrt2, inv_sqrt2;  // (|1> - |0>)/sqrt2
  for (int m = 2; m <= n; ++m) {
    const Eigen::Index dim = Eigen::Index(1) << (m - 1);
    Eigen::VectorXcd next_plus(2 * dim), next_minus(2 * dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
      // new qubit m is the least significant bit
      next_plus(2 * b + 1) = inv_sqrt2 * plus(b);
      next_plus(2 * b) = inv_sqrt2 * minus(b);
      next_minus(2 * b + 1) = inv_sqrt2 * plus(b);
      next_minus(2 * b) = -inv_sqrt2 * minus(b);
    }
    plus.swap(next_plus);
    minus.swap(next_minus);
  }
  return branch == Branch::kPlus ? plus : minus;
}

double verify_stabilizers(const Eigen::VectorXcd& psi, int n, Branch branch) {
  if (psi.size() != (Eigen::Index(1) << n))
    throw DimensionMismatch("state dimension must be 2^n");
  double worst = 0.0;
  for (const StabilizerGenerator& g : lc_generators(n, branch)) {
    const double expected = g.eigen_sign_bit ? -1.0 : 1.0;
    const double resid = (g.pauli.apply(psi) - expected * psi).norm();
    worst = std::max(worst, resid);
  }
  return worst;
}

Eigen::VectorXcd last_qubit_z(const Eigen::VectorXcd& psi, int n) {
  (void)qubit_count_for_dim(psi.size());
  if (psi.size() != (Eigen::Index(1) << n))
    throw DimensionMismatch("state dimension must be 2^n");
  Eigen::VectorXcd out = psi;
  for (Eigen::Index idx = 0; idx < out.size(); ++idx)
    if (idx & 1) out(idx) = -out(idx);
  return out;
}

}  // namespace ramanlc
