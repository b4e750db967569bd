// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/sim.hpp"

#include <bit>
#include <cmath>

#include "blockpress/detail/apply.hpp"
#include "blockpress/tfxy.hpp"

namespace blockpress {

StateVector StateVector::basis(int n, std::uint64_t label) {
  StateVector s;
  s.n = n;
  s.amps = Vec::Zero(1LL << n);
  s.amps(static_cast<Eigen::Index>(label)) = 1.0;
  return s;
}

double StateVector::norm() const { return amps.norm(); }

namespace {

using detail::apply1;
using detail::apply2;

template <typename ColAccess>
void applyBlockKernel(ColAccess&& col, int n, const Block& b, ModelMapping m) {
  const auto [qlo, qhi] = qubitsOf(m, b.index);
  switch (b.kind) {
    case BlockKind::Su2Z:
      apply1(col, n, qlo, b.s0);
      return;
    case BlockKind::Su2XX:
      apply2(col, n, qlo, qhi, detail::rotXX4(b.angle()));
      return;
    case BlockKind::Su2YY:
      apply2(col, n, qlo, qhi, detail::rotYY4(b.angle()));
      return;
    case BlockKind::Tfxy:
      apply2(col, n, qlo, qhi, tfxyMatrix({b.s0, b.s1}));
      return;
  }
}

void checkFits(const std::vector<Block>& blocks, ModelMapping m, int n) {
  for (const Block& b : blocks)
    if (b.index < 1 || qubitsOf(m, b.index).second > n)
      throw std::invalid_argument("block index " + std::to_string(b.index) +
                                  " does not fit on " + std::to_string(n) + " qubits");
}

void applyBlocksToMatrix(Mat& u, const std::vector<Block>& blocks, ModelMapping m, int n) {
  // product order: blocks[0] is the leftmost factor, so apply right-to-left
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    if (it->isIdentity()) continue;
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      auto col = [&u, c](std::int64_t i) -> cplx& { return u(static_cast<Eigen::Index>(i), c); };
      applyBlockKernel(col, n, *it, m);
    }
  }
}

}  // namespace

Mat buildUnitary(const std::vector<Block>& blocks, ModelMapping m, int nQubits, int cap) {
  if (nQubits > cap)
    throw ResourceCapError("dense unitary capped at " + std::to_string(cap) +
                           " qubits; use the statevector path");
  checkFits(blocks, m, nQubits);
  Mat u = Mat::Identity(1LL << nQubits, 1LL << nQubits);
  applyBlocksToMatrix(u, blocks, m, nQubits);
  return u;
}

Mat buildUnitary(const Zigzag& z, int nQubits) {
  return buildUnitary(z.blocks, z.mapping, nQubits);
}
Mat buildUnitary(const Triangle& t, int nQubits) {
  return buildUnitary(flatten(t), t.mapping, nQubits);
}
Mat buildUnitary(const Square& s, int nQubits) {
  return buildUnitary(flatten(s), s.mapping, nQubits);
}

Mat buildUnitary(const std::vector<SubChain>& chains, int nQubits) {
  Mat u = Mat::Identity(1LL << nQubits, 1LL << nQubits);
  for (const SubChain& ch : chains) {
    Mat c = Mat::Identity(1LL << nQubits, 1LL << nQubits);
    for (const Zigzag& z : ch.steps) {  // chronological: earliest applied first
      applyBlocksToMatrix(c, z.blocks, ch.mapping, nQubits);
    }
    u = c * u;
  }
  return u;
}

void applyInPlace(StateVector& psi, const std::vector<Block>& blocks, ModelMapping m,
                  int cap) {
  if (psi.n > cap) throw ResourceCapError("statevector cap exceeded");
  checkFits(blocks, m, psi.n);
  auto col = [&psi](std::int64_t i) -> cplx& { return psi.amps(static_cast<Eigen::Index>(i)); };
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    if (it->isIdentity()) continue;
    applyBlockKernel(col, psi.n, *it, m);
  }
}

StateVector evolveState(const StateVector& psi, const std::vector<Block>& blocks,
                        ModelMapping m) {
  StateVector out = psi;
  applyInPlace(out, blocks, m);
  return out;
}

StateVector evolveState(const StateVector& psi, const Square& s) {
  return evolveState(psi, flatten(s), s.mapping);
}

double magnetization(const StateVector& psi) {
  const int n = psi.n;
  double m = 0.0;
  for (Eigen::Index i = 0; i < psi.amps.size(); ++i) {
    const double p = std::norm(psi.amps(i));
    if (p == 0.0) continue;
    const int down = std::popcount(static_cast<std::uint64_t>(i));
    m += p * static_cast<double>(n - 2 * down) / n;
  }
  return m;
}

namespace {

void addPauliString(Mat& h, double coeff, int n, const std::vector<std::pair<int, char>>& ops) {
  if (coeff == 0.0) return;
  // accumulate coeff * (tensor product) by walking basis states
  const std::int64_t dim = 1LL << n;
  for (std::int64_t j = 0; j < dim; ++j) {
    std::int64_t i = j;
    cplx amp = coeff;
    for (const auto& [q, p] : ops) {
      const std::int64_t bit = 1LL << (n - q);
      const bool set = i & bit;
      switch (p) {
        case 'X': i ^= bit; break;
        case 'Y':
          amp *= set ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
          i ^= bit;
          break;
        case 'Z': amp *= set ? -1.0 : 1.0; break;
      }
    }
    h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += amp;
  }
}

}  // namespace

Mat hamiltonianMatrix(const ModelSpec& m, const Couplings& at) {
  if (m.n > kUnitaryQubitCap) throw ResourceCapError("dense Hamiltonian cap exceeded");
  const int n = m.n;
  Mat h = Mat::Zero(1LL << n, 1LL << n);
  auto bond2 = [&](const std::vector<double>& cs, char p1, char p2) {
    for (int i = 1; i < n; ++i)
      addPauliString(h, cs[static_cast<size_t>(i - 1)], n, {{i, p1}, {i + 1, p2}});
  };
  switch (m.family) {
    case Family::Kitaev:
      for (int i = 1; i < n; ++i) {
        const char p = (i % 2 == 1) ? 'X' : 'Y';
        addPauliString(h, at.bond[static_cast<size_t>(i - 1)], n, {{i, p}, {i + 1, p}});
      }
      break;
    case Family::XY:
      bond2(at.xx, 'X', 'X');
      bond2(at.yy, 'Y', 'Y');
      break;
    case Family::Tfim:
      bond2(at.xx, 'X', 'X');
      for (int i = 1; i <= n; ++i) addPauliString(h, at.z[static_cast<size_t>(i - 1)], n, {{i, 'Z'}});
      break;
    case Family::Tfxy:
      bond2(at.xx, 'X', 'X');
      bond2(at.yy, 'Y', 'Y');
      for (int i = 1; i <= n; ++i) addPauliString(h, at.z[static_cast<size_t>(i - 1)], n, {{i, 'Z'}});
      break;
    case Family::GenTfxy:
      bond2(at.xx, 'X', 'X');
      bond2(at.yy, 'Y', 'Y');
      bond2(at.xy, 'X', 'Y');
      bond2(at.yx, 'Y', 'X');
      for (int i = 1; i <= n; ++i) addPauliString(h, at.z[static_cast<size_t>(i - 1)], n, {{i, 'Z'}});
      break;
  }
  return h;
}

GroundState groundState(const ModelSpec& m, const Couplings& at) {
  const Mat h = hamiltonianMatrix(m, at);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  GroundState g;
  g.energy = es.eigenvalues()(0);
  g.psi.n = m.n;
  g.psi.amps = es.eigenvectors().col(0);
  const double scale = std::max(1.0, std::abs(es.eigenvalues()(es.eigenvalues().size() - 1)));
  g.degenerate = es.eigenvalues()(1) - es.eigenvalues()(0) < 1e-10 * scale;
  return g;
}

double phaseDistance(const Mat& u, const Mat& v) {
  // the optimal phase comes from the trace; evaluating the norm directly
  // avoids the cancellation of the expanded quadratic form
  const cplx tr = (u.adjoint() * v).trace();
  if (std::abs(tr) == 0.0) return (u - v).norm();
  return (u - std::polar(1.0, -std::arg(tr)) * v).norm();
}

}  // namespace blockpress
