// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "blockpress/models.hpp"
#include "blockpress/structures.hpp"

namespace blockpress {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Raised when a request exceeds the dense-simulation caps.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kUnitaryQubitCap = 12;
inline constexpr int kStateQubitCap = 24;

/// Qubit 1 is the most significant bit of the basis label.
struct StateVector {
  int n = 1;
  Vec amps;

  static StateVector basis(int n, std::uint64_t label);  // |label>
  double norm() const;
};

/// Dense 2^n x 2^n unitary of a block list (product order), built by applying
/// each block as a local kernel.  `cap` guards against runaway dimensions.
Mat buildUnitary(const std::vector<Block>& blocks, ModelMapping m, int nQubits,
                 int cap = kUnitaryQubitCap);
Mat buildUnitary(const Zigzag& z, int nQubits);
Mat buildUnitary(const Triangle& t, int nQubits);
Mat buildUnitary(const Square& s, int nQubits);
/// Ordered product over a whole circuit of chronological zigzag steps:
/// M(steps[r-1]) ... M(steps[0]), multiplied over all sub-chains.
Mat buildUnitary(const std::vector<SubChain>& chains, int nQubits);

/// Apply a structure to a state without materializing the matrix.
void applyInPlace(StateVector& psi, const std::vector<Block>& blocks, ModelMapping m,
                  int cap = kStateQubitCap);
StateVector evolveState(const StateVector& psi, const std::vector<Block>& blocks,
                        ModelMapping m);
StateVector evolveState(const StateVector& psi, const Square& s);

/// (1/n) sum_i <Z_i>.
double magnetization(const StateVector& psi);

Mat hamiltonianMatrix(const ModelSpec& m, const Couplings& at);

struct GroundState {
  double energy = 0.0;
  StateVector psi;
  bool degenerate = false;
};
GroundState groundState(const ModelSpec& m, const Couplings& at);

/// Global-phase-modded Frobenius distance min_phi ||U - e^{i phi} V||_F,
/// evaluated through the trace formula.
double phaseDistance(const Mat& u, const Mat& v);

}  // namespace blockpress
