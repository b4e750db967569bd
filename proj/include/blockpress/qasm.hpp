// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockpress/sim.hpp"
#include "blockpress/structures.hpp"

namespace blockpress {

/// Primitive gate in program (application) order.  Angles use the standard
/// half-angle gate convention: rz(l) = exp(-i l Z/2), rxx(l) = exp(-i l XX/2).
/// Qubits are 0-based here, matching the emitted QASM.
struct Gate {
  enum Kind : std::uint8_t { Rz, Rx, Ry, Rxx, Ryy, Cx } kind = Rz;
  double theta = 0.0;  // unused for Cx
  int q0 = 0;          // Cx control
  int q1 = 0;          // second qubit for two-qubit gates, else unused

  bool operator==(const Gate&) const = default;
};

struct GateSeq {
  int nQubits = 1;
  std::vector<Gate> gates;
};

enum class LowerStyle { Rotations, Cnot };

/// One or two compressed squares (two for the XY model's commuting chains).
struct CompiledCircuit {
  int nQubits = 2;
  std::vector<Square> squares;
};

/// Lower to primitive gates.  Rotations style emits rxx/ryy/rz natively; cnot
/// style decomposes every two-qubit rotation pair through the 2-CNOT kernel.
/// For two-square circuits in cnot style, same-position XX and YY blocks of
/// the two chains combine into one kernel, halving the CNOT count.
GateSeq lowerToGates(const CompiledCircuit& c, LowerStyle style);
GateSeq lowerToGates(const Zigzag& z, int nQubits, LowerStyle style);

/// OpenQASM 2.0 text; byte-deterministic, 17 significant digits.
std::string emitQasm(const GateSeq& g);

/// Minimal reader for the dialect emitted above.
GateSeq parseQasm(const std::string& text);

struct GateStats {
  std::int64_t twoQubitRotations = 0;
  std::int64_t cnots = 0;
  std::int64_t depth = 0;
};
GateStats gateStats(const GateSeq& g);

/// Dense unitary of a gate list (application order).
Mat buildUnitary(const GateSeq& g);
StateVector evolveState(const StateVector& psi, const GateSeq& g);

}  // namespace blockpress
