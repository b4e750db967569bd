// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "blockpress/su2.hpp"

namespace blockpress {

enum class BlockKind : std::uint8_t { Su2XX, Su2YY, Su2Z, Tfxy };

/// Index-to-gate dictionary of the active model.  The kind of a block is a
/// function of its index parity under the mapping; the two Kitaev variants
/// differ in which parity carries the XX bond (the XY model compresses as two
/// independent chains, one of each variant).
enum class ModelMapping : std::uint8_t {
  KitaevOddXX,  // odd index: XX on (i,i+1); even: YY on (i,i+1)
  KitaevOddYY,  // odd index: YY; even: XX
  Tfim,         // odd index 2q-1: Z on qubit q; even index 2q: XX on (q,q+1)
  Tfxy,         // every index: two-qubit TFXY block on (i,i+1)
};

/// Largest legal block index on an n-qubit chain.
int maxBlockIndex(ModelMapping m, int nQubits);
/// Number of qubits spanned by a chain whose largest block index is `height`.
int qubitCountFor(ModelMapping m, int height);

BlockKind kindFor(ModelMapping m, int index);

/// Inclusive qubit range (1-based) a block acts on; lo == hi for 1-qubit blocks.
std::pair<int, int> qubitsOf(ModelMapping m, int index);

/// Abstract su(2) axis carried by a single-rotation block kind.
/// XX-type rotations sit on the x axis, Z- and YY-type rotations on z, which
/// makes every adjacent-index pair an alternating Euler problem.
Axis axisOf(BlockKind k);

/// Circuit element: an indexed block.  Single-rotation kinds keep their
/// (always axis-aligned) su(2) element in `s0`; TFXY blocks carry the two
/// commuting sector elements (s0 = even-parity/minus sector, s1 = odd-parity/
/// plus sector).  Angles are extracted only at export.
struct Block {
  int index = 1;
  BlockKind kind = BlockKind::Su2XX;
  Su2 s0{};  // su2 payload, or TFXY minus sector
  Su2 s1{};  // TFXY plus sector (identity otherwise)

  static Block identityAt(ModelMapping m, int index);
  bool isIdentity(double tol = 1e-14) const;
  /// Rotation angle of an axis-aligned su2-kind payload.
  double angle() const;
  static Block su2(ModelMapping m, int index, double theta);
};

/// Structural commutation of the block calculus: |i-j| > 1, plus the
/// same-bond XX/YY pair that appears when the two Kitaev sub-chains of the
/// XY model are interleaved.  Blocks must come from the same mapping family.
bool commutes(const Block& b1, const Block& b2, ModelMapping m);

/// Turnover of a V-shaped triple of single-rotation blocks whose exponents
/// alternate between the two abstract su(2) axes (Kitaev XX/YY pairs, TFIM
/// Z/XX pairs): (B_i, B_{i+1}, B_i) -> (B_{i+1}, B_i, B_{i+1}) with the same
/// product.  One su(2) turnover; an identity middle block reduces to fusion.
/// Throws if the kinds carry no alternating su(2) structure.
std::array<Block, 3> mixedTurnover(const Block& b1, const Block& b2, const Block& b3);

}  // namespace blockpress
