// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/block.hpp"

#include <cmath>
#include <stdexcept>

namespace blockpress {

int maxBlockIndex(ModelMapping m, int nQubits) {
  if (nQubits < 2) throw std::invalid_argument("chain needs at least 2 qubits");
  return m == ModelMapping::Tfim ? 2 * nQubits - 1 : nQubits - 1;
}

int qubitCountFor(ModelMapping m, int height) {
  return m == ModelMapping::Tfim ? (height + 1) / 2 : height + 1;
}

BlockKind kindFor(ModelMapping m, int index) {
  const bool odd = index % 2 == 1;
  switch (m) {
    case ModelMapping::KitaevOddXX: return odd ? BlockKind::Su2XX : BlockKind::Su2YY;
    case ModelMapping::KitaevOddYY: return odd ? BlockKind::Su2YY : BlockKind::Su2XX;
    case ModelMapping::Tfim: return odd ? BlockKind::Su2Z : BlockKind::Su2XX;
    case ModelMapping::Tfxy: return BlockKind::Tfxy;
  }
  throw std::logic_error("bad mapping");
}

std::pair<int, int> qubitsOf(ModelMapping m, int index) {
  if (m == ModelMapping::Tfim) {
    if (index % 2 == 1) {
      const int q = (index + 1) / 2;
      return {q, q};
    }
    const int q = index / 2;
    return {q, q + 1};
  }
  return {index, index + 1};
}

Axis axisOf(BlockKind k) {
  switch (k) {
    case BlockKind::Su2XX: return Axis::X;
    case BlockKind::Su2YY:
    case BlockKind::Su2Z: return Axis::Z;
    case BlockKind::Tfxy: break;
  }
  throw std::invalid_argument("TFXY blocks have no single su(2) axis");
}

Block Block::identityAt(ModelMapping m, int index) {
  Block b;
  b.index = index;
  b.kind = kindFor(m, index);
  return b;
}

bool Block::isIdentity(double tol) const {
  return s0.isIdentity(tol) && (kind != BlockKind::Tfxy || s1.isIdentity(tol));
}

double Block::angle() const {
  if (kind == BlockKind::Tfxy) throw std::invalid_argument("tfxy block has six angles");
  if (axisOf(kind) == Axis::X) return std::atan2(-s0.m01.imag(), s0.m00.real());
  return -std::arg(s0.m00);
}

Block Block::su2(ModelMapping m, int index, double theta) {
  Block b = identityAt(m, index);
  if (b.kind == BlockKind::Tfxy) throw std::invalid_argument("use tfxy payload constructors");
  b.s0 = axisOf(b.kind) == Axis::X ? Su2::rx(theta) : Su2::rz(theta);
  return b;
}

std::array<Block, 3> mixedTurnover(const Block& b1, const Block& b2, const Block& b3) {
  if (b1.kind == BlockKind::Tfxy || b2.kind == BlockKind::Tfxy || b3.kind == BlockKind::Tfxy)
    throw std::invalid_argument("mixedTurnover takes single-rotation blocks");
  if (b1.index != b3.index || b2.index != b1.index + 1 || b1.kind != b3.kind)
    throw std::invalid_argument("mixedTurnover expects the V shape (i, i+1, i)");
  const Axis inner = axisOf(b1.kind), outer = axisOf(b2.kind);
  if (inner == outer)
    throw std::invalid_argument("adjacent kinds carry no su(2) structure");
  Block first = b2, mid = b1, last = b2;
  if (b2.isIdentity(0.0)) {  // fusion-equivalent degenerate case
    mid.s0 = su2Fuse(b1.s0, b3.s0);
    first.s0 = last.s0 = Su2::identity();
    return {first, mid, last};
  }
  const EulerTriple e = su2TurnoverMatrix(b1.s0 * b2.s0 * b3.s0, outer);
  auto rot = [](Axis ax, double t) { return ax == Axis::X ? Su2::rx(t) : Su2::rz(t); };
  first.s0 = rot(outer, e.a);
  mid.s0 = rot(inner, e.b);
  last.s0 = rot(outer, e.c);
  return {first, mid, last};
}

bool commutes(const Block& b1, const Block& b2, ModelMapping m) {
  const BlockKind k1 = kindFor(m, b1.index), k2 = kindFor(m, b2.index);
  const bool sameFamily =
      (b1.kind == k1 && b2.kind == k2) ||
      (m != ModelMapping::Tfim && m != ModelMapping::Tfxy &&
       b1.kind != BlockKind::Tfxy && b1.kind != BlockKind::Su2Z &&
       b2.kind != BlockKind::Tfxy && b2.kind != BlockKind::Su2Z);
  if (!sameFamily) throw std::invalid_argument("blocks from mismatched model mappings");
  if (std::abs(b1.index - b2.index) > 1) return true;
  // same-bond XX/YY blocks commute (the XY interleaving case)
  if (b1.index == b2.index &&
      ((b1.kind == BlockKind::Su2XX && b2.kind == BlockKind::Su2YY) ||
       (b1.kind == BlockKind::Su2YY && b2.kind == BlockKind::Su2XX)))
    return true;
  return false;
}

}  // namespace blockpress
