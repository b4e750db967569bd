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

#include "blockpress/block.hpp"

namespace blockpress {

/// A TFXY block factorizes over the two-qubit parity sectors: the even-parity
/// span{|00>,|11>} carries one SU(2) element (minus sector, generated by
/// (XX-YY)/2 -> x and (Z1+Z2)/2 -> z) and the odd-parity span{|01>,|10>}
/// carries an independent one (plus sector, (XX+YY)/2 -> x, (Z1-Z2)/2 -> z).
struct TfxyPayload {
  Su2 minus{};
  Su2 plus{};

  bool isIdentity(double tol = 1e-14) const {
    return minus.isIdentity(tol) && plus.isIdentity(tol);
  }
};

/// Six template angles of a block,
///   B = Rz_i(a) Rz_{i+1}(b) Rxx(c) Ryy(d) Rz_i(f) Rz_{i+1}(g).
struct TfxyAngles {
  double a = 0, b = 0, c = 0, d = 0, f = 0, g = 0;
};

TfxyPayload tfxyFromAngles(const TfxyAngles& t);
TfxyAngles tfxyToAngles(const TfxyPayload& p);

/// Sector factors of the TFXY-template primitives on a qubit pair.
TfxyPayload tfxyZLower(double theta);   // Rz on the lower qubit of the pair
TfxyPayload tfxyZUpper(double theta);   // Rz on the upper qubit
TfxyPayload tfxyXX(double theta);       // Rxx on the pair

/// Fusion of two same-index blocks.  The sector products are evaluated by the
/// Euler-composition route, consuming one su(2) turnover per sector (two per
/// fusion), matching the operation's cost model.
TfxyPayload tfxyFuse(const TfxyPayload& p, const TfxyPayload& q);

Block tfxyBlock(int index, const TfxyPayload& p);

struct TfxyTriple {
  TfxyPayload first, mid, last;
};

/// Turnover of a V-shaped triple B_i B_{i+1} B_i into the Lambda shape
/// B_{i+1} B_i B_{i+1} (`first` is the leftmost factor of the result).
///
/// Reference procedure: expand each block into Z/XX primitives through the
/// Y-to-X conjugation identity, merge the primitive stream left-to-right into
/// a height-5 triangle of those primitives (26 su(2) turnovers after the two
/// free boundary fusions), then close the three output groups with one TFXY
/// fusion each (2 su(2) turnovers per fusion; 32 in total).
TfxyTriple tfxyTurnover(const TfxyPayload& b1, const TfxyPayload& b2, const TfxyPayload& b3);

/// Inverse direction, Lambda -> V, by conjugating with the outer-qubit
/// reflection and running the forward procedure.
TfxyTriple tfxyTurnoverReverse(const TfxyPayload& b1, const TfxyPayload& b2,
                               const TfxyPayload& b3);

/// 4x4 two-qubit matrix (row-major, |q_lo q_hi> basis with the lower qubit as
/// the most significant bit).
std::array<cplx, 16> tfxyMatrix(const TfxyPayload& p);

}  // namespace blockpress
