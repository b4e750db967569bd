// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/tfxy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace blockpress {

TfxyPayload tfxyFromAngles(const TfxyAngles& t) {
  TfxyPayload p;
  p.minus = Su2::rz(t.a + t.b) * Su2::rx(t.c - t.d) * Su2::rz(t.f + t.g);
  p.plus = Su2::rz(t.a - t.b) * Su2::rx(t.c + t.d) * Su2::rz(t.f - t.g);
  return p;
}

TfxyAngles tfxyToAngles(const TfxyPayload& p) {
  const EulerTriple m = eulerExtract(p.minus, Axis::Z);
  const EulerTriple q = eulerExtract(p.plus, Axis::Z);
  TfxyAngles t;
  t.a = 0.5 * (m.a + q.a);
  t.b = 0.5 * (m.a - q.a);
  t.c = 0.5 * (m.b + q.b);
  t.d = 0.5 * (q.b - m.b);
  t.f = 0.5 * (m.c + q.c);
  t.g = 0.5 * (m.c - q.c);
  return t;
}

TfxyPayload tfxyZLower(double theta) { return {Su2::rz(theta), Su2::rz(theta)}; }
TfxyPayload tfxyZUpper(double theta) { return {Su2::rz(theta), Su2::rz(-theta)}; }
TfxyPayload tfxyXX(double theta) { return {Su2::rx(theta), Su2::rx(theta)}; }

namespace {

// Compose two SU(2) elements through their Euler forms; the middle x-outer
// triple is re-decomposed by one su(2) turnover.
Su2 composeViaTurnover(const Su2& u, const Su2& v) {
  const EulerTriple a = eulerExtract(u, Axis::Z);
  const EulerTriple b = eulerExtract(v, Axis::Z);
  EulerTriple mid;
  mid.outer = Axis::X;
  mid.a = a.b;
  mid.b = a.c + b.a;
  mid.c = b.b;
  const EulerTriple z = su2Turnover(mid);
  return Su2::rz(a.a + z.a) * Su2::rx(z.b) * Su2::rz(z.c + b.c);
}

}  // namespace

TfxyPayload tfxyFuse(const TfxyPayload& p, const TfxyPayload& q) {
  TfxyPayload r;
  r.minus = composeViaTurnover(p.minus, q.minus);
  r.plus = composeViaTurnover(p.plus, q.plus);
  return r;
}

Block tfxyBlock(int index, const TfxyPayload& p) {
  Block b;
  b.index = index;
  b.kind = BlockKind::Tfxy;
  b.s0 = p.minus;
  b.s1 = p.plus;
  return b;
}

std::array<cplx, 16> tfxyMatrix(const TfxyPayload& p) {
  std::array<cplx, 16> u{};
  u[0 * 4 + 0] = p.minus.m00;
  u[0 * 4 + 3] = p.minus.m01;
  u[3 * 4 + 0] = p.minus.m10;
  u[3 * 4 + 3] = p.minus.m11;
  u[1 * 4 + 1] = p.plus.m00;
  u[1 * 4 + 2] = p.plus.m01;
  u[2 * 4 + 1] = p.plus.m10;
  u[2 * 4 + 2] = p.plus.m11;
  return u;
}

// ---------------------------------------------------------------------------
// Turnover: primitive-triangle procedure.
//
// Primitive letters on the three qubits the triple touches:
//   1 = Z on qubit 1, 3 = Z on qubit 2, 5 = Z on qubit 3 (z-axis rotations)
//   2 = XX on (1,2),  4 = XX on (2,3)                    (x-axis rotations)
// A block expands through Y Y = e^{i pi/4 Z} e^{i pi/4 Z} XX e^{-i pi/4 Z}
// e^{-i pi/4 Z} (per qubit of the pair) into eight primitives.
// ---------------------------------------------------------------------------

namespace {

struct Prim {
  int letter;
  double theta;
};

void expandBlock(std::vector<Prim>& out, int pairLo, const TfxyAngles& t) {
  const int zl = 2 * pairLo - 1, zr = 2 * pairLo + 1, xx = 2 * pairLo;
  const double p4 = std::numbers::pi_v<double> / 4;
  out.push_back({zl, t.a});
  out.push_back({zr, t.b});
  out.push_back({xx, t.c});
  out.push_back({zl, -p4});
  out.push_back({zr, -p4});
  out.push_back({xx, t.d});
  out.push_back({zl, t.f + p4});
  out.push_back({zr, t.g + p4});
}

Su2 primRot(int letter, double theta) {
  return letter % 2 == 1 ? Su2::rz(theta) : Su2::rx(theta);
}

double primAngle(int letter, const Su2& u) {
  if (letter % 2 == 1) return -std::arg(u.m00);
  return std::atan2(-u.m01.imag(), u.m00.real());
}

// Height-5 triangle of primitives with structural occupancy flags.  The
// merge walk is the standard block merge; slots that were never written are
// exact identities, which turns the corresponding kernel applications into
// plain deposits, fusions, or index swaps.  The flag evolution depends only
// on the (fixed) letter stream, so the real-kernel count is the same for
// every input: 26.
struct PrimTriangle {
  Su2 rot[6][6];       // rot[j][k], cascade C_{j,5}, slot k (j<=k<=5)
  bool written[6][6];  // occupancy

  PrimTriangle() {
    for (auto& row : rot)
      for (auto& r : row) r = Su2::identity();
    for (auto& row : written)
      for (auto& w : row) w = false;
  }

  void merge(int letter, double theta) {
    Su2 cur = primRot(letter, theta);
    int m = letter;
    for (int j = 1;; ++j, ++m) {
      if (m == 5) {
        if (written[j][5]) {
          rot[j][5] = rot[j][5] * cur;
        } else {
          rot[j][5] = cur;
          written[j][5] = true;
        }
        return;
      }
      const bool wm = written[j][m], wm1 = written[j][m + 1];
      if (!wm && !wm1) {  // deposit
        rot[j][m] = cur;
        written[j][m] = true;
        return;
      }
      if (wm && !wm1) {  // same-index fusion
        rot[j][m] = rot[j][m] * cur;
        return;
      }
      if (!wm && wm1) {  // exact swap: Rz(b) Rx(c) == Rz(b) Rx(c) Rz(0)
        const Su2 out = rot[j][m + 1];
        rot[j][m] = cur;
        written[j][m] = true;
        rot[j][m + 1] = Su2::identity();
        written[j][m + 1] = false;
        cur = out;
        continue;
      }
      // real su(2) turnover on the (m, m+1, m) triple
      const Su2 prod = rot[j][m] * rot[j][m + 1] * cur;
      const Axis outAxis = (m % 2 == 1) ? Axis::X : Axis::Z;  // axis of m+1
      const EulerTriple e = su2TurnoverMatrix(prod, outAxis);
      if (outAxis == Axis::X) {
        cur = Su2::rx(e.a);
        rot[j][m] = Su2::rz(e.b);
        rot[j][m + 1] = Su2::rx(e.c);
      } else {
        cur = Su2::rz(e.a);
        rot[j][m] = Su2::rx(e.b);
        rot[j][m + 1] = Su2::rz(e.c);
      }
    }
  }
};

struct SlotRef {
  int j, k;
};

// Output grouping of the dense primitive triangle
// T5 = [5][4 5][3 4 5][2 3 4 5][1 2 3 4 5]:
//   pair-(2,3) group [5][4 5] | [3 4 5], pair-(1,2) group [2 3] | [1 2],
//   pair-(2,3) group [4 5] | [3 4 5].  Each half reads off as one template
//   instance; one fusion closes each group.
constexpr SlotRef kL1[] = {{5, 5}, {4, 4}, {4, 5}};
constexpr SlotRef kL2[] = {{3, 3}, {3, 4}, {3, 5}};
constexpr SlotRef kM1[] = {{2, 2}, {2, 3}};
constexpr SlotRef kM2[] = {{1, 1}, {1, 2}};
constexpr SlotRef kR1[] = {{2, 4}, {2, 5}};
constexpr SlotRef kR2[] = {{1, 3}, {1, 4}, {1, 5}};

template <size_t N>
TfxyPayload groupPayload(const PrimTriangle& tri, const SlotRef (&slots)[N], int pairLo) {
  const int zl = 2 * pairLo - 1, zr = 2 * pairLo + 1;
  TfxyPayload p;
  for (const SlotRef& s : slots) {
    const int letter = s.k;
    const double th = primAngle(letter, tri.rot[s.j][s.k]);
    TfxyPayload f;
    if (letter == zl)
      f = tfxyZLower(th);
    else if (letter == zr)
      f = tfxyZUpper(th);
    else
      f = tfxyXX(th);
    p.minus = p.minus * f.minus;
    p.plus = p.plus * f.plus;
  }
  return p;
}

}  // namespace

TfxyTriple tfxyTurnover(const TfxyPayload& b1, const TfxyPayload& b2, const TfxyPayload& b3) {
  if (b1.isIdentity(0.0) && b2.isIdentity(0.0) && b3.isIdentity(0.0)) return {};
  std::vector<Prim> prims;
  prims.reserve(24);
  expandBlock(prims, 1, tfxyToAngles(b1));
  expandBlock(prims, 2, tfxyToAngles(b2));
  expandBlock(prims, 1, tfxyToAngles(b3));

  // free boundary fusions: the trailing Z rotations of the first block meet
  // the leading same-letter rotations of the later blocks across commuting
  // primitives
  prims[7].theta += prims[8].theta;    // Z on qubit 2
  prims[6].theta += prims[16].theta;   // Z on qubit 1
  prims.erase(prims.begin() + 16);
  prims.erase(prims.begin() + 8);

  PrimTriangle tri;
  for (const Prim& p : prims) tri.merge(p.letter, p.theta);

  TfxyTriple out;
  out.first = tfxyFuse(groupPayload(tri, kL1, 2), groupPayload(tri, kL2, 2));
  out.mid = tfxyFuse(groupPayload(tri, kM1, 1), groupPayload(tri, kM2, 1));
  out.last = tfxyFuse(groupPayload(tri, kR1, 2), groupPayload(tri, kR2, 2));
  return out;
}

namespace {

// Swap the two qubits of a block's pair: the minus sector is invariant, the
// plus sector conjugates by X.
TfxyPayload reflectPayload(const TfxyPayload& p) {
  TfxyPayload r;
  r.minus = p.minus;
  r.plus.m00 = p.plus.m11;
  r.plus.m01 = p.plus.m10;
  r.plus.m10 = p.plus.m01;
  r.plus.m11 = p.plus.m00;
  return r;
}

}  // namespace

TfxyTriple tfxyTurnoverReverse(const TfxyPayload& b1, const TfxyPayload& b2,
                               const TfxyPayload& b3) {
  const TfxyTriple t =
      tfxyTurnover(reflectPayload(b1), reflectPayload(b2), reflectPayload(b3));
  TfxyTriple out;
  out.first = reflectPayload(t.first);
  out.mid = reflectPayload(t.mid);
  out.last = reflectPayload(t.last);
  return out;
}

}  // namespace blockpress
