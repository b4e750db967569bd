// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/engine.hpp"

#include <stdexcept>

#include "blockpress/tfxy.hpp"

namespace blockpress {

namespace {

TfxyPayload payloadOf(const Block& b) { return {b.s0, b.s1}; }

void setPayload(Block& b, const TfxyPayload& p) {
  b.s0 = p.minus;
  b.s1 = p.plus;
}

// Fuse `b` into slot (same index).  Counts one effective fusion when real.
void fuseInto(Block& slot, const Block& b, OpCounter& ops) {
  if (b.isIdentity(0.0)) return;
  ++ops.effFusions;
  if (slot.kind == BlockKind::Tfxy)
    setPayload(slot, tfxyFuse(payloadOf(slot), payloadOf(b)));
  else
    slot.s0 = su2Fuse(slot.s0, b.s0);
}

// V -> Lambda kernel on the triple (slot_m, slot_{m+1}, incoming_m) in
// product order; writes the two slots and returns the out-block at m+1.
// Structurally trivial configurations short-circuit exactly.
Block turnoverForward(Block& sm, Block& sm1, const Block& incoming, ModelMapping map,
                      OpCounter& ops) {
  const int m = sm.index;
  if (incoming.isIdentity(0.0)) return Block::identityAt(map, m + 1);
  const bool wm = !sm.isIdentity(0.0), wm1 = !sm1.isIdentity(0.0);
  if (!wm && !wm1) {  // deposit
    sm = incoming;
    return Block::identityAt(map, m + 1);
  }
  if (wm && !wm1) {  // same-index fusion
    fuseInto(sm, incoming, ops);
    return Block::identityAt(map, m + 1);
  }
  if (!wm && wm1) {  // exact swap
    Block out = sm1;
    sm = incoming;
    sm1 = Block::identityAt(map, m + 1);
    return out;
  }
  ++ops.effTurnovers;
  if (sm.kind == BlockKind::Tfxy) {
    Block out = Block::identityAt(map, m + 1);
    const TfxyTriple r = tfxyTurnover(payloadOf(sm), payloadOf(sm1), payloadOf(incoming));
    setPayload(out, r.first);
    setPayload(sm, r.mid);
    setPayload(sm1, r.last);
    return out;
  }
  const auto lam = mixedTurnover(sm, sm1, incoming);
  sm = lam[1];
  sm1 = lam[2];
  return lam[0];
}

// Lambda -> V kernel on (incoming_{b}, slot_{b-1}, slot_b) in product order;
// returns the out-block at b-1.
Block turnoverReverse(const Block& incoming, Block& slo, Block& shi, ModelMapping map,
                      OpCounter& ops) {
  const int b = incoming.index;
  if (incoming.isIdentity(0.0)) return Block::identityAt(map, b - 1);
  const bool wlo = !slo.isIdentity(0.0), whi = !shi.isIdentity(0.0);
  if (!wlo && !whi) {  // deposit
    shi = incoming;
    return Block::identityAt(map, b - 1);
  }
  if (!wlo && whi) {  // same-index fusion
    Block tmp = shi;
    shi = incoming;
    fuseInto(shi, tmp, ops);
    return Block::identityAt(map, b - 1);
  }
  if (wlo && !whi) {  // exact swap
    Block out = slo;
    slo = Block::identityAt(map, b - 1);
    shi = incoming;
    return out;
  }
  ++ops.effTurnovers;
  Block out = Block::identityAt(map, b - 1);
  if (incoming.kind == BlockKind::Tfxy) {
    const TfxyTriple r =
        tfxyTurnoverReverse(payloadOf(incoming), payloadOf(slo), payloadOf(shi));
    setPayload(slo, r.first);
    setPayload(shi, r.mid);
    setPayload(out, r.last);
    return out;
  }
  const Su2 prod = incoming.s0 * slo.s0 * shi.s0;
  const Axis outAxis = axisOf(slo.kind);
  const EulerTriple e = su2TurnoverMatrix(prod, outAxis);
  auto rot = [](Axis ax, double t) { return ax == Axis::X ? Su2::rx(t) : Su2::rz(t); };
  slo.s0 = rot(outAxis, e.a);
  shi.s0 = rot(axisOf(shi.kind), e.b);
  out.s0 = rot(outAxis, e.c);
  return out;
}

// Shared merge walk.  Logical costs are charged by the caller.
void mergeWalk(Triangle& t, const Block& b, OpCounter& ops) {
  const int n = t.height;
  Block cur = b;
  for (int pos = n - 1; pos >= 0; --pos) {
    Cascade& c = t.cascades[static_cast<size_t>(pos)];
    if (cur.index == n) {
      fuseInto(c.at(n), cur, ops);
      return;
    }
    cur = turnoverForward(c.at(cur.index), c.at(cur.index + 1), cur, t.mapping, ops);
    if (cur.isIdentity(0.0)) return;
  }
  if (!cur.isIdentity(0.0)) throw std::logic_error("merge walk fell off the triangle");
}

void mergeBlockImpl(Triangle& t, const Block& b, OpCounter& ops, bool countFusion) {
  if (b.index < 1 || b.index > t.height)
    throw std::invalid_argument("block index exceeds triangle height");
  ops.turnovers += static_cast<std::uint64_t>(t.height - b.index);
  if (countFusion) ops.fusions += 1;
  mergeWalk(t, b, ops);
}

}  // namespace

Block passThroughCascade(Cascade& c, const Block& b, ModelMapping map, OpCounter& ops) {
  if (b.index < c.lo || b.index >= c.hi)
    throw std::invalid_argument("passThroughCascade requires lo <= index < hi");
  ops.turnovers += 1;
  return turnoverForward(c.at(b.index), c.at(b.index + 1), b, map, ops);
}

void mergeBlockIntoTriangle(Triangle& t, const Block& b, OpCounter& ops) {
  mergeBlockImpl(t, b, ops, true);
}

void mergeZigzagIntoTriangle(Triangle& t, const Zigzag& z, OpCounter& ops) {
  if (z.height != t.height) throw std::invalid_argument("zigzag/triangle height mismatch");
  if (z.mapping != t.mapping) throw std::invalid_argument("zigzag/triangle mapping mismatch");
  for (const Block& b : z.blocks) mergeBlockImpl(t, b, ops, true);
}

void mergeTriangles(Triangle& t, const Triangle& t2in, OpCounter& ops) {
  if (t2in.height != t.height) throw std::invalid_argument("triangle height mismatch");
  if (t2in.mapping != t.mapping) throw std::invalid_argument("triangle mapping mismatch");
  const Triangle t2 = t2in;  // copy: t2in may alias t (squaring)
  const int n = t.height;
  for (const Cascade& c : t2.cascades)
    for (const Block& b : c.blocks) mergeBlockImpl(t, b, ops, b.index != n);
}

Triangle compressTimeDependent(const std::vector<Zigzag>& steps, OpCounter& ops) {
  if (steps.empty()) throw std::invalid_argument("no Trotter steps to compress");
  Triangle t = triangleFromZigzag(steps.back());
  for (size_t k = steps.size() - 1; k-- > 0;) mergeZigzagIntoTriangle(t, steps[k], ops);
  return t;
}

Triangle compressTimeIndependent(const Zigzag& step, long r, OpCounter& ops) {
  if (r < 1) throw std::invalid_argument("step count must be >= 1");
  Triangle base = triangleFromZigzag(step);
  Triangle result;
  bool haveResult = false;
  while (true) {
    if (r & 1) {
      if (haveResult) {
        mergeTriangles(result, base, ops);
      } else {
        result = base;
        haveResult = true;
      }
    }
    r >>= 1;
    if (!r) break;
    mergeTriangles(base, base, ops);
  }
  return result;
}

Square triangleToSquare(const Triangle& t, OpCounter& ops) {
  const int n = t.height;
  std::vector<Cascade> list = t.cascades;

  // move C_{m,n} (m = n, n-2, ...) rightward through the m-1 cascades below
  auto moveRightOnce = [&](size_t p) {
    Cascade& mov = list[p];
    Cascade& tgt = list[p + 1];
    if (!(tgt.lo < mov.lo)) throw std::logic_error("cascade shift precondition");
    Cascade shifted;
    shifted.lo = mov.lo - 1;
    shifted.hi = mov.hi - 1;
    shifted.blocks.resize(mov.blocks.size());
    for (int bidx = mov.hi; bidx >= mov.lo; --bidx) {
      const Block b = mov.at(bidx);
      Block out = turnoverReverse(b, tgt.at(bidx - 1), tgt.at(bidx), t.mapping, ops);
      shifted.blocks[static_cast<size_t>(bidx - 1 - shifted.lo)] = out;
    }
    std::swap(list[p], list[p + 1]);
    list[p + 1] = shifted;
  };

  const int lowest = (n % 2 == 1) ? 3 : 2;
  for (int m = n; m >= lowest; m -= 2) {
    size_t p = 0;
    while (list[p].lo != m || list[p].hi != n) ++p;
    for (int step = 0; step < m - 1; ++step, ++p) moveRightOnce(p);
  }

  Square s;
  s.mapping = t.mapping;
  s.height = n;
  s.cascades = std::move(list);
  return s;
}

}  // namespace blockpress
