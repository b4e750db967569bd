// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockpress {

Cascade Cascade::identity(ModelMapping m, int lo, int hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad cascade bounds");
  Cascade c;
  c.lo = lo;
  c.hi = hi;
  c.blocks.reserve(static_cast<size_t>(hi - lo + 1));
  for (int k = lo; k <= hi; ++k) c.blocks.push_back(Block::identityAt(m, k));
  return c;
}

Triangle Triangle::identity(ModelMapping m, int height) {
  if (height < 1) throw std::invalid_argument("triangle height must be >= 1");
  Triangle t;
  t.mapping = m;
  t.height = height;
  t.cascades.reserve(static_cast<size_t>(height));
  for (int k = 0; k < height; ++k)
    t.cascades.push_back(Cascade::identity(m, height - k, height));
  return t;
}

size_t Triangle::blockCount() const {
  size_t n = 0;
  for (const auto& c : cascades) n += c.blocks.size();
  return n;
}

size_t Square::blockCount() const {
  size_t n = 0;
  for (const auto& c : cascades) n += c.blocks.size();
  return n;
}

Zigzag zigzagFromBlocks(ModelMapping m, const std::vector<Block>& blocks, int height) {
  if (height < 1) throw std::invalid_argument("zigzag height must be >= 1");
  std::vector<bool> seen(static_cast<size_t>(height) + 1, false);
  std::vector<Block> slot(static_cast<size_t>(height) + 1);
  for (const Block& b : blocks) {
    if (b.index < 1 || b.index > height)
      throw std::invalid_argument("block index out of range for zigzag height");
    if (seen[static_cast<size_t>(b.index)])
      throw std::invalid_argument("duplicate block index in zigzag");
    if (b.kind != kindFor(m, b.index))
      throw std::invalid_argument("block kind inconsistent with mapping parity");
    seen[static_cast<size_t>(b.index)] = true;
    slot[static_cast<size_t>(b.index)] = b;
  }
  Zigzag z;
  z.mapping = m;
  z.height = height;
  z.blocks.reserve(static_cast<size_t>(height));
  for (int i = 1; i <= height; i += 2)
    z.blocks.push_back(seen[static_cast<size_t>(i)] ? slot[static_cast<size_t>(i)]
                                                    : Block::identityAt(m, i));
  for (int i = 2; i <= height; i += 2)
    z.blocks.push_back(seen[static_cast<size_t>(i)] ? slot[static_cast<size_t>(i)]
                                                    : Block::identityAt(m, i));
  return z;
}

Triangle triangleFromZigzag(const Zigzag& z) {
  Triangle t = Triangle::identity(z.mapping, z.height);
  const int n = z.height;
  auto cascadeFor = [&](int lo) -> Cascade& {
    return t.cascades[static_cast<size_t>(n - lo)];
  };
  for (const Block& b : z.blocks) {
    if (b.index % 2 == 1 && b.index >= 3)
      cascadeFor(b.index - 1).at(b.index) = b;
    else
      cascadeFor(1).at(b.index) = b;
  }
  return t;
}

std::vector<Block> flatten(const Triangle& t) {
  std::vector<Block> out;
  out.reserve(t.blockCount());
  for (const auto& c : t.cascades) out.insert(out.end(), c.blocks.begin(), c.blocks.end());
  return out;
}

std::vector<Block> flatten(const Square& s) {
  std::vector<Block> out;
  out.reserve(s.blockCount());
  for (const auto& c : s.cascades) out.insert(out.end(), c.blocks.begin(), c.blocks.end());
  return out;
}

std::vector<Block> flatten(const Zigzag& z) { return z.blocks; }

int depth(const std::vector<Block>& blocks, ModelMapping m) {
  std::vector<int> qubitLayer;  // last occupied layer per qubit, 1-based
  int maxQ = 0;
  for (const Block& b : blocks) maxQ = std::max(maxQ, qubitsOf(m, b.index).second);
  qubitLayer.assign(static_cast<size_t>(maxQ) + 1, 0);
  int d = 0;
  for (const Block& b : blocks) {
    if (b.isIdentity()) continue;
    const auto [lo, hi] = qubitsOf(m, b.index);
    int layer = 0;
    for (int q = lo; q <= hi; ++q) layer = std::max(layer, qubitLayer[static_cast<size_t>(q)]);
    ++layer;
    for (int q = lo; q <= hi; ++q) qubitLayer[static_cast<size_t>(q)] = layer;
    d = std::max(d, layer);
  }
  return d;
}

int depth(const Triangle& t) { return depth(flatten(t), t.mapping); }
int depth(const Square& s) { return depth(flatten(s), s.mapping); }
int depth(const Zigzag& z) { return depth(z.blocks, z.mapping); }

}  // namespace blockpress
