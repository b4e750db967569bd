// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#pragma once

#include <vector>

#include "blockpress/block.hpp"

namespace blockpress {

/// Contiguous ascending run of blocks lo..hi.  Product order is list order:
/// the unitary of any structure here is M(blocks[0]) * M(blocks[1]) * ...
struct Cascade {
  int lo = 1, hi = 1;
  std::vector<Block> blocks;  // dense, indices lo..hi

  Block& at(int index) { return blocks[static_cast<size_t>(index - lo)]; }
  const Block& at(int index) const { return blocks[static_cast<size_t>(index - lo)]; }
  static Cascade identity(ModelMapping m, int lo, int hi);
};

/// One Trotter step's layout: all odd-indexed blocks (ascending) then all
/// even-indexed blocks (ascending), exactly one block per index 1..height.
struct Zigzag {
  ModelMapping mapping = ModelMapping::KitaevOddXX;
  int height = 1;
  std::vector<Block> blocks;
};

/// T_n = C_{n,n} C_{n-1,n} ... C_{1,n}, stored densely (identity padding).
struct Triangle {
  ModelMapping mapping = ModelMapping::KitaevOddXX;
  int height = 1;
  std::vector<Cascade> cascades;  // cascades[k] = C_{n-k,n}

  static Triangle identity(ModelMapping m, int height);
  size_t blockCount() const;
};

/// Depth-optimized parity-split cascade layout of a triangle.
struct Square {
  ModelMapping mapping = ModelMapping::KitaevOddXX;
  int height = 1;
  std::vector<Cascade> cascades;

  size_t blockCount() const;
};

/// Sort a set of blocks (at most one per index 1..height) into the zigzag
/// layout, identity-padding missing indices.  Throws on duplicate or
/// out-of-range indices.
Zigzag zigzagFromBlocks(ModelMapping m, const std::vector<Block>& blocks, int height);

/// View a zigzag as a triangle with identity blocks in the unused slots.
/// Placement: odd-index blocks k >= 3 go to cascade C_{k-1,n}; index 1 and the
/// even-index blocks go to C_{1,n}.  The products agree because odd blocks
/// mutually commute.
Triangle triangleFromZigzag(const Zigzag& z);

/// Flat block list in product order.
std::vector<Block> flatten(const Triangle& t);
std::vector<Block> flatten(const Square& s);
std::vector<Block> flatten(const Zigzag& z);

/// Minimum layer count when blocks sharing a qubit may not share a layer;
/// greedy left-to-right layering over the product order.  Identity blocks
/// occupy no layer.
int depth(const std::vector<Block>& blocks, ModelMapping m);
int depth(const Triangle& t);
int depth(const Square& s);
int depth(const Zigzag& z);

}  // namespace blockpress
