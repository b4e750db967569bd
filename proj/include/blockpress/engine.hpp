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

#include "blockpress/structures.hpp"

namespace blockpress {

/// Logical counters follow the closed-form costs of the merge theorems
/// (they count identity-padded work uniformly); the effective counters
/// report the kernels actually executed, skipping structurally trivial ones.
struct OpCounter {
  std::uint64_t turnovers = 0;
  std::uint64_t fusions = 0;
  std::uint64_t effTurnovers = 0;
  std::uint64_t effFusions = 0;

  OpCounter& operator+=(const OpCounter& o) {
    turnovers += o.turnovers;
    fusions += o.fusions;
    effTurnovers += o.effTurnovers;
    effFusions += o.effFusions;
    return *this;
  }
};

struct CompressionReport {
  std::string model;
  int n = 0;
  long r = 0;
  OpCounter ops;
  double wallMs = 0.0;
};

/// C_{j,n} B_m = B_{m+1} C_{j,n}: one turnover.  The cascade is rewritten in
/// place and the shifted block returned.  Requires j <= m < n.
Block passThroughCascade(Cascade& c, const Block& b, ModelMapping map, OpCounter& ops);

/// T_n B_m = T_n via n-m turnovers and one fusion.  Requires m <= n.
void mergeBlockIntoTriangle(Triangle& t, const Block& b, OpCounter& ops);

/// T_n L_{1,n} = T_n via n(n-1)/2 turnovers and n fusions.
void mergeZigzagIntoTriangle(Triangle& t, const Zigzag& z, OpCounter& ops);

/// T_n T_n = T_n via n(n^2-1)/6 turnovers and n(n-1)/2 fusions.
void mergeTriangles(Triangle& t, const Triangle& t2, OpCounter& ops);

/// Compress r zigzags, chronological order (steps[0] earliest).  The result's
/// unitary is the time-ordered product M(steps[r-1]) ... M(steps[0]).
Triangle compressTimeDependent(const std::vector<Zigzag>& steps, OpCounter& ops);

/// Compress r identical steps by binary exponentiation over triangle powers.
Triangle compressTimeIndependent(const Zigzag& step, long r, OpCounter& ops);

/// Parity-split cascade rearrangement of the theorem.  Preserves the block
/// multiset size and the unitary; the logical counters are not incremented
/// (the rewrite is pure cascade relabeling at the calculus level), while the
/// effective counters record the kernel work done to realize it.
Square triangleToSquare(const Triangle& t, OpCounter& ops);

}  // namespace blockpress
