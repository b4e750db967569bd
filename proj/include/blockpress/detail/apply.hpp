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
#include <cmath>
#include <cstdint>

#include "blockpress/su2.hpp"

namespace blockpress::detail {

// 2x2 kernel on qubit q (1-based, qubit 1 = MSB) of one column accessor.
template <typename ColAccess>
void apply1(ColAccess&& col, int n, int q, const Su2& u) {
  const int bit = n - q;
  const std::int64_t dim = 1LL << n, stride = 1LL << bit;
  for (std::int64_t base = 0; base < dim; base += 2 * stride)
    for (std::int64_t off = 0; off < stride; ++off) {
      const std::int64_t i0 = base + off, i1 = i0 + stride;
      const cplx a0 = col(i0), a1 = col(i1);
      col(i0) = u.m00 * a0 + u.m01 * a1;
      col(i1) = u.m10 * a0 + u.m11 * a1;
    }
}

// 4x4 kernel on qubits (qa, qb), qa more significant in the kernel's basis.
template <typename ColAccess>
void apply2(ColAccess&& col, int n, int qa, int qb, const std::array<cplx, 16>& u) {
  const std::int64_t sa = 1LL << (n - qa), sb = 1LL << (n - qb);
  const std::int64_t dim = 1LL << n;
  for (std::int64_t i = 0; i < dim; ++i) {
    if ((i & sa) || (i & sb)) continue;
    const std::int64_t i00 = i, i01 = i | sb, i10 = i | sa, i11 = i | sa | sb;
    const cplx a0 = col(i00), a1 = col(i01), a2 = col(i10), a3 = col(i11);
    col(i00) = u[0] * a0 + u[1] * a1 + u[2] * a2 + u[3] * a3;
    col(i01) = u[4] * a0 + u[5] * a1 + u[6] * a2 + u[7] * a3;
    col(i10) = u[8] * a0 + u[9] * a1 + u[10] * a2 + u[11] * a3;
    col(i11) = u[12] * a0 + u[13] * a1 + u[14] * a2 + u[15] * a3;
  }
}

inline std::array<cplx, 16> rotXX4(double t) {
  std::array<cplx, 16> u{};
  const cplx c{std::cos(t), 0.0}, s{0.0, -std::sin(t)};
  u[0] = u[5] = u[10] = u[15] = c;
  u[3] = u[6] = u[9] = u[12] = s;
  return u;
}

inline std::array<cplx, 16> rotYY4(double t) {
  std::array<cplx, 16> u{};
  const cplx c{std::cos(t), 0.0}, s{0.0, -std::sin(t)};
  u[0] = u[5] = u[10] = u[15] = c;
  u[3] = u[12] = -s;
  u[6] = u[9] = s;
  return u;
}

inline std::array<cplx, 16> cxMatrix() {
  std::array<cplx, 16> u{};
  u[0] = u[5] = u[11] = u[14] = 1.0;  // control = more significant qubit
  return u;
}

inline Su2 ryHalf(double lambda) {
  const double c = std::cos(lambda / 2), s = std::sin(lambda / 2);
  Su2 u;
  u.m00 = {c, 0.0};
  u.m01 = {-s, 0.0};
  u.m10 = {s, 0.0};
  u.m11 = {c, 0.0};
  return u;
}

}  // namespace blockpress::detail
