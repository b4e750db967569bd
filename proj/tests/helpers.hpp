// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#pragma once

#include <random>

#include "blockpress/engine.hpp"
#include "blockpress/models.hpp"
#include "blockpress/sim.hpp"
#include "blockpress/tfxy.hpp"

namespace bptest {

using namespace blockpress;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0xb10cf00dULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Su2 randomSu2() {
  return Su2::rz(uniform(-3, 3)) * Su2::rx(uniform(-3, 3)) * Su2::rz(uniform(-3, 3));
}

inline TfxyPayload randomPayload() { return {randomSu2(), randomSu2()}; }

inline TfxyAngles randomAngles() {
  TfxyAngles t;
  t.a = uniform(-3, 3);
  t.b = uniform(-3, 3);
  t.c = uniform(-3, 3);
  t.d = uniform(-3, 3);
  t.f = uniform(-3, 3);
  t.g = uniform(-3, 3);
  return t;
}

inline Block randomBlock(ModelMapping m, int index) {
  if (kindFor(m, index) == BlockKind::Tfxy) return tfxyBlock(index, randomPayload());
  return Block::su2(m, index, uniform(-3, 3));
}

inline Zigzag randomZigzag(ModelMapping m, int height) {
  std::vector<Block> bs;
  for (int i = 1; i <= height; ++i) bs.push_back(randomBlock(m, i));
  return zigzagFromBlocks(m, bs, height);
}

inline Triangle randomTriangle(ModelMapping m, int height) {
  Triangle t = Triangle::identity(m, height);
  for (auto& c : t.cascades)
    for (auto& b : c.blocks) b = randomBlock(m, b.index);
  return t;
}

// ---- independent naive oracle: kron embeddings and straight products ----

inline Mat kron2(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

inline Mat pauli(char p) {
  Mat m(2, 2);
  switch (p) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat embedNaive(const Mat& op, int qLo, int opQubits, int n) {
  Mat r = Mat::Identity(1, 1);
  int q = 1;
  while (q < qLo) {
    r = kron2(r, pauli('I'));
    ++q;
  }
  r = kron2(r, op);
  q += opQubits;
  while (q <= n) {
    r = kron2(r, pauli('I'));
    ++q;
  }
  return r;
}

inline Mat rotOp(const Mat& p, double theta) {
  const Eigen::Index d = p.rows();
  return std::cos(theta) * Mat::Identity(d, d) - cplx(0, 1) * std::sin(theta) * p;
}

inline Mat tfxy4FromPayload(const TfxyPayload& p) {
  Mat u = Mat::Zero(4, 4);
  u(0, 0) = p.minus.m00;
  u(0, 3) = p.minus.m01;
  u(3, 0) = p.minus.m10;
  u(3, 3) = p.minus.m11;
  u(1, 1) = p.plus.m00;
  u(1, 2) = p.plus.m01;
  u(2, 1) = p.plus.m10;
  u(2, 2) = p.plus.m11;
  return u;
}

// the defining six-rotation product of a TFXY block, built from scratch
inline Mat tfxy4FromAngles(const TfxyAngles& t) {
  const Mat Z1 = kron2(pauli('Z'), pauli('I'));
  const Mat Z2 = kron2(pauli('I'), pauli('Z'));
  const Mat XX = kron2(pauli('X'), pauli('X'));
  const Mat YY = kron2(pauli('Y'), pauli('Y'));
  return rotOp(Z1, t.a) * rotOp(Z2, t.b) * rotOp(XX, t.c) * rotOp(YY, t.d) * rotOp(Z1, t.f) *
         rotOp(Z2, t.g);
}

inline Mat blockMatrixNaive(const Block& b, ModelMapping m, int n) {
  const auto [qlo, qhi] = qubitsOf(m, b.index);
  switch (b.kind) {
    case BlockKind::Su2Z:
      return embedNaive(rotOp(pauli('Z'), b.angle()), qlo, 1, n);
    case BlockKind::Su2XX:
      return embedNaive(rotOp(kron2(pauli('X'), pauli('X')), b.angle()), qlo, 2, n);
    case BlockKind::Su2YY:
      return embedNaive(rotOp(kron2(pauli('Y'), pauli('Y')), b.angle()), qlo, 2, n);
    case BlockKind::Tfxy:
      return embedNaive(tfxy4FromPayload({b.s0, b.s1}), qlo, 2, n);
  }
  return Mat::Identity(1LL << n, 1LL << n);
}

inline Mat productNaive(const std::vector<Block>& blocks, ModelMapping m, int n) {
  Mat u = Mat::Identity(1LL << n, 1LL << n);
  for (const Block& b : blocks) u = u * blockMatrixNaive(b, m, n);
  return u;
}

inline double frob(const Mat& a, const Mat& b) { return (a - b).norm(); }

}  // namespace bptest
