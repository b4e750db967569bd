// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/su2.hpp"

#include <cmath>
#include <numbers>

namespace blockpress {

namespace {
thread_local std::uint64_t g_turnovers = 0;
}

std::uint64_t su2TurnoverCount() { return g_turnovers; }
void resetSu2TurnoverCount() { g_turnovers = 0; }

Su2 Su2::rz(double t) {
  Su2 r;
  r.m00 = std::polar(1.0, -t);
  r.m11 = std::polar(1.0, t);
  r.m01 = r.m10 = {0.0, 0.0};
  return r;
}

Su2 Su2::rx(double t) {
  Su2 r;
  const double c = std::cos(t), s = std::sin(t);
  r.m00 = r.m11 = {c, 0.0};
  r.m01 = r.m10 = {0.0, -s};
  return r;
}

Su2 Su2::operator*(const Su2& o) const {
  Su2 r;
  r.m00 = m00 * o.m00 + m01 * o.m10;
  r.m01 = m00 * o.m01 + m01 * o.m11;
  r.m10 = m10 * o.m00 + m11 * o.m10;
  r.m11 = m10 * o.m01 + m11 * o.m11;
  return r;
}

Su2 Su2::dagger() const {
  Su2 r;
  r.m00 = std::conj(m00);
  r.m01 = std::conj(m10);
  r.m10 = std::conj(m01);
  r.m11 = std::conj(m11);
  return r;
}

bool Su2::isIdentity(double tol) const {
  return std::abs(m00 - 1.0) <= tol && std::abs(m11 - 1.0) <= tol &&
         std::abs(m01) <= tol && std::abs(m10) <= tol;
}

double Su2::unitarityDefect() const {
  const Su2 g = dagger() * (*this);
  const double d00 = std::abs(g.m00 - 1.0), d11 = std::abs(g.m11 - 1.0);
  const double d01 = std::abs(g.m01), d10 = std::abs(g.m10);
  return std::sqrt(d00 * d00 + d01 * d01 + d10 * d10 + d11 * d11);
}

double Su2::detDefect() const { return std::abs(m00 * m11 - m01 * m10 - 1.0); }

double Su2::frobDistance(const Su2& o) const {
  const double d0 = std::abs(m00 - o.m00), d1 = std::abs(m01 - o.m01);
  const double d2 = std::abs(m10 - o.m10), d3 = std::abs(m11 - o.m11);
  return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3);
}

double normAngle(double t) {
  t = std::remainder(t, 2.0 * std::numbers::pi_v<double>);
  if (t <= -std::numbers::pi_v<double> + 1e-18) t = std::numbers::pi_v<double>;
  return t;
}

Su2 su2Fuse(const Su2& u, const Su2& v) { return u * v; }

Su2 EulerTriple::rebuild() const {
  Su2 u;
  if (outer == Axis::Z) {
    u = Su2::rz(a) * Su2::rx(b) * Su2::rz(c);
  } else {
    u = Su2::rx(a) * Su2::rz(b) * Su2::rx(c);
  }
  if (negated) {
    u.m00 = -u.m00;
    u.m01 = -u.m01;
    u.m10 = -u.m10;
    u.m11 = -u.m11;
  }
  return u;
}

namespace {

// Conjugation by Hadamard swaps the x and z axes, so the x-outer problem
// reduces to the z-outer one.
Su2 hConj(const Su2& u) {
  const double s = 0.5;
  Su2 r;
  r.m00 = s * (u.m00 + u.m01 + u.m10 + u.m11);
  r.m01 = s * (u.m00 - u.m01 + u.m10 - u.m11);
  r.m10 = s * (u.m00 + u.m01 - u.m10 - u.m11);
  r.m11 = s * (u.m00 - u.m01 - u.m10 + u.m11);
  return r;
}

EulerTriple extractZxz(const Su2& u) {
  EulerTriple t;
  t.outer = Axis::Z;
  const double au = std::abs(u.m00), av = std::abs(u.m01);
  if (av < 1e-300) {
    t.a = normAngle(-std::arg(u.m00));
    t.b = t.c = 0.0;
    return t;
  }
  if (au < 1e-300) {
    t.a = normAngle(-std::arg(u.m01) - std::numbers::pi_v<double> / 2);
    t.b = std::numbers::pi_v<double> / 2;
    t.c = 0.0;
    return t;
  }
  t.b = std::atan2(av, au);
  const double sum = -std::arg(u.m00);                                   // a+c
  const double dif = -std::arg(u.m01) - std::numbers::pi_v<double> / 2;  // a-c
  t.a = normAngle(0.5 * (sum + dif));
  t.c = normAngle(0.5 * (sum - dif));
  return t;
}

}  // namespace

EulerTriple eulerExtract(const Su2& u, Axis outer) {
  if (outer == Axis::Z) return extractZxz(u);
  EulerTriple t = extractZxz(hConj(u));
  t.outer = Axis::X;
  return t;
}

EulerTriple su2TurnoverMatrix(const Su2& product, Axis outerOfOutput) {
  ++g_turnovers;
  return eulerExtract(product, outerOfOutput);
}

EulerTriple su2Turnover(const EulerTriple& t) {
  if (t.b == 0.0) {
    ++g_turnovers;
    EulerTriple r;
    r.outer = other(t.outer);
    r.b = normAngle(t.a + t.c);
    r.negated = t.negated;
    return r;
  }
  EulerTriple r = su2TurnoverMatrix(t.rebuild(), other(t.outer));
  return r;
}

}  // namespace blockpress
