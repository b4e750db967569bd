// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#pragma once

#include <complex>
#include <cstdint>

namespace blockpress {

using cplx = std::complex<double>;

/// 2x2 special-unitary matrix, the carrier of all block parameters.
/// Rotation convention throughout: R_axis(theta) = exp(-i * theta * Pauli_axis),
/// i.e. Rz(t) = diag(e^{-it}, e^{it}) and Rx(t) = [[cos t, -i sin t], [-i sin t, cos t]].
struct Su2 {
  cplx m00{1.0, 0.0}, m01{0.0, 0.0};
  cplx m10{0.0, 0.0}, m11{1.0, 0.0};

  static Su2 identity() { return {}; }
  static Su2 rz(double t);
  static Su2 rx(double t);

  Su2 operator*(const Su2& o) const;
  Su2 dagger() const;

  bool isIdentity(double tol = 1e-14) const;
  /// ||U^dag U - I||_F
  double unitarityDefect() const;
  /// |det(U) - 1|
  double detDefect() const;
  double frobDistance(const Su2& o) const;
};

enum class Axis : std::uint8_t { X, Z };

constexpr Axis other(Axis a) { return a == Axis::X ? Axis::Z : Axis::X; }

/// Euler decomposition R_outer(a) * R_inner(b) * R_outer(c) where the inner
/// axis is the other one.  Extraction always reconstructs the element exactly,
/// so `negated` stays false; the flag is kept so callers can carry an explicit
/// sign instead of silently absorbing one.
struct EulerTriple {
  Axis outer = Axis::Z;
  double a = 0.0, b = 0.0, c = 0.0;
  bool negated = false;

  Su2 rebuild() const;
};

/// Normalize an angle to (-pi, pi], ties at -pi mapped to +pi.
double normAngle(double t);

/// Matrix product u*v (left element applied after right, circuit order).
Su2 su2Fuse(const Su2& u, const Su2& v);

/// Euler angles of u with the requested outer axis.  Exact: rebuilding the
/// triple reproduces u to machine precision (no residual global phase).
/// Axis-aligned inputs canonicalize to (angle, 0, 0).
EulerTriple eulerExtract(const Su2& u, Axis outer);

/// The su(2) turnover: re-decompose the element with the opposite outer axis.
/// Implemented on the 2x2 matrix (polar extraction of its entries), never via
/// the tangent relations, so there are no singular inputs.  A degenerate
/// middle angle b == 0 resolves to the fusion-equivalent triple (0, a+c, 0).
EulerTriple su2Turnover(const EulerTriple& t);

/// Kernel form used by the block engine: decompose a product matrix into an
/// Euler triple with the given outer axis.  Counts one turnover.
EulerTriple su2TurnoverMatrix(const Su2& product, Axis outerOfOutput);

/// Thread-local instrumentation: number of su(2) turnover kernel invocations.
std::uint64_t su2TurnoverCount();
void resetSu2TurnoverCount();

}  // namespace blockpress
