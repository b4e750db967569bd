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
#include <string>
#include <vector>

#include "blockpress/structures.hpp"

namespace blockpress {

enum class Family { Kitaev, XY, Tfim, Tfxy, GenTfxy };

std::string familyName(Family f);
Family familyFromName(const std::string& s);

/// Per-channel coefficient arrays.  Bond channels have length n-1, the z
/// channel length n.  Which channels are live depends on the family:
///   kitaev: bond      (odd bonds couple XX, even bonds YY)
///   xy:     xx, yy
///   tfim:   xx, z
///   tfxy:   xx, yy, z
///   gen-tfxy: xx, yy, xy, yx, z
struct Couplings {
  std::vector<double> bond, xx, yy, xy, yx, z;
};

struct ModelSpec {
  Family family = Family::Tfim;
  int n = 2;
  Couplings c;
};

/// Throws std::invalid_argument naming the offending channel.
void validate(const ModelSpec& m);

enum class ScheduleKind { Constant, PiecewiseLinear, Tabulated };

struct Sample {
  double t = 0.0;
  Couplings c;
};

struct Schedule {
  ScheduleKind kind = ScheduleKind::Constant;
  std::vector<Sample> samples;  // strictly increasing t; unused when constant
  double dt = 0.1;
  long steps = 1;
};

void validate(const ModelSpec& m, const Schedule& s);

/// Expand length-1 coupling channels to the family arity (uniform chains).
void broadcastUniform(ModelSpec& m, Schedule& s);

/// Coefficients at time t: the model's own arrays for constant schedules,
/// elementwise linear interpolation (clamped) for piecewise-linear, and the
/// last sample with sample.t <= t for tabulated.
Couplings coefficientsAt(const ModelSpec& m, const Schedule& s, double t);

/// One independently compressible chain of the model.  Every family maps to a
/// single chain except XY, which splits into two commuting Kitaev chains of
/// opposite bond parity.
struct SubChain {
  ModelMapping mapping = ModelMapping::KitaevOddXX;
  int nQubits = 2;
  std::vector<Zigzag> steps;  // chronological, steps[0] at t = 0
};

/// Single Trotter step at the given coefficients.  Returns one zigzag per
/// sub-chain.
std::vector<Zigzag> trotterStep(const ModelSpec& m, const Couplings& at, double dt);

/// Full first-order Trotter circuit: step k evaluated at t_k = (k-1) dt.
std::vector<SubChain> trotterCircuit(const ModelSpec& m, const Schedule& s);

/// Rewrite a kitaev/xy/tfim model as a TFXY model with zeroed channels.
ModelSpec embedAsTfxy(const ModelSpec& m);

/// Free-fermion chain: H = sum_i alpha_i c+_i c_{i+1} + h.c.
///                       + beta_i c_i c_{i+1} + h.c. + sum_i gamma_i c+_i c_i.
struct FreeFermionSpec {
  std::vector<std::complex<double>> hop;   // alpha, length n-1
  std::vector<std::complex<double>> pair;  // beta, length n-1
  std::vector<double> chem;                // gamma, length n
};

/// Jordan-Wigner dictionary with c_i = (prod_{j<i} Z_j)(X_i + i Y_i)/2.
/// The constant sum(gamma)/2 is dropped (a global energy shift).
ModelSpec fromFreeFermion(const FreeFermionSpec& f);
FreeFermionSpec toFreeFermion(const ModelSpec& m);

/// Parse the key-value model/schedule file format (see README).  Unknown keys
/// are rejected; errors carry the offending key in the message.
struct ModelFile {
  ModelSpec model;
  Schedule schedule;
};
ModelFile parseModelFile(const std::string& text);
ModelFile loadModelFile(const std::string& path);

}  // namespace blockpress
