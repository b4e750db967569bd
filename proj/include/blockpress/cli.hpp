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
#include <iosfwd>
#include <optional>
#include <string>

#include "blockpress/engine.hpp"
#include "blockpress/models.hpp"
#include "blockpress/qasm.hpp"

namespace blockpress {

// exit codes: 0 ok, 1 validation, 2 tolerance failure, 3 resource cap
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitTolerance = 2;
inline constexpr int kExitResourceCap = 3;

struct RunConfig {
  std::string modelFile;
  std::string qasmOut;
  std::string statsOut;
  std::string csvOut;
  std::string style = "cnot";  // cnot | rotations
  std::string path = "auto";   // auto | td | ti
  int trials = 10;
  double tol = 1e-9;
  std::uint64_t seed = 12345;
  bool corrupt = false;  // verify-only test hook

  // overrides over the model file
  std::optional<int> n;
  std::optional<double> dt;
  std::optional<long> steps;

  // asp parameters
  int aspN = 5;
  double aspH = -1.0, aspJp = -2.0, aspT = 30.0, aspTail = 10.0, aspDt = 0.05;
  double aspSnap = 0.5;
  bool incremental = false;
};

/// Compression result of one model/schedule: the fixed-depth squares plus the
/// operation report.
struct CompileResult {
  CompiledCircuit circuit;
  CompressionReport report;
  std::string pathUsed;  // "td" or "ti"
};

CompileResult compressModel(const ModelSpec& m, const Schedule& s, const std::string& path);

int runCompile(const RunConfig& cfg, std::ostream& log);
int runVerify(const RunConfig& cfg, std::ostream& log);
int runStats(const RunConfig& cfg, std::ostream& log);
int runAsp(const RunConfig& cfg, std::ostream& log);

}  // namespace blockpress
