// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include <CLI11.hpp>
#include <iostream>

#include "blockpress/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"blockpress: fixed-depth compression of Trotter circuits for "
               "free-fermion spin chains"};
  app.require_subcommand(1);

  blockpress::RunConfig cfg;
  int nOverride = 0;
  double dtOverride = 0.0;
  long stepsOverride = 0;

  auto addModelOpts = [&](CLI::App* c, bool requireModel) {
    auto* m = c->add_option("-m,--model", cfg.modelFile, "model/schedule file");
    if (requireModel) m->required();
    c->add_option("-n", nOverride, "override qubit count (uniform chains only)");
    c->add_option("--dt", dtOverride, "override Trotter step size");
    c->add_option("--steps", stepsOverride, "override Trotter step count");
    c->add_option("--path", cfg.path, "compression path: auto|td|ti")
        ->check(CLI::IsMember({"auto", "td", "ti"}));
  };

  auto* compile = app.add_subcommand("compile", "compress and emit OpenQASM + stats");
  addModelOpts(compile, true);
  compile->add_option("-o,--out", cfg.qasmOut, "QASM output path")->required();
  compile->add_option("--stats", cfg.statsOut, "stats output path");
  compile->add_option("--style", cfg.style, "gate style: cnot|rotations")
      ->check(CLI::IsMember({"cnot", "rotations"}));

  auto* stats = app.add_subcommand("stats", "print gate and operation counts");
  addModelOpts(stats, true);
  stats->add_option("--stats", cfg.statsOut, "also write stats to a file");
  stats->add_option("--style", cfg.style, "gate style: cnot|rotations")
      ->check(CLI::IsMember({"cnot", "rotations"}));

  auto* verify = app.add_subcommand("verify",
                                    "compare compressed vs uncompressed unitaries on random "
                                    "coefficient draws");
  addModelOpts(verify, true);
  verify->add_option("--trials", cfg.trials, "number of random draws");
  verify->add_option("--tol", cfg.tol, "Frobenius tolerance (global phase modded)");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_flag("--corrupt", cfg.corrupt)->group("");  // negative-control test hook

  auto* asp = app.add_subcommand("asp",
                                 "adiabatic preparation of the transverse-field Ising ground "
                                 "state; writes magnetization CSV");
  asp->add_option("-n", cfg.aspN, "qubit count");
  asp->add_option("--field", cfg.aspH, "transverse field h");
  asp->add_option("--jp", cfg.aspJp, "final Ising coupling");
  asp->add_option("-T,--ramp", cfg.aspT, "ramp time");
  asp->add_option("--tail", cfg.aspTail, "constant-Hamiltonian tail after the ramp");
  asp->add_option("--dt", cfg.aspDt, "Trotter step size");
  asp->add_option("--snap", cfg.aspSnap, "snapshot cadence");
  asp->add_option("-o,--out", cfg.csvOut, "CSV output path");
  asp->add_flag("--incremental", cfg.incremental, "reuse the triangle between snapshots");

  CLI11_PARSE(app, argc, argv);

  if (nOverride > 0) cfg.n = nOverride;
  if (dtOverride > 0) cfg.dt = dtOverride;
  if (stepsOverride > 0) cfg.steps = stepsOverride;

  if (compile->parsed()) return blockpress::runCompile(cfg, std::cout);
  if (stats->parsed()) return blockpress::runStats(cfg, std::cout);
  if (verify->parsed()) return blockpress::runVerify(cfg, std::cout);
  if (asp->parsed()) return blockpress::runAsp(cfg, std::cout);
  return blockpress::kExitValidation;
}
