// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "blockpress/sim.hpp"

namespace blockpress {

namespace {

double nowMs() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void resizeUniform(std::vector<double>& v, size_t len, const char* name) {
  if (v.empty() || v.size() == len) return;
  for (double x : v)
    if (x != v[0])
      throw std::invalid_argument(std::string("override of n needs uniform channel '") + name +
                                  "'");
  v.assign(len, v[0]);
}

void resizeCouplings(Couplings& c, int n) {
  const size_t nb = static_cast<size_t>(n - 1), ns = static_cast<size_t>(n);
  resizeUniform(c.bond, nb, "bond");
  resizeUniform(c.xx, nb, "xx");
  resizeUniform(c.yy, nb, "yy");
  resizeUniform(c.xy, nb, "xy");
  resizeUniform(c.yx, nb, "yx");
  resizeUniform(c.z, ns, "z");
}

ModelFile loadWithOverrides(const RunConfig& cfg) {
  if (cfg.modelFile.empty()) throw std::invalid_argument("missing model file (-m)");
  ModelFile f = loadModelFile(cfg.modelFile);
  if (cfg.n) {
    f.model.n = *cfg.n;
    resizeCouplings(f.model.c, f.model.n);
    for (Sample& s : f.schedule.samples) resizeCouplings(s.c, f.model.n);
  }
  if (cfg.dt) f.schedule.dt = *cfg.dt;
  if (cfg.steps) f.schedule.steps = *cfg.steps;
  validate(f.model, f.schedule);
  return f;
}

LowerStyle styleFromName(const std::string& s) {
  if (s == "cnot") return LowerStyle::Cnot;
  if (s == "rotations") return LowerStyle::Rotations;
  throw std::invalid_argument("style must be 'cnot' or 'rotations'");
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

std::string statsText(const ModelSpec& m, const Schedule& s, const CompileResult& r,
                      const std::string& style, const GateStats& gs) {
  std::ostringstream os;
  os << "model = " << familyName(m.family) << "\n";
  os << "n = " << m.n << "\n";
  os << "steps = " << s.steps << "\n";
  os << "path = " << r.pathUsed << "\n";
  os << "style = " << style << "\n";
  os << "cnots = " << gs.cnots << "\n";
  os << "rotations = " << gs.twoQubitRotations << "\n";
  os << "depth = " << gs.depth << "\n";
  os << "turnovers = " << r.report.ops.turnovers << "\n";
  os << "fusions = " << r.report.ops.fusions << "\n";
  os << "eff_turnovers = " << r.report.ops.effTurnovers << "\n";
  os << "eff_fusions = " << r.report.ops.effFusions << "\n";
  os << "wall_ms = " << fmt(r.report.wallMs, "%.3f") << "\n";
  return os.str();
}

}  // namespace

CompileResult compressModel(const ModelSpec& m, const Schedule& s, const std::string& path) {
  validate(m, s);
  std::string effective = path;
  if (path == "auto") effective = s.kind == ScheduleKind::Constant ? "ti" : "td";
  if (effective == "ti" && s.kind != ScheduleKind::Constant)
    throw std::invalid_argument("time-independent path requires a constant schedule");
  if (effective != "ti" && effective != "td")
    throw std::invalid_argument("path must be 'auto', 'td', or 'ti'");

  CompileResult out;
  out.pathUsed = effective;
  out.circuit.nQubits = m.n;
  out.report.model = familyName(m.family);
  out.report.n = m.n;
  out.report.r = s.steps;

  const double t0 = nowMs();
  OpCounter ops;
  if (effective == "ti") {
    for (Zigzag& z : trotterStep(m, coefficientsAt(m, s, 0.0), s.dt)) {
      Triangle t = compressTimeIndependent(z, s.steps, ops);
      out.circuit.squares.push_back(triangleToSquare(t, ops));
    }
  } else {
    for (SubChain& ch : trotterCircuit(m, s)) {
      Triangle t = compressTimeDependent(ch.steps, ops);
      out.circuit.squares.push_back(triangleToSquare(t, ops));
    }
  }
  out.report.ops = ops;
  out.report.wallMs = nowMs() - t0;
  return out;
}

int runCompile(const RunConfig& cfg, std::ostream& log) {
  try {
    const ModelFile f = loadWithOverrides(cfg);
    const CompileResult r = compressModel(f.model, f.schedule, cfg.path);
    const GateSeq g = lowerToGates(r.circuit, styleFromName(cfg.style));
    const std::string qasm = emitQasm(g);
    const GateStats gs = gateStats(g);
    if (!cfg.qasmOut.empty()) writeFile(cfg.qasmOut, qasm);
    const std::string st = statsText(f.model, f.schedule, r, cfg.style, gs);
    if (!cfg.statsOut.empty()) writeFile(cfg.statsOut, st);
    log << st;
    return kExitOk;
  } catch (const ResourceCapError& e) {
    log << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int runStats(const RunConfig& cfg, std::ostream& log) {
  RunConfig c = cfg;
  c.qasmOut.clear();
  return runCompile(c, log);
}

namespace {

Couplings randomCouplings(const Couplings& shape, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  Couplings r = shape;
  for (auto* ch : {&r.bond, &r.xx, &r.yy, &r.xy, &r.yx, &r.z})
    for (double& v : *ch) v = dist(rng);
  return r;
}

}  // namespace

int runVerify(const RunConfig& cfg, std::ostream& log) {
  try {
    const ModelFile f = loadWithOverrides(cfg);
    if (f.model.n > kUnitaryQubitCap) {
      log << "error: verify needs n <= " << kUnitaryQubitCap << "\n";
      return kExitResourceCap;
    }
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      ModelSpec m = f.model;
      Schedule s = f.schedule;
      if (s.kind == ScheduleKind::Constant) {
        m.c = randomCouplings(m.c, rng);
      } else {
        for (Sample& smp : s.samples) smp.c = randomCouplings(smp.c, rng);
      }
      CompileResult r = compressModel(m, s, cfg.path);
      if (cfg.corrupt && !r.circuit.squares.empty()) {
        Block& b = r.circuit.squares[0].cascades.back().blocks.back();
        b.s0 = b.s0 * Su2::rx(0.1);
      }
      Mat compressed = Mat::Identity(1LL << m.n, 1LL << m.n);
      for (const Square& sq : r.circuit.squares) compressed = buildUnitary(sq, m.n) * compressed;
      const Mat reference = buildUnitary(trotterCircuit(m, s), m.n);
      const double d = phaseDistance(compressed, reference);
      worst = std::max(worst, d);
      log << "trial " << trial << ": distance = " << fmt(d, "%.3e") << "\n";
    }
    log << "max distance = " << fmt(worst, "%.3e") << " (tolerance " << fmt(cfg.tol, "%.1e")
        << ")\n";
    return worst <= cfg.tol ? kExitOk : kExitTolerance;
  } catch (const ResourceCapError& e) {
    log << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

namespace {

struct AspSetup {
  ModelSpec tfim;
  Schedule ramp;      // TFIM-channel samples, for the exact columns
  Schedule tfxyRamp;  // same ramp with the embedded TFXY channels
};

AspSetup makeAsp(const RunConfig& cfg) {
  AspSetup a;
  a.tfim.family = Family::Tfim;
  a.tfim.n = cfg.aspN;
  const size_t nb = static_cast<size_t>(cfg.aspN - 1), ns = static_cast<size_t>(cfg.aspN);
  auto at = [&](double J) {
    Couplings c;
    c.xx.assign(nb, J);
    c.z.assign(ns, cfg.aspH);
    return c;
  };
  a.tfim.c = at(0.0);
  a.ramp.kind = ScheduleKind::PiecewiseLinear;
  a.ramp.dt = cfg.aspDt;
  a.ramp.samples = {{0.0, at(0.0)}, {cfg.aspT, at(cfg.aspJp)},
                    {cfg.aspT + cfg.aspTail, at(cfg.aspJp)}};
  a.tfxyRamp = a.ramp;
  for (Sample& s : a.tfxyRamp.samples) s.c.yy.assign(nb, 0.0);
  return a;
}

}  // namespace

int runAsp(const RunConfig& cfg, std::ostream& log) {
  try {
    if (cfg.aspN > kUnitaryQubitCap)
      throw ResourceCapError("asp simulation needs n <= " + std::to_string(kUnitaryQubitCap));
    if (cfg.aspT <= 0 || cfg.aspDt <= 0 || cfg.aspSnap <= 0 || cfg.aspTail < 0)
      throw std::invalid_argument("asp ramp parameters must be positive");
    const AspSetup a = makeAsp(cfg);
    const ModelSpec tfxy = embedAsTfxy(a.tfim);
    const int n = cfg.aspN;

    // initial state: ground state of h * sum Z_i
    const std::uint64_t upLabel = cfg.aspH <= 0 ? 0 : (1ULL << n) - 1;
    const StateVector psi0 = StateVector::basis(n, upLabel);

    const GroundState target = groundState(a.tfim, coefficientsAt(a.tfim, a.ramp, cfg.aspT));
    const double mTarget = magnetization(target.psi);

    std::ostringstream csv;
    csv << "t,m_compressed,m_exact_instantaneous_gs,m_target_final\n";

    const double tEnd = cfg.aspT + cfg.aspTail;
    GateStats firstStats;
    bool haveStats = false;

    Triangle acc;          // incremental accumulator
    long accSteps = 0;
    OpCounter ops;

    for (long k = 0;; ++k) {
      const double ts = k * cfg.aspSnap;
      if (ts > tEnd + 1e-9) break;
      const long steps = std::lround(ts / cfg.aspDt);

      double mC;
      GateStats gs{};
      if (steps == 0) {
        mC = magnetization(psi0);
      } else {
        Schedule s = a.tfxyRamp;
        s.steps = steps;
        Triangle tri;
        if (cfg.incremental) {
          std::vector<SubChain> chains = trotterCircuit(tfxy, s);
          std::vector<Zigzag>& zs = chains[0].steps;
          if (accSteps == 0) {
            acc = compressTimeDependent(zs, ops);
          } else {
            std::vector<Zigzag> fresh(zs.begin() + accSteps, zs.end());
            Triangle upper = compressTimeDependent(fresh, ops);
            mergeTriangles(upper, acc, ops);
            acc = upper;
          }
          accSteps = steps;
          tri = acc;
        } else {
          std::vector<SubChain> chains = trotterCircuit(tfxy, s);
          tri = compressTimeDependent(chains[0].steps, ops);
        }
        const Square sq = triangleToSquare(tri, ops);
        const StateVector psi = evolveState(psi0, sq);
        mC = magnetization(psi);
        gs = gateStats(lowerToGates({n, {sq}}, LowerStyle::Cnot));
        if (!haveStats) {
          firstStats = gs;
          haveStats = true;
        } else if (gs.cnots != firstStats.cnots) {
          throw std::logic_error("snapshot gate counts changed");
        }
      }

      const GroundState inst = groundState(a.tfim, coefficientsAt(a.tfim, a.ramp, ts));
      csv << fmt(ts, "%.6g") << "," << fmt(mC, "%.12g") << ","
          << fmt(magnetization(inst.psi), "%.12g") << "," << fmt(mTarget, "%.12g") << "\n";
    }

    if (!cfg.csvOut.empty()) writeFile(cfg.csvOut, csv.str());
    log << csv.str();
    if (haveStats)
      log << "# snapshot circuit: " << firstStats.cnots << " cnots, depth " << firstStats.depth
          << "\n";
    return kExitOk;
  } catch (const ResourceCapError& e) {
    log << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace blockpress
