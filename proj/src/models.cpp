// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/models.hpp"

#include <algorithm>
#include <stdexcept>

#include "blockpress/tfxy.hpp"

namespace blockpress {

std::string familyName(Family f) {
  switch (f) {
    case Family::Kitaev: return "kitaev";
    case Family::XY: return "xy";
    case Family::Tfim: return "tfim";
    case Family::Tfxy: return "tfxy";
    case Family::GenTfxy: return "gen-tfxy";
  }
  return "?";
}

Family familyFromName(const std::string& s) {
  if (s == "kitaev") return Family::Kitaev;
  if (s == "xy") return Family::XY;
  if (s == "tfim") return Family::Tfim;
  if (s == "tfxy") return Family::Tfxy;
  if (s == "gen-tfxy") return Family::GenTfxy;
  throw std::invalid_argument("unknown family '" + s + "'");
}

namespace {

void requireLen(const std::vector<double>& v, size_t len, const char* name) {
  if (v.size() != len)
    throw std::invalid_argument(std::string("channel '") + name + "' must have length " +
                                std::to_string(len));
}

void requireEmpty(const std::vector<double>& v, const char* name) {
  if (!v.empty())
    throw std::invalid_argument(std::string("channel '") + name +
                                "' is not used by this family");
}

void validateCouplings(Family f, int n, const Couplings& c) {
  const size_t nb = static_cast<size_t>(n - 1), ns = static_cast<size_t>(n);
  switch (f) {
    case Family::Kitaev:
      requireLen(c.bond, nb, "bond");
      requireEmpty(c.xx, "xx"); requireEmpty(c.yy, "yy");
      requireEmpty(c.xy, "xy"); requireEmpty(c.yx, "yx"); requireEmpty(c.z, "z");
      break;
    case Family::XY:
      requireLen(c.xx, nb, "xx"); requireLen(c.yy, nb, "yy");
      requireEmpty(c.bond, "bond"); requireEmpty(c.xy, "xy");
      requireEmpty(c.yx, "yx"); requireEmpty(c.z, "z");
      break;
    case Family::Tfim:
      requireLen(c.xx, nb, "xx"); requireLen(c.z, ns, "z");
      requireEmpty(c.bond, "bond"); requireEmpty(c.yy, "yy");
      requireEmpty(c.xy, "xy"); requireEmpty(c.yx, "yx");
      break;
    case Family::Tfxy:
      requireLen(c.xx, nb, "xx"); requireLen(c.yy, nb, "yy"); requireLen(c.z, ns, "z");
      requireEmpty(c.bond, "bond"); requireEmpty(c.xy, "xy"); requireEmpty(c.yx, "yx");
      break;
    case Family::GenTfxy:
      requireLen(c.xx, nb, "xx"); requireLen(c.yy, nb, "yy");
      requireLen(c.xy, nb, "xy"); requireLen(c.yx, nb, "yx"); requireLen(c.z, ns, "z");
      requireEmpty(c.bond, "bond");
      break;
  }
}

}  // namespace

void validate(const ModelSpec& m) {
  if (m.n < 2) throw std::invalid_argument("n must be >= 2");
  validateCouplings(m.family, m.n, m.c);
}

namespace {

void broadcastOne(std::vector<double>& v, size_t len) {
  if (v.size() == 1 && len > 1) v.assign(len, v[0]);
}

void broadcastCouplings(Family f, int n, Couplings& c) {
  const size_t nb = static_cast<size_t>(n - 1), ns = static_cast<size_t>(n);
  broadcastOne(c.bond, nb);
  broadcastOne(c.xx, nb);
  broadcastOne(c.yy, nb);
  broadcastOne(c.xy, nb);
  broadcastOne(c.yx, nb);
  broadcastOne(c.z, ns);
  (void)f;
}

}  // namespace

void broadcastUniform(ModelSpec& m, Schedule& s) {
  broadcastCouplings(m.family, m.n, m.c);
  for (Sample& smp : s.samples) broadcastCouplings(m.family, m.n, smp.c);
}

void validate(const ModelSpec& m, const Schedule& s) {
  if (m.n < 2) throw std::invalid_argument("n must be >= 2");
  if (s.dt <= 0.0) throw std::invalid_argument("dt must be > 0");
  if (s.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (s.kind == ScheduleKind::Constant) {
    validateCouplings(m.family, m.n, m.c);
    return;
  }
  if (s.samples.empty()) throw std::invalid_argument("time-dependent schedule needs samples");
  for (size_t i = 0; i < s.samples.size(); ++i) {
    validateCouplings(m.family, m.n, s.samples[i].c);
    if (i > 0 && !(s.samples[i].t > s.samples[i - 1].t))
      throw std::invalid_argument("sample times must be strictly increasing");
  }
}

namespace {

double lerp(double a, double b, double w) { return a + (b - a) * w; }

std::vector<double> lerpVec(const std::vector<double>& a, const std::vector<double>& b,
                            double w) {
  std::vector<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = lerp(a[i], b[i], w);
  return r;
}

Couplings lerpCouplings(const Couplings& a, const Couplings& b, double w) {
  Couplings r;
  r.bond = lerpVec(a.bond, b.bond, w);
  r.xx = lerpVec(a.xx, b.xx, w);
  r.yy = lerpVec(a.yy, b.yy, w);
  r.xy = lerpVec(a.xy, b.xy, w);
  r.yx = lerpVec(a.yx, b.yx, w);
  r.z = lerpVec(a.z, b.z, w);
  return r;
}

}  // namespace

Couplings coefficientsAt(const ModelSpec& m, const Schedule& s, double t) {
  if (s.kind == ScheduleKind::Constant) return m.c;
  const auto& sm = s.samples;
  if (t <= sm.front().t) return sm.front().c;
  if (s.kind == ScheduleKind::Tabulated) {
    size_t k = 0;
    while (k + 1 < sm.size() && sm[k + 1].t <= t) ++k;
    return sm[k].c;
  }
  if (t >= sm.back().t) return sm.back().c;
  size_t k = 0;
  while (sm[k + 1].t < t) ++k;
  const double w = (t - sm[k].t) / (sm[k + 1].t - sm[k].t);
  return lerpCouplings(sm[k].c, sm[k + 1].c, w);
}

namespace {

Zigzag kitaevZigzag(ModelMapping mapping, int n, const std::vector<double>& perBond,
                    double dt) {
  std::vector<Block> blocks;
  blocks.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i < n; ++i)
    blocks.push_back(Block::su2(mapping, i, dt * perBond[static_cast<size_t>(i - 1)]));
  return zigzagFromBlocks(mapping, blocks, n - 1);
}

}  // namespace

std::vector<Zigzag> trotterStep(const ModelSpec& m, const Couplings& at, double dt) {
  validateCouplings(m.family, m.n, at);
  const int n = m.n;
  switch (m.family) {
    case Family::Kitaev:
      return {kitaevZigzag(ModelMapping::KitaevOddXX, n, at.bond, dt)};
    case Family::XY: {
      // H splits into two commuting Kitaev chains: odd-X (XX on odd bonds,
      // YY on even) and even-X (the mirror).
      std::vector<double> oddX(static_cast<size_t>(n - 1)), evenX(static_cast<size_t>(n - 1));
      for (int i = 1; i < n; ++i) {
        const size_t k = static_cast<size_t>(i - 1);
        oddX[k] = (i % 2 == 1) ? at.xx[k] : at.yy[k];
        evenX[k] = (i % 2 == 1) ? at.yy[k] : at.xx[k];
      }
      return {kitaevZigzag(ModelMapping::KitaevOddXX, n, oddX, dt),
              kitaevZigzag(ModelMapping::KitaevOddYY, n, evenX, dt)};
    }
    case Family::Tfim: {
      std::vector<Block> blocks;
      blocks.reserve(static_cast<size_t>(2 * n - 1));
      for (int q = 1; q <= n; ++q)
        blocks.push_back(Block::su2(ModelMapping::Tfim, 2 * q - 1,
                                    dt * at.z[static_cast<size_t>(q - 1)]));
      for (int q = 1; q < n; ++q)
        blocks.push_back(Block::su2(ModelMapping::Tfim, 2 * q,
                                    dt * at.xx[static_cast<size_t>(q - 1)]));
      return {zigzagFromBlocks(ModelMapping::Tfim, blocks, 2 * n - 1)};
    }
    case Family::Tfxy:
    case Family::GenTfxy: {
      // Block i carries the bond exponential exp(-i dt (a XX + b YY + c XY
      // + d YX)), evaluated sector-wise in closed form.  The site Z rotations
      // ride as leading factors on the odd blocks (sites i and i+1); for odd
      // n the last site's Z rides the final even block.  With this placement
      // an embedded TFIM step telescopes to its native layer order exactly.
      std::vector<Block> blocks;
      blocks.reserve(static_cast<size_t>(n - 1));
      const bool gen = m.family == Family::GenTfxy;
      for (int i = 1; i < n; ++i) {
        const size_t k = static_cast<size_t>(i - 1);
        const double a = at.xx[k], b = at.yy[k];
        const double c = gen ? at.xy[k] : 0.0, d = gen ? at.yx[k] : 0.0;
        // sector generators: minus = (a-b) x + (c+d) y, plus = (a+b) x - (c-d) y
        auto expXY = [&](double xc, double yc) {
          const double r = std::hypot(xc, yc);
          const double co = std::cos(dt * r), si = r > 0 ? std::sin(dt * r) / r : dt;
          Su2 u;
          u.m00 = {co, 0.0};
          u.m11 = {co, 0.0};
          u.m01 = {-si * yc, -si * xc};
          u.m10 = {si * yc, -si * xc};
          return u;
        };
        TfxyPayload full;
        full.minus = expXY(a - b, c + d);
        full.plus = expXY(a + b, -(c - d));
        double zLower = 0.0, zUpper = 0.0;
        if (i % 2 == 1) {
          zLower = dt * at.z[k];
          zUpper = dt * at.z[k + 1];
        } else if (i == n - 1) {
          zUpper = dt * at.z[static_cast<size_t>(n - 1)];
        }
        if (zLower != 0.0 || zUpper != 0.0) {
          const TfxyPayload lo = tfxyZLower(zLower), up = tfxyZUpper(zUpper);
          full.minus = lo.minus * up.minus * full.minus;
          full.plus = lo.plus * up.plus * full.plus;
        }
        blocks.push_back(tfxyBlock(i, full));
      }
      return {zigzagFromBlocks(ModelMapping::Tfxy, blocks, n - 1)};
    }
  }
  throw std::logic_error("bad family");
}

std::vector<SubChain> trotterCircuit(const ModelSpec& m, const Schedule& s) {
  validate(m, s);
  std::vector<SubChain> chains;
  for (long k = 1; k <= s.steps; ++k) {
    const double tk = (k - 1) * s.dt;
    std::vector<Zigzag> zs = trotterStep(m, coefficientsAt(m, s, tk), s.dt);
    if (chains.empty()) {
      chains.resize(zs.size());
      for (size_t i = 0; i < zs.size(); ++i) {
        chains[i].mapping = zs[i].mapping;
        chains[i].nQubits = m.n;
        chains[i].steps.reserve(static_cast<size_t>(s.steps));
      }
    }
    for (size_t i = 0; i < zs.size(); ++i) chains[i].steps.push_back(std::move(zs[i]));
  }
  return chains;
}

ModelSpec embedAsTfxy(const ModelSpec& m) {
  validate(m);
  ModelSpec r;
  r.family = Family::Tfxy;
  r.n = m.n;
  const size_t nb = static_cast<size_t>(m.n - 1), ns = static_cast<size_t>(m.n);
  r.c.xx.assign(nb, 0.0);
  r.c.yy.assign(nb, 0.0);
  r.c.z.assign(ns, 0.0);
  switch (m.family) {
    case Family::Kitaev:
      for (size_t k = 0; k < nb; ++k)
        (k % 2 == 0 ? r.c.xx : r.c.yy)[k] = m.c.bond[k];  // bond k is index k+1
      break;
    case Family::XY:
      r.c.xx = m.c.xx;
      r.c.yy = m.c.yy;
      break;
    case Family::Tfim:
      r.c.xx = m.c.xx;
      r.c.z = m.c.z;
      break;
    default:
      throw std::invalid_argument("embedAsTfxy expects a kitaev, xy, or tfim model");
  }
  return r;
}

ModelSpec fromFreeFermion(const FreeFermionSpec& f) {
  const size_t nb = f.hop.size();
  if (f.pair.size() != nb || f.chem.size() != nb + 1)
    throw std::invalid_argument("free-fermion array lengths inconsistent");
  ModelSpec m;
  m.family = Family::GenTfxy;
  m.n = static_cast<int>(nb + 1);
  m.c.xx.resize(nb);
  m.c.yy.resize(nb);
  m.c.xy.resize(nb);
  m.c.yx.resize(nb);
  m.c.z.resize(nb + 1);
  for (size_t k = 0; k < nb; ++k) {
    const double ar = f.hop[k].real(), ai = f.hop[k].imag();
    const double br = f.pair[k].real(), bi = f.pair[k].imag();
    m.c.xx[k] = ar / 2 - br / 2;
    m.c.yy[k] = ar / 2 + br / 2;
    m.c.xy[k] = -ai / 2 + bi / 2;
    m.c.yx[k] = ai / 2 + bi / 2;
  }
  for (size_t k = 0; k <= nb; ++k) m.c.z[k] = -f.chem[k] / 2;
  return m;
}

FreeFermionSpec toFreeFermion(const ModelSpec& m) {
  if (m.family != Family::GenTfxy && m.family != Family::Tfxy)
    throw std::invalid_argument("toFreeFermion expects a (generalized) TFXY model");
  validate(m);
  const size_t nb = static_cast<size_t>(m.n - 1);
  FreeFermionSpec f;
  f.hop.resize(nb);
  f.pair.resize(nb);
  f.chem.resize(nb + 1);
  for (size_t k = 0; k < nb; ++k) {
    const double a = m.c.xx[k], b = m.c.yy[k];
    const double c = m.family == Family::GenTfxy ? m.c.xy[k] : 0.0;
    const double d = m.family == Family::GenTfxy ? m.c.yx[k] : 0.0;
    f.hop[k] = {a + b, d - c};
    f.pair[k] = {b - a, c + d};
  }
  for (size_t k = 0; k <= nb; ++k) f.chem[k] = -2.0 * m.c.z[k];
  return f;
}

}  // namespace blockpress
