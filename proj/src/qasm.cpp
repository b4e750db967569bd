// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include "blockpress/qasm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "blockpress/detail/apply.hpp"
#include "blockpress/tfxy.hpp"

namespace blockpress {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

void g1(GateSeq& s, Gate::Kind k, double theta, int q) {
  s.gates.push_back({k, theta, q, 0});
}
void g2(GateSeq& s, Gate::Kind k, double theta, int q0, int q1) {
  s.gates.push_back({k, theta, q0, q1});
}

// exp(-i(c XX + d YY)) on 0-based qubits (qa, qb), application order.
// Kernel: (rx(pi/2) x rx(pi/2)) . cx . (rx(2c) x rz(2d)) . cx . (rx(-pi/2) x rx(-pi/2)).
void emitXXYYKernel(GateSeq& s, double c, double d, int qa, int qb) {
  g1(s, Gate::Rx, -kPi / 2, qa);
  g1(s, Gate::Rx, -kPi / 2, qb);
  g2(s, Gate::Cx, 0.0, qa, qb);
  g1(s, Gate::Rx, 2 * c, qa);
  g1(s, Gate::Rz, 2 * d, qb);
  g2(s, Gate::Cx, 0.0, qa, qb);
  g1(s, Gate::Rx, kPi / 2, qa);
  g1(s, Gate::Rx, kPi / 2, qb);
}

void emitXX(GateSeq& s, double theta, int qa, int qb, LowerStyle style) {
  if (style == LowerStyle::Rotations) {
    g2(s, Gate::Rxx, 2 * theta, qa, qb);
    return;
  }
  // exp(-i t XX) = (ry(-pi/2) x ry(-pi/2)) exp(-i t ZZ) (ry(pi/2) x ry(pi/2))
  g1(s, Gate::Ry, kPi / 2, qa);
  g1(s, Gate::Ry, kPi / 2, qb);
  g2(s, Gate::Cx, 0.0, qa, qb);
  g1(s, Gate::Rz, 2 * theta, qb);
  g2(s, Gate::Cx, 0.0, qa, qb);
  g1(s, Gate::Ry, -kPi / 2, qa);
  g1(s, Gate::Ry, -kPi / 2, qb);
}

void emitYY(GateSeq& s, double theta, int qa, int qb, LowerStyle style) {
  if (style == LowerStyle::Rotations) {
    g2(s, Gate::Ryy, 2 * theta, qa, qb);
    return;
  }
  g1(s, Gate::Rx, -kPi / 2, qa);
  g1(s, Gate::Rx, -kPi / 2, qb);
  g2(s, Gate::Cx, 0.0, qa, qb);
  g1(s, Gate::Rz, 2 * theta, qb);
  g2(s, Gate::Cx, 0.0, qa, qb);
  g1(s, Gate::Rx, kPi / 2, qa);
  g1(s, Gate::Rx, kPi / 2, qb);
}

// Application-ordered gates of one block.
void emitBlock(GateSeq& s, const Block& b, ModelMapping m, LowerStyle style) {
  const auto [qlo, qhi] = qubitsOf(m, b.index);
  const int qa = qlo - 1, qb = qhi - 1;
  switch (b.kind) {
    case BlockKind::Su2Z:
      g1(s, Gate::Rz, 2 * b.angle(), qa);
      return;
    case BlockKind::Su2XX:
      emitXX(s, b.angle(), qa, qb, style);
      return;
    case BlockKind::Su2YY:
      emitYY(s, b.angle(), qa, qb, style);
      return;
    case BlockKind::Tfxy: {
      const TfxyAngles t = tfxyToAngles({b.s0, b.s1});
      g1(s, Gate::Rz, 2 * t.g, qb);
      g1(s, Gate::Rz, 2 * t.f, qa);
      if (style == LowerStyle::Cnot) {
        emitXXYYKernel(s, t.c, t.d, qa, qb);
      } else {
        g2(s, Gate::Ryy, 2 * t.d, qa, qb);
        g2(s, Gate::Rxx, 2 * t.c, qa, qb);
      }
      g1(s, Gate::Rz, 2 * t.b, qb);
      g1(s, Gate::Rz, 2 * t.a, qa);
      return;
    }
  }
}

}  // namespace

GateSeq lowerToGates(const CompiledCircuit& c, LowerStyle style) {
  GateSeq s;
  s.nQubits = c.nQubits;
  if (c.squares.size() == 2 && style == LowerStyle::Cnot) {
    // the two chains commute blockwise, so same-position XX and YY blocks
    // pair into single two-CNOT kernels
    const auto a = flatten(c.squares[0]);
    const auto b = flatten(c.squares[1]);
    if (a.size() != b.size()) throw std::invalid_argument("chain squares differ in layout");
    for (size_t i = a.size(); i-- > 0;) {
      const Block& ba = a[i];
      const Block& bb = b[i];
      if (ba.index != bb.index) throw std::invalid_argument("chain squares differ in layout");
      const auto [qlo, qhi] = qubitsOf(c.squares[0].mapping, ba.index);
      const double xx = ba.kind == BlockKind::Su2XX ? ba.angle() : bb.angle();
      const double yy = ba.kind == BlockKind::Su2YY ? ba.angle() : bb.angle();
      emitXXYYKernel(s, xx, yy, qlo - 1, qhi - 1);
    }
    return s;
  }
  for (size_t k = c.squares.size(); k-- > 0;) {
    const auto blocks = flatten(c.squares[k]);
    for (size_t i = blocks.size(); i-- > 0;)
      emitBlock(s, blocks[i], c.squares[k].mapping, style);
  }
  return s;
}

GateSeq lowerToGates(const Zigzag& z, int nQubits, LowerStyle style) {
  GateSeq s;
  s.nQubits = nQubits;
  for (size_t i = z.blocks.size(); i-- > 0;) emitBlock(s, z.blocks[i], z.mapping, style);
  return s;
}

namespace {

std::string fmtAngle(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string emitQasm(const GateSeq& g) {
  bool hasRxx = false, hasRyy = false;
  for (const Gate& gate : g.gates) {
    hasRxx |= gate.kind == Gate::Rxx;
    hasRyy |= gate.kind == Gate::Ryy;
  }
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  if (hasRxx)
    os << "gate rxx(theta) a,b { h a; h b; cx a,b; rz(theta) b; cx a,b; h a; h b; }\n";
  if (hasRyy)
    os << "gate ryy(theta) a,b { rx(pi/2) a; rx(pi/2) b; cx a,b; rz(theta) b; cx a,b; "
          "rx(-pi/2) a; rx(-pi/2) b; }\n";
  os << "qreg q[" << g.nQubits << "];\n";
  os << "creg c[" << g.nQubits << "];\n";
  for (const Gate& gate : g.gates) {
    switch (gate.kind) {
      case Gate::Rz: os << "rz(" << fmtAngle(gate.theta) << ") q[" << gate.q0 << "];\n"; break;
      case Gate::Rx: os << "rx(" << fmtAngle(gate.theta) << ") q[" << gate.q0 << "];\n"; break;
      case Gate::Ry: os << "ry(" << fmtAngle(gate.theta) << ") q[" << gate.q0 << "];\n"; break;
      case Gate::Rxx:
        os << "rxx(" << fmtAngle(gate.theta) << ") q[" << gate.q0 << "],q[" << gate.q1
           << "];\n";
        break;
      case Gate::Ryy:
        os << "ryy(" << fmtAngle(gate.theta) << ") q[" << gate.q0 << "],q[" << gate.q1
           << "];\n";
        break;
      case Gate::Cx: os << "cx q[" << gate.q0 << "],q[" << gate.q1 << "];\n"; break;
    }
  }
  return os.str();
}

namespace {

int parseQubit(const std::string& tok) {
  const auto l = tok.find("q["), r = tok.find(']', l);
  if (l == std::string::npos || r == std::string::npos)
    throw std::invalid_argument("qasm reader: bad qubit token '" + tok + "'");
  return std::stoi(tok.substr(l + 2, r - l - 2));
}

}  // namespace

GateSeq parseQasm(const std::string& text) {
  GateSeq g;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.starts_with("OPENQASM") || line.starts_with("include") ||
        line.starts_with("gate ") || line.starts_with("creg") || line.starts_with("//"))
      continue;
    if (line.starts_with("qreg")) {
      const auto l = line.find('['), r = line.find(']');
      g.nQubits = std::stoi(line.substr(l + 1, r - l - 1));
      continue;
    }
    const auto sp = line.find_first_of("( ");
    const std::string name = line.substr(0, sp);
    Gate gate;
    if (name == "cx") {
      gate.kind = Gate::Cx;
      const auto comma = line.find(',');
      gate.q0 = parseQubit(line.substr(2, comma - 2));
      gate.q1 = parseQubit(line.substr(comma + 1));
      g.gates.push_back(gate);
      continue;
    }
    if (name == "rz") gate.kind = Gate::Rz;
    else if (name == "rx") gate.kind = Gate::Rx;
    else if (name == "ry") gate.kind = Gate::Ry;
    else if (name == "rxx") gate.kind = Gate::Rxx;
    else if (name == "ryy") gate.kind = Gate::Ryy;
    else throw std::invalid_argument("qasm reader: unknown gate '" + name + "'");
    const auto open = line.find('('), close = line.find(')');
    gate.theta = std::strtod(line.substr(open + 1, close - open - 1).c_str(), nullptr);
    const std::string args = line.substr(close + 1);
    if (gate.kind == Gate::Rxx || gate.kind == Gate::Ryy) {
      const auto comma = args.find(',');
      gate.q0 = parseQubit(args.substr(0, comma));
      gate.q1 = parseQubit(args.substr(comma + 1));
    } else {
      gate.q0 = parseQubit(args);
    }
    g.gates.push_back(gate);
  }
  return g;
}

GateStats gateStats(const GateSeq& g) {
  GateStats st;
  std::vector<std::int64_t> layer(static_cast<size_t>(g.nQubits), 0);
  for (const Gate& gate : g.gates) {
    switch (gate.kind) {
      case Gate::Rxx:
      case Gate::Ryy: ++st.twoQubitRotations; break;
      case Gate::Cx: ++st.cnots; break;
      default: break;
    }
    const bool two = gate.kind == Gate::Rxx || gate.kind == Gate::Ryy || gate.kind == Gate::Cx;
    const size_t a = static_cast<size_t>(gate.q0), b = static_cast<size_t>(gate.q1);
    if (two) {
      const std::int64_t l = std::max(layer[a], layer[b]) + 1;
      layer[a] = layer[b] = l;
      st.depth = std::max(st.depth, l);
    } else {
      layer[a] += 1;
      st.depth = std::max(st.depth, layer[a]);
    }
  }
  return st;
}

namespace {

template <typename ColAccess>
void applyGate(ColAccess&& col, int n, const Gate& g) {
  switch (g.kind) {
    case Gate::Rz: detail::apply1(col, n, g.q0 + 1, Su2::rz(g.theta / 2)); return;
    case Gate::Rx: detail::apply1(col, n, g.q0 + 1, Su2::rx(g.theta / 2)); return;
    case Gate::Ry: detail::apply1(col, n, g.q0 + 1, detail::ryHalf(g.theta)); return;
    case Gate::Rxx: detail::apply2(col, n, g.q0 + 1, g.q1 + 1, detail::rotXX4(g.theta / 2)); return;
    case Gate::Ryy: detail::apply2(col, n, g.q0 + 1, g.q1 + 1, detail::rotYY4(g.theta / 2)); return;
    case Gate::Cx: detail::apply2(col, n, g.q0 + 1, g.q1 + 1, detail::cxMatrix()); return;
  }
}

}  // namespace

Mat buildUnitary(const GateSeq& g) {
  if (g.nQubits > kUnitaryQubitCap) throw ResourceCapError("dense unitary cap exceeded");
  Mat u = Mat::Identity(1LL << g.nQubits, 1LL << g.nQubits);
  for (const Gate& gate : g.gates)  // application order: left-multiply each
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      auto col = [&u, c](std::int64_t i) -> cplx& { return u(static_cast<Eigen::Index>(i), c); };
      applyGate(col, g.nQubits, gate);
    }
  return u;
}

StateVector evolveState(const StateVector& psi, const GateSeq& g) {
  StateVector out = psi;
  auto col = [&out](std::int64_t i) -> cplx& { return out.amps(static_cast<Eigen::Index>(i)); };
  for (const Gate& gate : g.gates) applyGate(col, out.n, gate);
  return out;
}

}  // namespace blockpress
