// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace blockpress;
using namespace bptest;

namespace {

Couplings randomCouplings(Family f, int n) {
  Couplings c;
  const size_t nb = static_cast<size_t>(n - 1), ns = static_cast<size_t>(n);
  auto fill = [&](std::vector<double>& v, size_t len) {
    v.resize(len);
    for (double& x : v) x = uniform(-2, 2);
  };
  switch (f) {
    case Family::Kitaev: fill(c.bond, nb); break;
    case Family::XY: fill(c.xx, nb); fill(c.yy, nb); break;
    case Family::Tfim: fill(c.xx, nb); fill(c.z, ns); break;
    case Family::Tfxy: fill(c.xx, nb); fill(c.yy, nb); fill(c.z, ns); break;
    case Family::GenTfxy:
      fill(c.xx, nb); fill(c.yy, nb); fill(c.xy, nb); fill(c.yx, nb); fill(c.z, ns);
      break;
  }
  return c;
}

ModelSpec randomModel(Family f, int n) {
  ModelSpec m;
  m.family = f;
  m.n = n;
  m.c = randomCouplings(f, n);
  return m;
}

Mat stepProduct(const ModelSpec& m, const Couplings& at, double dt) {
  Mat u = Mat::Identity(1LL << m.n, 1LL << m.n);
  for (const Zigzag& z : trotterStep(m, at, dt)) u = u * productNaive(z.blocks, z.mapping, m.n);
  return u;
}

// independent many-body spectrum from the Bogoliubov-de Gennes matrix
std::vector<double> bdgSpectrum(const FreeFermionSpec& f) {
  const int n = static_cast<int>(f.chem.size());
  Mat A = Mat::Zero(n, n), B = Mat::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    A(i, i + 1) = f.hop[static_cast<size_t>(i)];
    A(i + 1, i) = std::conj(f.hop[static_cast<size_t>(i)]);
    B(i + 1, i) = std::conj(f.pair[static_cast<size_t>(i)]);
    B(i, i + 1) = -std::conj(f.pair[static_cast<size_t>(i)]);
  }
  for (int i = 0; i < n; ++i) A(i, i) = f.chem[static_cast<size_t>(i)];
  Mat M(2 * n, 2 * n);
  M << A, B, -B.conjugate(), -A.conjugate();
  Eigen::SelfAdjointEigenSolver<Mat> es(M);
  std::vector<double> eps;
  for (int k = n; k < 2 * n; ++k) eps.push_back(es.eigenvalues()(k));
  double e0 = 0.5 * A.trace().real();
  for (double e : eps) e0 -= 0.5 * e;
  std::vector<double> spec;
  for (int mask = 0; mask < (1 << n); ++mask) {
    double e = e0;
    for (int k = 0; k < n; ++k)
      if (mask & (1 << k)) e += eps[static_cast<size_t>(k)];
    spec.push_back(e);
  }
  std::sort(spec.begin(), spec.end());
  return spec;
}

}  // namespace

TEST_CASE("kitaev Trotter step carries dt-scaled bond angles in zigzag order") {
  ModelSpec m;
  m.family = Family::Kitaev;
  m.n = 5;
  m.c.bond = {0.3, -0.7, 1.1, 0.5};  // a, b, c, d
  const double dt = 0.1;
  const auto zs = trotterStep(m, m.c, dt);
  REQUIRE(zs.size() == 1);
  const auto& b = zs[0].blocks;
  REQUIRE(b.size() == 4);
  CHECK(b[0].index == 1);
  CHECK(b[0].kind == BlockKind::Su2XX);
  CHECK(b[0].angle() == doctest::Approx(dt * 0.3));
  CHECK(b[1].index == 3);
  CHECK(b[1].angle() == doctest::Approx(dt * 1.1));
  CHECK(b[2].index == 2);
  CHECK(b[2].kind == BlockKind::Su2YY);
  CHECK(b[2].angle() == doctest::Approx(dt * -0.7));
  CHECK(b[3].index == 4);
  CHECK(b[3].angle() == doctest::Approx(dt * 0.5));
}

TEST_CASE("dt = 0 gives an all-identity step") {
  for (const Family f : {Family::Kitaev, Family::XY, Family::Tfim, Family::Tfxy,
                         Family::GenTfxy}) {
    const ModelSpec m = randomModel(f, 4);
    for (const Zigzag& z : trotterStep(m, m.c, 0.0))
      for (const Block& b : z.blocks) CHECK(b.isIdentity(1e-15));
  }
}

TEST_CASE("TFIM step equals the ordered exponential product") {
  const ModelSpec m = randomModel(Family::Tfim, 4);
  const auto zs = trotterStep(m, m.c, 0.17);
  REQUIRE(zs.size() == 1);
  // oracle: explicit product of the per-term exponentials, Z layer then XX
  Mat ref = Mat::Identity(16, 16);
  for (int q = 1; q <= 4; ++q)
    ref = ref * embedNaive(rotOp(pauli('Z'), 0.17 * m.c.z[static_cast<size_t>(q - 1)]), q, 1, 4);
  for (int q = 1; q < 4; ++q)
    ref = ref * embedNaive(rotOp(kron2(pauli('X'), pauli('X')),
                                 0.17 * m.c.xx[static_cast<size_t>(q - 1)]),
                           q, 2, 4);
  CHECK(frob(buildUnitary(zs[0], 4), ref) < 1e-12);
}

TEST_CASE("XY model splits into two commuting Kitaev chains") {
  const ModelSpec m = randomModel(Family::XY, 6);
  Mat hOdd = Mat::Zero(1 << 6, 1 << 6), hEven = hOdd;
  for (int i = 1; i < 6; ++i) {
    const Mat xx = embedNaive(kron2(pauli('X'), pauli('X')), i, 2, 6);
    const Mat yy = embedNaive(kron2(pauli('Y'), pauli('Y')), i, 2, 6);
    const double a = m.c.xx[static_cast<size_t>(i - 1)], b = m.c.yy[static_cast<size_t>(i - 1)];
    if (i % 2 == 1) {
      hOdd += a * xx;
      hEven += b * yy;
    } else {
      hEven += a * xx;
      hOdd += b * yy;
    }
  }
  CHECK(frob(hOdd * hEven, hEven * hOdd) < 1e-12);

  const auto zs = trotterStep(m, m.c, 0.13);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0].mapping == ModelMapping::KitaevOddXX);
  CHECK(zs[1].mapping == ModelMapping::KitaevOddYY);
  // the two chain circuits commute as whole unitaries
  const Mat a = productNaive(zs[0].blocks, zs[0].mapping, 6);
  const Mat b = productNaive(zs[1].blocks, zs[1].mapping, 6);
  CHECK(frob(a * b, b * a) < 1e-12);
  // together they cover every bond's XX and YY angle exactly once
  for (int i = 1; i < 6; ++i) {
    const Block& ba = *std::find_if(zs[0].blocks.begin(), zs[0].blocks.end(),
                                    [&](const Block& blk) { return blk.index == i; });
    const Block& bb = *std::find_if(zs[1].blocks.begin(), zs[1].blocks.end(),
                                    [&](const Block& blk) { return blk.index == i; });
    const double xxAngle = ba.kind == BlockKind::Su2XX ? ba.angle() : bb.angle();
    const double yyAngle = ba.kind == BlockKind::Su2YY ? ba.angle() : bb.angle();
    CHECK(ba.kind != bb.kind);
    CHECK(xxAngle == doctest::Approx(0.13 * m.c.xx[static_cast<size_t>(i - 1)]));
    CHECK(yyAngle == doctest::Approx(0.13 * m.c.yy[static_cast<size_t>(i - 1)]));
  }
}

TEST_CASE("constant schedule yields identical steps") {
  const ModelSpec m = randomModel(Family::Tfim, 3);
  Schedule s;
  s.kind = ScheduleKind::Constant;
  s.dt = 0.2;
  s.steps = 3;
  const auto chains = trotterCircuit(m, s);
  REQUIRE(chains.size() == 1);
  REQUIRE(chains[0].steps.size() == 3);
  const Mat u0 = buildUnitary(chains[0].steps[0], 3);
  for (int k = 1; k < 3; ++k) CHECK(frob(buildUnitary(chains[0].steps[k], 3), u0) == 0.0);
}

TEST_CASE("piecewise-linear ramp evaluates at the left endpoint of each step") {
  ModelSpec m;
  m.family = Family::Tfim;
  m.n = 3;
  Schedule s;
  s.kind = ScheduleKind::PiecewiseLinear;
  s.dt = 0.05;
  s.steps = 600;
  auto at = [&](double J) {
    Couplings c;
    c.xx.assign(2, J);
    c.z.assign(3, -1.0);
    return c;
  };
  s.samples = {{0.0, at(0.0)}, {30.0, at(-2.0)}};
  for (const long k : {1L, 100L, 600L}) {
    const double tk = (k - 1) * s.dt;
    const Couplings c = coefficientsAt(m, s, tk);
    const double expected = -2.0 * tk / 30.0;  // independent linear interpolation
    CHECK(c.xx[0] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(c.z[1] == -1.0);
  }
}

TEST_CASE("tabulated schedules hold the last sample at or before t") {
  ModelSpec m;
  m.family = Family::Kitaev;
  m.n = 3;
  Schedule s;
  s.kind = ScheduleKind::Tabulated;
  s.dt = 1.0;
  s.steps = 4;
  auto at = [&](double v) {
    Couplings c;
    c.bond.assign(2, v);
    return c;
  };
  s.samples = {{0.0, at(1.0)}, {2.0, at(5.0)}};
  CHECK(coefficientsAt(m, s, 0.0).bond[0] == 1.0);
  CHECK(coefficientsAt(m, s, 1.9).bond[0] == 1.0);
  CHECK(coefficientsAt(m, s, 2.0).bond[0] == 5.0);
  CHECK(coefficientsAt(m, s, 3.5).bond[0] == 5.0);
}

TEST_CASE("TFIM embeds as TFXY with an empty YY channel and half the height") {
  const ModelSpec m = randomModel(Family::Tfim, 5);
  const ModelSpec e = embedAsTfxy(m);
  CHECK(e.family == Family::Tfxy);
  for (double v : e.c.yy) CHECK(v == 0.0);
  const auto zTfim = trotterStep(m, m.c, 0.21)[0];
  const auto zTfxy = trotterStep(e, e.c, 0.21)[0];
  CHECK(zTfim.height == 2 * 5 - 1);
  CHECK(zTfxy.height == 5 - 1);
  CHECK(frob(buildUnitary(zTfim, 5), buildUnitary(zTfxy, 5)) < 1e-12);
}

TEST_CASE("kitaev and xy embed as TFXY with the same step unitary") {
  for (const Family f : {Family::Kitaev, Family::XY}) {
    const ModelSpec m = randomModel(f, 4);
    const ModelSpec e = embedAsTfxy(m);
    CHECK(frob(stepProduct(m, m.c, 0.11), stepProduct(e, e.c, 0.11)) < 1e-12);
  }
}

TEST_CASE("free-fermion dictionary: hopping-only chains have no XY/YX channels") {
  FreeFermionSpec f;
  f.hop = {cplx(0.8, 0.0), cplx(-0.3, 0.0)};
  f.pair = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  f.chem = {0.0, 0.0, 0.0};
  const ModelSpec m = fromFreeFermion(f);
  CHECK(m.family == Family::GenTfxy);
  for (double v : m.c.xy) CHECK(v == 0.0);
  for (double v : m.c.yx) CHECK(v == 0.0);
  for (double v : m.c.z) CHECK(v == 0.0);
  CHECK(m.c.xx[0] == doctest::Approx(0.4));
  CHECK(m.c.yy[0] == doctest::Approx(0.4));
}

TEST_CASE("free-fermion dictionary: chemical potential maps to pure transverse field") {
  FreeFermionSpec f;
  f.hop = {cplx(0, 0)};
  f.pair = {cplx(0, 0)};
  f.chem = {1.4, -0.6};
  const ModelSpec m = fromFreeFermion(f);
  CHECK(m.c.z[0] == doctest::Approx(-0.7));
  CHECK(m.c.z[1] == doctest::Approx(0.3));
  for (double v : m.c.xx) CHECK(v == 0.0);
}

TEST_CASE("free-fermion round trip is exact") {
  for (int i = 0; i < 20; ++i) {
    const ModelSpec m = randomModel(Family::GenTfxy, 5);
    const FreeFermionSpec f = toFreeFermion(m);
    const ModelSpec back = fromFreeFermion(f);
    for (size_t k = 0; k < m.c.xx.size(); ++k) {
      CHECK(back.c.xx[k] == doctest::Approx(m.c.xx[k]).epsilon(1e-14));
      CHECK(back.c.yy[k] == doctest::Approx(m.c.yy[k]).epsilon(1e-14));
      CHECK(back.c.xy[k] == doctest::Approx(m.c.xy[k]).epsilon(1e-14));
      CHECK(back.c.yx[k] == doctest::Approx(m.c.yx[k]).epsilon(1e-14));
    }
    for (size_t k = 0; k < m.c.z.size(); ++k)
      CHECK(back.c.z[k] == doctest::Approx(m.c.z[k]).epsilon(1e-14));
  }
}

TEST_CASE("spin spectrum matches the fermionic single-particle construction") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4;
    FreeFermionSpec f;
    for (int i = 0; i + 1 < n; ++i) {
      f.hop.push_back({uniform(-1, 1), uniform(-1, 1)});
      f.pair.push_back({uniform(-1, 1), uniform(-1, 1)});
    }
    for (int i = 0; i < n; ++i) f.chem.push_back(uniform(-1, 1));
    const ModelSpec m = fromFreeFermion(f);
    const Mat h = hamiltonianMatrix(m, m.c);
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    double shift = 0.0;  // the dictionary drops sum(gamma)/2
    for (double g : f.chem) shift += g / 2;
    const std::vector<double> ref = bdgSpectrum(f);
    for (int k = 0; k < es.eigenvalues().size(); ++k)
      CHECK(std::abs(es.eigenvalues()(k) + shift - ref[static_cast<size_t>(k)]) < 1e-9);
  }
}

TEST_CASE("central property: compressed circuits equal the ordered product") {
  for (const Family f : {Family::Kitaev, Family::XY, Family::Tfim, Family::Tfxy,
                         Family::GenTfxy}) {
    const int n = 5;
    const ModelSpec m = randomModel(f, n);
    Schedule s;
    s.kind = ScheduleKind::Constant;
    s.dt = 0.09;
    s.steps = 7;
    const auto chains = trotterCircuit(m, s);
    Mat compressed = Mat::Identity(1 << n, 1 << n);
    OpCounter ops;
    for (const SubChain& ch : chains) {
      const Triangle t = compressTimeDependent(ch.steps, ops);
      compressed = buildUnitary(triangleToSquare(t, ops), n) * compressed;
    }
    CHECK(phaseDistance(compressed, buildUnitary(chains, n)) < 1e-9);
  }
}

TEST_CASE("TFIM native and TFXY-embedded compression give the same unitary") {
  const int n = 4;
  const ModelSpec m = randomModel(Family::Tfim, n);
  Schedule s;
  s.kind = ScheduleKind::Constant;
  s.dt = 0.15;
  s.steps = 6;
  OpCounter ops;
  auto compress = [&](const ModelSpec& spec) {
    const auto chains = trotterCircuit(spec, s);
    const Triangle t = compressTimeDependent(chains[0].steps, ops);
    return buildUnitary(triangleToSquare(t, ops), n);
  };
  CHECK(phaseDistance(compress(m), compress(embedAsTfxy(m))) < 1e-9);
}

TEST_CASE("model file parsing round-trips and rejects bad input") {
  const std::string good = R"(# a TFIM ramp
family = tfim
n = 3
dt = 0.05
steps = 10
schedule = piecewise-linear
sample t=0 xx=0,0 z=-1,-1,-1
sample t=30 xx=-2,-2 z=-1,-1,-1
)";
  const ModelFile f = parseModelFile(good);
  CHECK(f.model.family == Family::Tfim);
  CHECK(f.model.n == 3);
  CHECK(f.schedule.kind == ScheduleKind::PiecewiseLinear);
  REQUIRE(f.schedule.samples.size() == 2);
  CHECK(f.schedule.samples[1].c.xx[0] == -2.0);

  CHECK_THROWS_WITH_AS(parseModelFile("family = tfim\nn = 3\nfoo = 1\nxx = 0 0\nz = 1 1 1\n"),
                       doctest::Contains("foo"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parseModelFile("family = tfim\nn = 3\nxx = 0 0 0 0\nz = 1 1 1\n"),
                       doctest::Contains("xx"), std::invalid_argument);
  CHECK_THROWS_AS(parseModelFile("n = 3\nxx = 0 0\nz = 1 1 1\n"), std::invalid_argument);
}

TEST_CASE("length-1 channels broadcast to uniform chains") {
  const ModelFile f = parseModelFile("family = tfxy\nn = 5\nxx = -2\nyy = 0.5\nz = -1\n");
  CHECK(f.model.c.xx == std::vector<double>(4, -2.0));
  CHECK(f.model.c.yy == std::vector<double>(4, 0.5));
  CHECK(f.model.c.z == std::vector<double>(5, -1.0));
}
