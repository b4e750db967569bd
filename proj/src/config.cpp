// Copyright 2026 The blockpress developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "blockpress/models.hpp"

namespace blockpress {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<double> parseNumbers(const std::string& s, const std::string& key) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream is(t);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad number '" + tok + "' in field '" + key + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("field '" + key + "' has no values");
  return out;
}

std::vector<double>* channelSlot(Couplings& c, const std::string& key) {
  if (key == "bond") return &c.bond;
  if (key == "xx") return &c.xx;
  if (key == "yy") return &c.yy;
  if (key == "xy") return &c.xy;
  if (key == "yx") return &c.yx;
  if (key == "z") return &c.z;
  return nullptr;
}

// "sample t=0 xx=1 2 3 z=0 0 0 0"
Sample parseSampleLine(const std::string& body) {
  Sample s;
  bool haveT = false;
  std::istringstream is(body);
  std::string tok;
  std::string curKey;
  std::string curVals;
  auto flush = [&]() {
    if (curKey.empty()) return;
    if (curKey == "t") {
      s.t = parseNumbers(curVals, "t").at(0);
      haveT = true;
    } else if (auto* slot = channelSlot(s.c, curKey)) {
      *slot = parseNumbers(curVals, curKey);
    } else {
      throw std::invalid_argument("unknown sample field '" + curKey + "'");
    }
    curKey.clear();
    curVals.clear();
  };
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      flush();
      curKey = tok.substr(0, eq);
      curVals = tok.substr(eq + 1);
    } else {
      curVals += " " + tok;
    }
  }
  flush();
  if (!haveT) throw std::invalid_argument("sample line missing 't='");
  return s;
}

}  // namespace

ModelFile parseModelFile(const std::string& text) {
  ModelFile f;
  bool haveFamily = false, haveN = false;
  std::istringstream is(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(is, line)) {
    ++lineNo;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("sample")) {
      f.schedule.samples.push_back(parseSampleLine(line.substr(6)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineNo) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "family") {
      f.model.family = familyFromName(val);
      haveFamily = true;
    } else if (key == "n") {
      f.model.n = static_cast<int>(parseNumbers(val, key).at(0));
      haveN = true;
    } else if (key == "dt") {
      f.schedule.dt = parseNumbers(val, key).at(0);
    } else if (key == "steps") {
      f.schedule.steps = static_cast<long>(parseNumbers(val, key).at(0));
    } else if (key == "schedule") {
      if (val == "constant") f.schedule.kind = ScheduleKind::Constant;
      else if (val == "piecewise-linear") f.schedule.kind = ScheduleKind::PiecewiseLinear;
      else if (val == "tabulated") f.schedule.kind = ScheduleKind::Tabulated;
      else throw std::invalid_argument("unknown schedule kind '" + val + "'");
    } else if (auto* slot = channelSlot(f.model.c, key)) {
      *slot = parseNumbers(val, key);
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  if (!haveFamily) throw std::invalid_argument("missing required key 'family'");
  if (!haveN) throw std::invalid_argument("missing required key 'n'");
  broadcastUniform(f.model, f.schedule);
  validate(f.model, f.schedule);
  return f;
}

ModelFile loadModelFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseModelFile(ss.str());
}

}  // namespace blockpress
