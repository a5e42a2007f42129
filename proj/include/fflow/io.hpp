// Copyright 2026 The fflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fflow/circuit.hpp"
#include "fflow/trotter.hpp"

namespace fflow {

using json = nlohmann::ordered_json;

inline GateKind gate_kind_from_string(const std::string& s) {
  static const std::map<std::string, GateKind> m = {
      {"cx", GateKind::CX},   {"cz", GateKind::CZ},   {"swap", GateKind::SWAP}, {"h", GateKind::H},
      {"s", GateKind::S},     {"sdg", GateKind::Sdg}, {"rx", GateKind::RX},     {"ry", GateKind::RY},
      {"rz", GateKind::RZ},   {"permute", GateKind::PermuteV}};
  auto it = m.find(s);
  if (it == m.end()) throw std::invalid_argument("unknown gate '" + s + "'");
  return it->second;
}

inline json gate_to_json(const Gate& g) {
  json j;
  j["kind"] = to_string(g.kind);
  if (g.kind == GateKind::PermuteV) {
    j["targets"] = g.targets;
    j["perm"] = g.perm;
  } else {
    j["qubits"] = g.qubits();
  }
  if (g.rotation()) j["angle"] = g.angle;
  return j;
}

inline Gate gate_from_json(const json& j) {
  Gate g{gate_kind_from_string(j.at("kind").get<std::string>())};
  if (g.kind == GateKind::PermuteV) {
    g.targets = j.at("targets").get<std::vector<int>>();
    g.perm = j.at("perm").get<std::vector<int>>();
    return g;
  }
  auto q = j.at("qubits").get<std::vector<int>>();
  if (q.size() != (g.two_qubit() ? 2u : 1u)) throw std::invalid_argument("gate arity mismatch");
  g.q0 = q[0];
  if (q.size() > 1) g.q1 = q[1];
  if (g.rotation()) g.angle = j.at("angle").get<double>();
  return g;
}

inline json circuit_to_json(const Circuit& c) {
  json j;
  j["n_qubits"] = c.n_qubits();
  json layers = json::array();
  for (const auto& l : c.layers()) {
    json jl;
    jl["tag"] = l.tag;
    json gs = json::array();
    for (const auto& g : l.gates) gs.push_back(gate_to_json(g));
    jl["gates"] = gs;
    layers.push_back(jl);
  }
  j["layers"] = layers;
  return j;
}

inline Circuit circuit_from_json(const json& j) {
  Circuit c(j.at("n_qubits").get<int>());
  for (const auto& jl : j.at("layers")) {
    Layer l;
    l.tag = jl.value("tag", "");
    for (const auto& g : jl.at("gates")) l.gates.push_back(gate_from_json(g));
    c.add_layer(l);
  }
  return c;
}

inline std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

// OpenQASM 2.0 subset; every layer opens with a "// layer <tag>" marker so the layering survives a round trip.
inline std::string circuit_to_qasm(const Circuit& in) {
  Circuit c = lower_permutations(in);
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n_qubits() << "];\n";
  for (const auto& l : c.layers()) {
    os << "// layer " << l.tag << "\n";
    for (const auto& g : l.gates) {
      os << to_string(g.kind);
      if (g.rotation()) os << "(" << format_angle(g.angle) << ")";
      os << " q[" << g.q0 << "]";
      if (g.two_qubit()) os << ",q[" << g.q1 << "]";
      os << ";\n";
    }
  }
  return os.str();
}

inline Circuit circuit_from_qasm(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  static const std::regex qreg(R"(^qreg\s+q\[(\d+)\];$)");
  static const std::regex gate(R"(^(\w+)(?:\(([^)]*)\))?\s+q\[(\d+)\](?:\s*,\s*q\[(\d+)\])?;$)");
  Circuit c;
  bool have_reg = false, open = false;
  Layer cur;
  auto flush = [&] {
    if (open) c.add_layer(cur);
    cur = Layer{};
  };
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::smatch m;
    if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) continue;
    if (std::regex_match(line, m, qreg)) {
      c = Circuit(std::stoi(m[1]));
      have_reg = true;
    } else if (line.rfind("// layer", 0) == 0) {
      flush();
      open = true;
      cur.tag = line.size() > 9 ? line.substr(9) : "";
    } else if (line.rfind("//", 0) == 0) {
      continue;
    } else if (std::regex_match(line, m, gate)) {
      if (!have_reg) throw std::invalid_argument("qasm: gate before qreg");
      if (!open) {
        open = true;
        cur = Layer{};
      }
      Gate g{gate_kind_from_string(m[1])};
      g.q0 = std::stoi(m[3]);
      if (m[4].matched) g.q1 = std::stoi(m[4]);
      if (g.rotation()) g.angle = std::stod(m[2]);
      if (g.two_qubit() != m[4].matched) throw std::invalid_argument("qasm: gate arity mismatch in '" + line + "'");
      cur.gates.push_back(g);
    } else {
      throw std::invalid_argument("qasm: unsupported line '" + line + "'");
    }
  }
  flush();
  return c;
}

inline json factor_to_json(const FactorInfo& f) {
  json j;
  j["label"] = f.label;
  j["realized_by"] = f.realized_by;
  j["components"] = f.components;
  j["cx_depth_native"] = f.native_depth;
  j["cx_depth_cx"] = f.cx_depth;
  j["categories"] = f.categories;
  return j;
}

inline json report_to_json(const DepthReport& r) {
  json j;
  j["encoding"] = r.encoding;
  j["strategy"] = r.strategy;
  j["cx_depth"] = r.cx_depth_native;
  j["cx_depth_native"] = r.cx_depth_native;
  j["cx_depth_cx_decomposed"] = r.cx_depth_cx;
  j["cx_layers"] = r.cx_layers;
  j["swap_layers"] = r.swap_layers;
  j["two_qubit_gates"] = r.two_qubit_gates;
  j["rotations"] = r.rotations;
  j["qubits"] = r.qubits;
  j["fermions"] = r.fermions;
  j["ratio"] = r.ratio;
  json per = json::array();
  for (const auto& f : r.per_flow_set) per.push_back(factor_to_json(f));
  j["per_flow_set"] = per;
  j["notes"] = r.notes;
  return j;
}

inline std::string sweep_to_csv(const std::vector<std::pair<double, double>>& rows) {
  std::ostringstream os;
  os << "dt,error\n";
  for (auto [dt, e] : rows) os << format_angle(dt) << "," << format_angle(e) << "\n";
  return os.str();
}

}  // namespace fflow
