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

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fflow/circuit.hpp"
#include "fflow/encodings.hpp"
#include "fflow/flow_sets.hpp"
#include "fflow/synthesis.hpp"
#include "fflow/tableau.hpp"

namespace fflow {

// Plan cannot be compiled (e.g. components overlap after encoding).
struct InadmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Literature reference depths for the VC comparison; not compiled here.
inline constexpr int kXYZReferenceDepth = 44;
inline constexpr int kAllToAllReferenceDepth = 6;

struct CompilationPlan {
  std::string encoding = "vc";
  Strategy strategy = Strategy::Line;
  double dt = 0.1;
  double J = 1.0;
  std::vector<std::string> order;  // time order of flow-set labels; empty = default
};

namespace detail {

// Merge per-component circuits section by section (sections are runs of equal layer tags),
// so that components with different single-qubit prefixes keep their entangling layers aligned.
inline Circuit merge_sections(int n, const std::vector<Circuit>& parts) {
  std::vector<std::string> order;
  std::vector<std::map<std::string, std::vector<Layer>>> split(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    // Section key = tag plus the index of its run, so a tag that recurs (ladder, undo) stays separate.
    std::vector<std::string> local;
    std::map<std::string, int> runs;
    std::string prev;
    bool first = true;
    for (const auto& l : parts[p].layers()) {
      if (first || l.tag != prev) {
        local.push_back(l.tag + "#" + std::to_string(runs[l.tag]++));
        prev = l.tag;
        first = false;
      }
      split[p][local.back()].push_back(l);
    }
    // Insert this part's tag sequence into the global order, keeping relative order.
    std::size_t at = 0;
    for (const auto& t : local) {
      auto it = std::find(order.begin(), order.end(), t);
      if (it == order.end()) {
        order.insert(order.begin() + static_cast<long>(at), t);
        ++at;
      } else {
        std::size_t pos = static_cast<std::size_t>(it - order.begin());
        if (pos < at) throw std::logic_error("merge_sections: inconsistent section order");
        at = pos + 1;
      }
    }
  }
  Circuit out(n);
  for (const auto& t : order) {
    std::vector<Circuit> seg;
    for (auto& s : split) {
      Circuit c(n);
      for (auto& l : s[t]) c.add_layer(l);
      seg.push_back(c);
    }
    out.append(parallel_merge(n, seg));
  }
  return out;
}

inline std::string prefix_tags(Circuit& c, const std::string& prefix) {
  for (auto& l : c.layers()) l.tag = prefix + (l.tag.empty() ? "" : ":" + l.tag);
  return prefix;
}

}  // namespace detail

struct FactorInfo {
  std::string label;
  std::string realized_by;
  std::vector<std::string> categories;  // per component
  int native_depth = 0;
  int cx_depth = 0;
  int components = 0;
};

struct FlowSetFactor {
  Circuit circuit;
  FactorInfo info;
  std::vector<ComponentEncoder> encoders;
};

inline void check_admissible(const Encoding& enc, const FlowSet& fs) {
  auto fr = verify_flow_property(fs, enc.n_modes());
  if (!fr.ok()) throw InadmissibleError("flow set " + fs.label + " is not a flow set: " + fr.violations.front());
  auto ov = verify_nonoverlap_after_encoding(fs, enc);
  if (!ov.ok())
    throw InadmissibleError("encoding " + enc.name() + " with flow set " + fs.label + ": " + ov.overlaps.front());
}

// exp(-i J dt sum_{jk in fs} T^_jk): encoder, R^Z(s * 2c * J * dt) at each landing qubit, inverse encoder.
inline FlowSetFactor compile_flow_set_factor(const Encoding& enc, const FlowSet& fs, double J, double dt) {
  check_admissible(enc, fs);
  int n = enc.n_qubits();
  FlowSetFactor f;
  f.info.label = fs.label;
  f.info.realized_by = "direct";
  std::vector<Circuit> encs;
  Layer rot{{}, fs.label + ":rotate"};
  for (const auto& cc : fs.components) {
    EncoderCategory cat = resolve_category(enc, cc);
    ComponentEncoder ce = synthesize_component_encoder(cat, cc, enc);
    for (std::size_t i = 0; i < ce.order.size(); ++i) {
      const Landing& l = ce.landings[i];
      rot.gates.push_back(Gate::rz(l.qubit, l.sign * 2.0 * enc.transfer_coeff * J * dt));
    }
    encs.push_back(ce.circuit);
    f.info.categories.push_back(to_string(cat));
    f.encoders.push_back(std::move(ce));
  }
  Circuit e = detail::merge_sections(n, encs);
  detail::prefix_tags(e, fs.label);
  Circuit c(n);
  c.append(e);
  c.add_layer(rot);
  c.append(e.inverse());
  f.circuit = c;
  f.info.components = static_cast<int>(fs.components.size());
  f.info.native_depth = cx_depth(c, DepthMode::NativeTwoQubit);
  f.info.cx_depth = cx_depth(c, DepthMode::CXDecomposed);
  return f;
}

inline Circuit compile_flow_set(const Encoding& enc, const FlowSet& fs, double J, double dt) {
  return compile_flow_set_factor(enc, fs, J, dt).circuit;
}

// Physical-qubit R^Z(+-pi/2) layer B with B S_jk B^dag = S_kj for every edge of `from`, or nothing.
// Returns the angle of B (the layer applied last); the first layer is its inverse.
inline std::optional<double> orientation_rotation(const Encoding& enc, const FlowSet& from) {
  int n = enc.n_qubits();
  for (double sgn : {1.0, -1.0}) {
    Circuit b(n);
    std::vector<Gate> l;
    for (int q : enc.layout.physical)
      if (q >= 0) l.push_back(sgn > 0 ? Gate::s(q) : Gate::sdg(q));
    b.add_layer(l);
    bool ok = !l.empty();
    for (const auto& e : from.edges()) {
      if (!ok) break;
      ok = conjugate_pauli(b, enc.transfer(e.source, e.target)) == enc.transfer(e.target, e.source);
    }
    if (ok) return sgn * std::numbers::pi / 2;
  }
  return std::nullopt;
}

inline Circuit rz_layer(const Encoding& enc, double angle, const std::string& tag) {
  Circuit c(enc.n_qubits());
  std::vector<Gate> l;
  for (int q : enc.layout.physical)
    if (q >= 0) l.push_back(Gate::rz(q, angle));
  c.add_layer(l, tag);
  return c;
}

// Factor for the reversed flow set built from `base` (the factor of `from`) by the rotation layers.
inline FlowSetFactor reversed_by_rotation(const Encoding& enc, const FlowSetFactor& base, const FlowSet& from,
                                          const std::string& label) {
  auto angle = orientation_rotation(enc, from);
  if (!angle) throw std::logic_error("no single-qubit rotation relates the orientations of " + from.label);
  FlowSetFactor f;
  f.circuit = Circuit(enc.n_qubits());
  f.circuit.append(rz_layer(enc, -*angle, label + ":orient"));
  Circuit body = base.circuit;
  for (auto& l : body.layers()) l.tag = label + l.tag.substr(base.info.label.size());
  f.circuit.append(body);
  f.circuit.append(rz_layer(enc, *angle, label + ":orient"));
  f.info = base.info;
  f.info.label = label;
  f.info.realized_by = "R^Z(" + std::string(*angle > 0 ? "+" : "-") + "pi/2) conjugation of " + base.info.label;
  f.encoders = base.encoders;
  return f;
}

struct DepthReport {
  std::string encoding;
  std::string strategy;
  int cx_depth_native = 0;
  int cx_depth_cx = 0;
  int cx_layers = 0;
  int swap_layers = 0;
  int two_qubit_gates = 0;
  int rotations = 0;
  int qubits = 0;
  int fermions = 0;
  double ratio = 0.0;
  std::vector<FactorInfo> per_flow_set;
  std::vector<std::string> notes;
};

inline DepthReport depth_report(const Circuit& c, const std::string& encoding, const std::string& strategy, int n_modes,
                                const std::vector<FactorInfo>& factors = {}) {
  DepthReport r;
  r.encoding = encoding;
  r.strategy = strategy;
  r.cx_depth_native = cx_depth(c, DepthMode::NativeTwoQubit);
  r.cx_depth_cx = cx_depth(c, DepthMode::CXDecomposed);
  auto lc = layer_counts(c);
  r.cx_layers = lc.cx_layers;
  r.swap_layers = lc.swap_layers;
  r.two_qubit_gates = lc.two_qubit_gates;
  r.rotations = lc.rotations;
  r.qubits = c.n_qubits();
  r.fermions = n_modes;
  r.ratio = n_modes ? static_cast<double>(r.qubits) / n_modes : 0.0;
  r.per_flow_set = factors;
  return r;
}

struct TrotterCircuit {
  Circuit circuit;
  std::vector<FactorInfo> factors;
  DepthReport report;
};

inline std::vector<std::string> default_order(Strategy s, const std::vector<FlowSet>& sets) {
  if (s == Strategy::Line) return {"EA", "WE", "SO", "NO"};
  std::vector<std::string> o;
  for (const auto& f : sets) o.push_back(f.label);
  return o;
}

inline TrotterCircuit compile_trotter_step(const Encoding& enc, const CompilationPlan& plan) {
  const Lattice& lat = enc.lattice;
  auto sets = flow_sets_for(plan.strategy, lat);
  std::map<std::string, FlowSet> by_label;
  for (auto& f : sets) by_label[f.label] = f;
  auto order = plan.order.empty() ? default_order(plan.strategy, sets) : plan.order;
  for (const auto& l : order)
    if (!by_label.count(l)) throw std::invalid_argument("unknown flow-set label '" + l + "'");
  // Admissibility of every set before any synthesis.
  for (const auto& f : sets)
    if (!f.components.empty()) check_admissible(enc, f);

  bool vc_line = enc.kind == EncodingKind::VC && plan.strategy == Strategy::Line;
  std::map<std::string, FlowSetFactor> built;
  auto factor = [&](const std::string& label) -> const FlowSetFactor& {
    auto it = built.find(label);
    if (it != built.end()) return it->second;
    static const std::map<std::string, std::string> base_of = {{"WE", "EA"}, {"SO", "NO"}};
    FlowSetFactor f;
    if (vc_line && base_of.count(label) && !by_label.at(base_of.at(label)).components.empty()) {
      const std::string& b = base_of.at(label);
      auto base = built.count(b) ? built.at(b) : compile_flow_set_factor(enc, by_label.at(b), plan.J, plan.dt);
      built.emplace(b, base);
      f = reversed_by_rotation(enc, base, by_label.at(b), label);
    } else {
      f = compile_flow_set_factor(enc, by_label.at(label), plan.J, plan.dt);
    }
    return built.emplace(label, std::move(f)).first->second;
  };

  TrotterCircuit tc;
  tc.circuit = Circuit(enc.n_qubits());
  for (const auto& label : order) {
    if (by_label.at(label).components.empty()) continue;
    const FlowSetFactor& f = factor(label);
    tc.circuit.append(f.circuit);
    tc.factors.push_back(f.info);
  }
  tc.report = depth_report(tc.circuit, enc.name(), to_string(plan.strategy), enc.n_modes(), tc.factors);
  if (enc.kind == EncodingKind::KWDual)
    for (const auto& fi : tc.factors)
      tc.report.notes.push_back(fi.label + " factor entangling depth " + std::to_string(fi.native_depth) +
                                (fi.native_depth == 0 ? " (weight-1 set)" : " (CZ-layer set)"));
  return tc;
}

// `steps` repetitions of one Trotter step (dt per step).
inline TrotterCircuit compile_trotter(const Encoding& enc, const CompilationPlan& plan, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  TrotterCircuit one = compile_trotter_step(enc, plan);
  TrotterCircuit tc = one;
  for (int s = 1; s < steps; ++s) tc.circuit.append(one.circuit);
  tc.report = depth_report(tc.circuit, enc.name(), to_string(plan.strategy), enc.n_modes(), one.factors);
  tc.report.notes = one.report.notes;
  return tc;
}

// ---- naive baseline: one rotation gadget per transfer term ----

// exp(-i theta/2 P) for a Hermitian Pauli P: basis change, CX ladder, R^Z on the last qubit, undo.
inline Circuit pauli_rotation_gadget(const PauliString& p, double theta, const std::string& tag) {
  int n = p.n_qubits();
  if (!p.hermitian()) throw std::invalid_argument("pauli_rotation_gadget: non-Hermitian Pauli");
  auto sup = p.support();
  Circuit c(n);
  if (sup.empty()) return c;
  std::map<int, std::vector<GateKind>> words;
  for (int q : sup) {
    char l = p.letter(q);
    if (l == 'X') words[q] = {GateKind::H};
    if (l == 'Y') words[q] = {GateKind::Sdg, GateKind::H};
  }
  Circuit basis(n);
  detail::append_local_words(basis, words, tag + ":basis");
  Circuit ladder(n);
  for (std::size_t i = 0; i + 1 < sup.size(); ++i) ladder.add_layer({Gate::cx(sup[i], sup[i + 1])}, tag + ":ladder");
  double sign = p.phase() == 0 ? 1.0 : -1.0;
  c.append(basis);
  c.append(ladder);
  c.add_layer({Gate::rz(sup.back(), sign * theta)}, tag + ":rotate");
  c.append(ladder.inverse());
  c.append(basis.inverse());
  return c;
}

inline TrotterCircuit compile_petal_baseline(const Encoding& enc, double J, double dt) {
  int n = enc.n_qubits();
  auto sets = petal_flow_sets(enc.lattice);
  TrotterCircuit tc;
  tc.circuit = Circuit(n);
  double theta = 2.0 * enc.transfer_coeff * J * dt;
  for (const auto& fs : sets) {
    std::vector<Circuit> parts;
    for (const auto& cc : fs.components) {
      Circuit c(n);
      int g = 0;
      for (const auto& e : cc.edges) {
        Circuit gad = pauli_rotation_gadget(enc.transfer(e.source, e.target), theta, fs.label + ":g" + std::to_string(g++));
        c.append(gad);
      }
      parts.push_back(c);
    }
    Circuit round = detail::merge_sections(n, parts);
    FactorInfo fi;
    fi.label = fs.label;
    fi.realized_by = "rotation gadgets";
    fi.components = static_cast<int>(fs.components.size());
    fi.native_depth = cx_depth(round, DepthMode::NativeTwoQubit);
    fi.cx_depth = cx_depth(round, DepthMode::CXDecomposed);
    tc.circuit.append(round);
    tc.factors.push_back(fi);
  }
  tc.report = depth_report(tc.circuit, enc.name(), "petal-baseline", enc.n_modes(), tc.factors);
  if (enc.kind == EncodingKind::VC)
    tc.report.notes.push_back("reference (not compiled): XYZ scheme depth " + std::to_string(kXYZReferenceDepth) +
                              ", all-to-all scheme depth " + std::to_string(kAllToAllReferenceDepth));
  return tc;
}

// Encoded Hamiltonian sum_jk J * c * S_jk as (Pauli, coefficient) terms.
inline std::vector<std::pair<PauliString, double>> encoded_hamiltonian(const Encoding& enc, double J) {
  std::vector<std::pair<PauliString, double>> h;
  for (const auto& e : directed_edges(enc.lattice))
    h.emplace_back(enc.transfer(e.source, e.target), J * enc.transfer_coeff);
  return h;
}

inline std::vector<std::pair<PauliString, double>> encoded_flow_set_terms(const Encoding& enc, const FlowSet& fs,
                                                                          double J) {
  std::vector<std::pair<PauliString, double>> h;
  for (const auto& e : fs.edges()) h.emplace_back(enc.transfer(e.source, e.target), J * enc.transfer_coeff);
  return h;
}

}  // namespace fflow
