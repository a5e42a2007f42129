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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fflow {

enum class GateKind { CX, CZ, SWAP, H, S, Sdg, RX, RY, RZ, PermuteV };

inline const char* to_string(GateKind k) {
  switch (k) {
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::PermuteV: return "permute";
  }
  return "?";
}

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = -1, q1 = -1;
  double angle = 0.0;
  std::vector<int> perm;  // PermuteV only: qubit perm[i] moves to position i of `targets`
  std::vector<int> targets;

  Gate(GateKind k = GateKind::H, int a = -1, int b = -1, double theta = 0.0) : kind(k), q0(a), q1(b), angle(theta) {}

  static Gate cx(int c, int t) { return {GateKind::CX, c, t}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, a, b}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b}; }
  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate s(int q) { return {GateKind::S, q}; }
  static Gate sdg(int q) { return {GateKind::Sdg, q}; }
  static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
  static Gate ry(int q, double a) { return {GateKind::RY, q, -1, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
  // Cyclic or arbitrary relabeling of the listed qubits: the state on targets[perm[i]] moves to targets[i].
  static Gate permute(std::vector<int> targets, std::vector<int> perm) {
    Gate g{GateKind::PermuteV};
    g.targets = std::move(targets);
    g.perm = std::move(perm);
    return g;
  }

  bool two_qubit() const { return kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::SWAP; }
  bool rotation() const { return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ; }
  bool clifford() const { return !rotation(); }

  std::vector<int> qubits() const {
    if (kind == GateKind::PermuteV) return targets;
    if (two_qubit()) return {q0, q1};
    return {q0};
  }

  Gate inverse() const {
    Gate g = *this;
    switch (kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ: g.angle = -angle; break;
      case GateKind::PermuteV: {
        std::vector<int> inv(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
        g.perm = inv;
        break;
      }
      default: break;
    }
    return g;
  }

  bool operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && angle == o.angle && perm == o.perm && targets == o.targets;
  }
};

struct Layer {
  std::vector<Gate> gates;
  std::string tag;

  bool entangling() const {
    return std::any_of(gates.begin(), gates.end(), [](const Gate& g) { return g.two_qubit() || g.kind == GateKind::PermuteV; });
  }
  bool has(GateKind k) const {
    return std::any_of(gates.begin(), gates.end(), [k](const Gate& g) { return g.kind == k; });
  }
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n) : n_(n) {}

  int n_qubits() const { return n_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<Layer>& layers() { return layers_; }
  bool empty() const { return layers_.empty(); }

  void add_layer(Layer l) {
    std::vector<char> used(n_, 0);
    for (const auto& g : l.gates)
      for (int q : g.qubits()) {
        if (q < 0 || q >= n_) throw std::out_of_range("gate qubit " + std::to_string(q) + " out of range");
        if (used[q]) throw std::invalid_argument("qubit " + std::to_string(q) + " used twice in one layer");
        used[q] = 1;
      }
    if (!l.gates.empty()) layers_.push_back(std::move(l));
  }
  void add_layer(std::vector<Gate> gates, std::string tag = "") { add_layer(Layer{std::move(gates), std::move(tag)}); }

  void append(const Circuit& o) {
    if (o.n_ != n_) throw std::invalid_argument("append: qubit count mismatch");
    for (const auto& l : o.layers_) layers_.push_back(l);
  }

  Circuit inverse() const {
    Circuit c(n_);
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
      Layer l;
      l.tag = it->tag;
      for (const auto& g : it->gates) l.gates.push_back(g.inverse());
      c.layers_.push_back(l);
    }
    return c;
  }

  void retag(const std::string& tag) {
    for (auto& l : layers_) l.tag = tag;
  }

  bool clifford() const {
    for (const auto& l : layers_)
      for (const auto& g : l.gates)
        if (!g.clifford()) return false;
    return true;
  }

  std::size_t gate_count() const {
    std::size_t c = 0;
    for (const auto& l : layers_) c += l.gates.size();
    return c;
  }

 private:
  int n_ = 0;
  std::vector<Layer> layers_;
};

// Run circuits on disjoint qubits side by side, layer i with layer i.
inline Circuit parallel_merge(int n, const std::vector<Circuit>& parts) {
  Circuit out(n);
  std::size_t depth = 0;
  for (const auto& p : parts) depth = std::max(depth, p.layers().size());
  for (std::size_t i = 0; i < depth; ++i) {
    Layer l;
    for (const auto& p : parts)
      if (i < p.layers().size()) {
        const Layer& src = p.layers()[i];
        if (l.tag.empty()) l.tag = src.tag;
        l.gates.insert(l.gates.end(), src.gates.begin(), src.gates.end());
      }
    out.add_layer(l);
  }
  return out;
}

// Odd-even transposition sort: nearest-neighbor SWAP layers realizing a PermuteV gate.
inline std::vector<std::vector<std::pair<int, int>>> swap_network(const Gate& g) {
  int m = static_cast<int>(g.targets.size());
  // Position i currently holds the state that must end at position dest[i].
  std::vector<int> dest(m);
  for (int i = 0; i < m; ++i) dest[g.perm[i]] = i;
  std::vector<std::vector<std::pair<int, int>>> rounds;
  for (int r = 0; r < m; ++r) {
    std::vector<std::pair<int, int>> sw;
    for (int i = r % 2; i + 1 < m; i += 2)
      if (dest[i] > dest[i + 1]) {
        std::swap(dest[i], dest[i + 1]);
        sw.emplace_back(g.targets[i], g.targets[i + 1]);
      }
    if (!sw.empty()) rounds.push_back(sw);
    if (std::is_sorted(dest.begin(), dest.end())) break;
  }
  return rounds;
}

inline Circuit lower_permutations(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (const auto& l : c.layers()) {
    if (!l.has(GateKind::PermuteV)) {
      out.add_layer(l);
      continue;
    }
    Layer rest{{}, l.tag};
    std::vector<std::vector<std::vector<std::pair<int, int>>>> nets;
    for (const auto& g : l.gates) {
      if (g.kind == GateKind::PermuteV)
        nets.push_back(swap_network(g));
      else
        rest.gates.push_back(g);
    }
    out.add_layer(rest);
    std::size_t depth = 0;
    for (auto& n : nets) depth = std::max(depth, n.size());
    for (std::size_t r = 0; r < depth; ++r) {
      Layer sl{{}, l.tag};
      for (auto& n : nets)
        if (r < n.size())
          for (auto [a, b] : n[r]) sl.gates.push_back(Gate::swap(a, b));
      out.add_layer(sl);
    }
  }
  return out;
}

enum class DepthMode { NativeTwoQubit, CXDecomposed };

inline int cx_depth(const Circuit& c, DepthMode mode) {
  int d = 0;
  for (const auto& l : c.layers()) {
    int perm_depth = 0;
    for (const auto& g : l.gates)
      if (g.kind == GateKind::PermuteV) perm_depth = std::max(perm_depth, static_cast<int>(swap_network(g).size()));
    bool two = std::any_of(l.gates.begin(), l.gates.end(), [](const Gate& g) { return g.two_qubit(); });
    int here = two ? (mode == DepthMode::CXDecomposed && l.has(GateKind::SWAP) ? 3 : 1) : 0;
    d += std::max(here, perm_depth);
  }
  return d;
}

struct LayerCounts {
  int cx_layers = 0;      // layers whose entangling gates are CX/CZ only
  int swap_layers = 0;    // layers containing a SWAP or a permutation
  int two_qubit_gates = 0;
  int rotations = 0;
};

inline LayerCounts layer_counts(const Circuit& c) {
  LayerCounts r;
  for (const auto& l : c.layers()) {
    bool sw = l.has(GateKind::SWAP) || l.has(GateKind::PermuteV);
    bool cx = l.has(GateKind::CX) || l.has(GateKind::CZ);
    if (sw) ++r.swap_layers;
    else if (cx) ++r.cx_layers;
    for (const auto& g : l.gates) {
      if (g.two_qubit()) ++r.two_qubit_gates;
      if (g.rotation()) ++r.rotations;
    }
  }
  return r;
}

}  // namespace fflow
