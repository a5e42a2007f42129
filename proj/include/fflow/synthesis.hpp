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
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fflow/circuit.hpp"
#include "fflow/encodings.hpp"
#include "fflow/flow_sets.hpp"
#include "fflow/tableau.hpp"

namespace fflow {

enum class EncoderCategory {
  JWLadder,
  JWAugmentedTriangle,
  Triangle3Edges,
  ToricPeriodic,
  Mixed3to2,
  Square2to1,
  VCTriangle,
  VCSquare,
  DKPeriodicTriangle,
  GSETriangleNorth,
  GSETriangleSouthSym,
  GSEHorizontalSwapped,
  KWCZLayers,
  Generic
};

inline const char* to_string(EncoderCategory c) {
  switch (c) {
    case EncoderCategory::JWLadder: return "JWLadder";
    case EncoderCategory::JWAugmentedTriangle: return "JWAugmentedTriangle";
    case EncoderCategory::Triangle3Edges: return "Triangle3Edges";
    case EncoderCategory::ToricPeriodic: return "ToricPeriodic";
    case EncoderCategory::Mixed3to2: return "Mixed3to2";
    case EncoderCategory::Square2to1: return "Square2to1";
    case EncoderCategory::VCTriangle: return "VCTriangle";
    case EncoderCategory::VCSquare: return "VCSquare";
    case EncoderCategory::DKPeriodicTriangle: return "DKPeriodicTriangle";
    case EncoderCategory::GSETriangleNorth: return "GSETriangleNorth";
    case EncoderCategory::GSETriangleSouthSym: return "GSETriangleSouthSym";
    case EncoderCategory::GSEHorizontalSwapped: return "GSEHorizontalSwapped";
    case EncoderCategory::KWCZLayers: return "KWCZLayers";
    case EncoderCategory::Generic: return "Generic";
  }
  return "?";
}

// Entangling-depth bound of each encoder family; -1 means no fixed bound.
inline int category_depth_bound(EncoderCategory c, std::size_t component_length) {
  switch (c) {
    case EncoderCategory::JWLadder: return static_cast<int>(component_length);
    case EncoderCategory::JWAugmentedTriangle:
    case EncoderCategory::Triangle3Edges:
    case EncoderCategory::Square2to1:
    case EncoderCategory::VCTriangle:
    case EncoderCategory::VCSquare:
    case EncoderCategory::GSETriangleNorth:
    case EncoderCategory::GSETriangleSouthSym:
    case EncoderCategory::KWCZLayers: return 2;
    case EncoderCategory::GSEHorizontalSwapped: return 3;
    case EncoderCategory::Mixed3to2: return 3;
    case EncoderCategory::ToricPeriodic:
    case EncoderCategory::DKPeriodicTriangle: return 4;
    case EncoderCategory::Generic: return -1;
  }
  return -1;
}

struct Landing {
  int qubit = -1;
  int sign = 1;
};

// Where each transfer stabilizer of a component lands after the encoder: +-Z on one qubit.
struct EncMap {
  std::map<EdgeKey, Landing> entries;
};

struct EncoderCheck {
  bool ok = false;
  std::vector<Landing> landings;
  std::vector<PauliString> images;
  std::string diagnostic;
};

inline EncoderCheck verify_encoder(const Circuit& c, const std::vector<PauliString>& stabs,
                                   const std::vector<std::string>& names = {}) {
  EncoderCheck r;
  r.ok = true;
  std::map<int, std::size_t> owner;
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "stabilizer " + std::to_string(i); };
  for (std::size_t i = 0; i < stabs.size(); ++i) {
    PauliString img = conjugate_pauli(c, stabs[i]);
    r.images.push_back(img);
    auto sup = img.support();
    if (sup.size() != 1 || img.letter(sup[0]) != 'Z' || !img.hermitian()) {
      r.ok = false;
      if (r.diagnostic.empty())
        r.diagnostic = name(i) + " " + stabs[i].sparse_str() + " maps to " + img.sparse_str() + ", not a single-qubit Z";
      r.landings.push_back({});
      continue;
    }
    Landing l{sup[0], img.phase() == 0 ? 1 : -1};
    auto [it, fresh] = owner.emplace(l.qubit, i);
    if (!fresh) {
      r.ok = false;
      if (r.diagnostic.empty())
        r.diagnostic = name(i) + " and " + name(it->second) + " both land on qubit " + std::to_string(l.qubit);
    }
    r.landings.push_back(l);
  }
  return r;
}

namespace detail {

inline char conj_letter(char letter, const std::vector<GateKind>& seq) {
  PauliString p = PauliString::single(1, 0, letter);
  for (GateKind k : seq) conjugate_in_place(p, Gate{k, 0});
  return p.letter(0);
}

// Shortest H/S/Sdg word sending each required letter to its target (signs ignored).
inline std::vector<GateKind> local_clifford(const std::vector<std::pair<char, char>>& req) {
  static const GateKind gens[3] = {GateKind::H, GateKind::S, GateKind::Sdg};
  for (int len = 0; len <= 4; ++len) {
    int total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<GateKind> seq;
      int c = code;
      for (int i = 0; i < len; ++i) {
        seq.push_back(gens[c % 3]);
        c /= 3;
      }
      bool ok = true;
      for (auto [from, to] : req) ok = ok && conj_letter(from, seq) == to;
      if (ok) return seq;
    }
  }
  throw std::logic_error("local_clifford: unreachable letter map");
}

// Append per-qubit single-qubit words as consecutive layers (word position i in layer i).
inline void append_local_words(Circuit& c, const std::map<int, std::vector<GateKind>>& words, const std::string& tag) {
  std::size_t len = 0;
  for (auto& [q, w] : words) len = std::max(len, w.size());
  for (std::size_t i = 0; i < len; ++i) {
    Layer l{{}, tag};
    for (auto& [q, w] : words)
      if (i < w.size()) l.gates.push_back(Gate{w[i], q});
    c.add_layer(l);
  }
}

inline std::vector<PauliString> conjugate_all(const Circuit& c, const std::vector<PauliString>& s) {
  std::vector<PauliString> out;
  for (const auto& p : s) out.push_back(conjugate_pauli(c, p));
  return out;
}

// ASAP layering of an ordered gate list; per-qubit order is preserved.
inline void append_asap(Circuit& c, const std::vector<Gate>& gates, const std::string& tag) {
  std::vector<int> ready(c.n_qubits(), 0);
  std::vector<Layer> layers;
  for (const auto& g : gates) {
    int at = 0;
    for (int q : g.qubits()) at = std::max(at, ready[q]);
    if (static_cast<int>(layers.size()) <= at) layers.resize(at + 1, Layer{{}, tag});
    layers[at].gates.push_back(g);
    for (int q : g.qubits()) ready[q] = at + 1;
  }
  for (auto& l : layers) c.add_layer(l);
}

}  // namespace detail

// CSS alignment: single-qubit Cliffords so that every stabilizer becomes all-Z or all-X.
struct Alignment {
  bool ok = false;
  std::string why;
  std::vector<char> type;  // 'Z' or 'X' per stabilizer
  Circuit pre;
  std::vector<PauliString> aligned;
};

// pin = (stabilizer index, type) fixes the colour of that stabilizer's constraint class.
inline Alignment css_align(const std::vector<PauliString>& stabs, int n, std::optional<std::pair<int, char>> pin = {}) {
  Alignment a;
  a.pre = Circuit(n);
  std::size_t m = stabs.size();
  // Constraint graph: same letter on a shared qubit -> same type, different letter -> different type.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(m);
  for (int q = 0; q < n; ++q) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < m; ++i)
      if (stabs[i].letter(q) != 'I') on.push_back(i);
    for (std::size_t u = 0; u < on.size(); ++u)
      for (std::size_t v = u + 1; v < on.size(); ++v) {
        int diff = stabs[on[u]].letter(q) != stabs[on[v]].letter(q);
        adj[on[u]].push_back({on[v], diff});
        adj[on[v]].push_back({on[u], diff});
      }
  }
  std::vector<int> col(m, -1);
  auto flood = [&](std::size_t s, int c0) {
    std::vector<std::size_t> stack{s};
    col[s] = c0;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto [v, d] : adj[u]) {
        int want = col[u] ^ d;
        if (col[v] < 0) {
          col[v] = want;
          stack.push_back(v);
        } else if (col[v] != want) {
          return false;
        }
      }
    }
    return true;
  };
  if (pin && !flood(pin->first, pin->second == 'Z' ? 0 : 1)) {
    a.why = "stabilizers are not CSS-alignable by single-qubit Cliffords";
    return a;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (col[i] < 0 && !flood(i, 0)) {
      a.why = "stabilizers are not CSS-alignable by single-qubit Cliffords";
      return a;
    }
  for (std::size_t i = 0; i < m; ++i) a.type.push_back(col[i] ? 'X' : 'Z');
  std::map<int, std::vector<GateKind>> words;
  for (int q = 0; q < n; ++q) {
    std::map<char, char> req;
    for (std::size_t i = 0; i < m; ++i) {
      char l = stabs[i].letter(q);
      if (l != 'I') req[l] = a.type[i];
    }
    if (req.empty()) continue;
    auto w = detail::local_clifford({req.begin(), req.end()});
    if (!w.empty()) words[q] = w;
  }
  detail::append_local_words(a.pre, words, "align");
  a.aligned = detail::conjugate_all(a.pre, stabs);
  a.ok = true;
  return a;
}

namespace detail {

inline std::vector<int> support_of(const PauliString& p) { return p.support(); }

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

// Layer a set of commuting two-qubit gates with as few layers as possible (backtracking edge colouring).
inline std::vector<std::vector<Gate>> colour_layers(const std::vector<Gate>& gates) {
  if (gates.empty()) return {};
  std::map<int, int> degree;
  for (const auto& g : gates)
    for (int q : g.qubits()) ++degree[q];
  int k = 0;
  for (auto& [q, d] : degree) k = std::max(k, d);
  std::vector<int> colour(gates.size(), -1);
  std::function<bool(std::size_t, int)> go = [&](std::size_t i, int K) {
    if (i == gates.size()) return true;
    for (int c = 0; c < K; ++c) {
      bool clash = false;
      for (std::size_t j = 0; j < i && !clash; ++j)
        if (colour[j] == c)
          for (int q : gates[i].qubits())
            for (int r : gates[j].qubits()) clash = clash || q == r;
      if (clash) continue;
      colour[i] = c;
      if (go(i + 1, K)) return true;
    }
    colour[i] = -1;
    return false;
  };
  while (!go(0, k)) ++k;
  std::vector<std::vector<Gate>> layers(k);
  for (std::size_t i = 0; i < gates.size(); ++i) layers[colour[i]].push_back(gates[i]);
  return layers;
}

inline void add_layers(Circuit& c, const std::vector<std::vector<Gate>>& layers, const std::string& tag) {
  for (const auto& l : layers) c.add_layer(l, tag);
}

inline Alignment require_alignment(const std::vector<PauliString>& stabs, int n,
                                   std::optional<std::pair<int, char>> pin, const char* who) {
  Alignment a = css_align(stabs, n, pin);
  if (!a.ok) throw std::runtime_error(std::string(who) + ": " + a.why);
  return a;
}

// ---- templates; each returns the encoder up to the final single-qubit basis fix ----

// Sequential ladder: S_i = Z_{q_i} Z_{q_{i+1}}, processed from the last stabilizer backwards.
inline Circuit tmpl_ladder(const std::vector<PauliString>& stabs, int n) {
  Alignment a = require_alignment(stabs, n, {{0, 'Z'}}, "JWLadder");
  Circuit c = a.pre;
  std::size_t m = stabs.size();
  for (std::size_t i = 0; i < m; ++i)
    if (a.type[i] != 'Z' || a.aligned[i].weight() != 2) throw std::runtime_error("JWLadder: expects a chain of weight-2 stabilizers");
  for (std::size_t i = m; i-- > 0;) {
    auto s = a.aligned[i].support();
    std::vector<int> shared_prev = i > 0 ? set_intersection(s, a.aligned[i - 1].support()) : std::vector<int>{};
    // Control on the qubit shared with the previous stabilizer; target is the other one.
    int ctl = shared_prev.empty() ? (i + 1 < m && set_intersection(s, a.aligned[i + 1].support()) == std::vector<int>{s[0]} ? s[1] : s[0])
                                  : shared_prev[0];
    int tgt = s[0] == ctl ? s[1] : s[0];
    c.add_layer({Gate::cx(ctl, tgt)}, "encode");
  }
  return c;
}

// Fan-in: every stabilizer has a private qubit; CX from each other support qubit into it.
inline Circuit tmpl_fanin(const std::vector<PauliString>& stabs, int n, const char* who) {
  Alignment a = require_alignment(stabs, n, {{0, 'Z'}}, who);
  for (char t : a.type)
    if (t != 'Z') throw std::runtime_error(std::string(who) + ": stabilizers are not of a single CSS type");
  std::map<int, int> count;
  for (const auto& s : a.aligned)
    for (int q : s.support()) ++count[q];
  std::vector<Gate> gates;
  for (const auto& s : a.aligned) {
    int priv = -1;
    for (int q : s.support())
      if (count[q] == 1) priv = std::max(priv, q);
    if (priv < 0) throw std::runtime_error(std::string(who) + ": stabilizer " + s.sparse_str() + " has no private qubit");
    for (int q : s.support())
      if (q != priv) gates.push_back(Gate::cx(q, priv));
  }
  Circuit c = a.pre;
  add_layers(c, colour_layers(gates), "encode");
  return c;
}

// Square ladder: consecutive stabilizers share 2-qubit rungs and alternate CSS type.
inline Circuit tmpl_square(const std::vector<PauliString>& stabs, int n, const char* who) {
  Alignment a = require_alignment(stabs, n, {{0, 'Z'}}, who);
  std::size_t m = stabs.size();
  std::vector<std::vector<int>> rungs;
  if (m == 1) {
    auto s = a.aligned[0].support();
    for (std::size_t i = 0; i < s.size(); i += 2)
      rungs.push_back(i + 1 < s.size() ? std::vector<int>{s[i], s[i + 1]} : std::vector<int>{s[i]});
  } else {
    std::vector<std::vector<int>> inner;
    for (std::size_t i = 1; i < m; ++i) {
      auto r = set_intersection(a.aligned[i - 1].support(), a.aligned[i].support());
      if (r.empty() || r.size() > 2) throw std::runtime_error(std::string(who) + ": rung of unexpected size");
      if (a.type[i - 1] == a.type[i]) throw std::runtime_error(std::string(who) + ": neighbours must alternate type");
      inner.push_back(r);
    }
    rungs.push_back(set_difference(a.aligned[0].support(), inner.front()));
    for (auto& r : inner) rungs.push_back(r);
    rungs.push_back(set_difference(a.aligned[m - 1].support(), inner.back()));
  }
  Circuit c = a.pre;
  std::vector<Gate> l1;
  for (auto& r : rungs)
    if (r.size() == 2) l1.push_back(Gate::cx(r[0], r[1]));
  c.add_layer(l1, "encode");
  auto mid = conjugate_all(c, stabs);
  std::vector<Gate> l2;
  for (const auto& s : mid) {
    auto sup = s.support();
    if (sup.size() > 2) throw std::runtime_error(std::string(who) + ": stabilizer still has weight > 2 after rung layer");
    if (sup.size() == 2) l2.push_back(Gate::cx(sup[0], sup[1]));
  }
  c.add_layer(l2, "encode");
  return c;
}

// Roles of a three- or four-stabilizer ring around one shared ancilla.
struct TriangleRoles {
  int r0, r1, r2, r3, anc;
};

inline TriangleRoles triangle_roles(const std::vector<PauliString>& s, const char* who) {
  if (s.size() < 3) throw std::runtime_error(std::string(who) + ": needs at least three stabilizers");
  auto common = set_intersection(set_intersection(s[0].support(), s[1].support()), s[2].support());
  if (common.size() != 1) throw std::runtime_error(std::string(who) + ": no unique shared ancilla");
  int a = common[0];
  auto minus_a = [a](std::vector<int> v) {
    v.erase(std::remove(v.begin(), v.end(), a), v.end());
    return v;
  };
  auto r1 = minus_a(set_intersection(s[0].support(), s[1].support()));
  auto r2 = minus_a(set_intersection(s[1].support(), s[2].support()));
  auto r0 = set_difference(minus_a(s[0].support()), r1);
  auto r3 = set_difference(minus_a(s[2].support()), r2);
  if (r0.size() != 1 || r1.size() != 1 || r2.size() != 1 || r3.size() != 1)
    throw std::runtime_error(std::string(who) + ": stabilizers are not weight-3 triangles");
  return {r0[0], r1[0], r2[0], r3[0], a};
}

inline Circuit tmpl_triangle3(const std::vector<PauliString>& stabs, int n, const char* who, bool closed) {
  if (stabs.size() != (closed ? 4u : 3u)) throw std::runtime_error(std::string(who) + ": wrong number of stabilizers");
  Alignment a = require_alignment(stabs, n, {{0, 'Z'}}, who);
  const char want[4] = {'Z', 'X', 'Z', 'X'};
  for (std::size_t i = 0; i < stabs.size(); ++i)
    if (a.type[i] != want[i]) throw std::runtime_error(std::string(who) + ": stabilizer types do not alternate");
  TriangleRoles r = triangle_roles(a.aligned, who);
  if (closed) {
    auto s3 = a.aligned[3].support();
    if (s3 != std::vector<int>([&] {
          std::vector<int> v{r.r3, r.r0, r.anc};
          std::sort(v.begin(), v.end());
          return v;
        }()))
      throw std::runtime_error(std::string(who) + ": closing stabilizer does not match the ring");
  }
  Circuit c = a.pre;
  c.add_layer({Gate::cx(r.anc, r.r1), Gate::cx(r.r3, r.r2)}, "encode");
  c.add_layer({Gate::cx(r.r0, r.r1), Gate::cx(r.r2, r.anc)}, "encode");
  if (closed) {
    c.add_layer({Gate::cx(r.r3, r.r2)}, "encode");
    c.add_layer({Gate::cx(r.r0, r.r3)}, "encode");
  }
  return c;
}

// Mixed 3-to-2 chain: A_m = site 2m, B_m = site 2m+1, C_m = ancilla N+m; edge 2m is Z-type.
inline Circuit tmpl_mixed(const std::vector<PauliString>& stabs, const ConnectedComponent& cc, const Encoding& enc) {
  int N = enc.n_modes(), n = enc.n_qubits(), K = n - N;
  int pin = -1;
  for (std::size_t i = 0; i < cc.edges.size(); ++i)
    if (std::min(cc.edges[i].source, cc.edges[i].target) == 0) pin = static_cast<int>(i);
  if (pin < 0 || static_cast<int>(cc.edges.size()) != N - 1)
    throw std::runtime_error("Mixed3to2: component must be the whole chain");
  Alignment a = require_alignment(stabs, n, {{pin, 'Z'}}, "Mixed3to2");
  Circuit c = a.pre;
  std::vector<Gate> l1, l2, l3;
  for (int m = 0; m < K; ++m)
    if (2 * (m + 1) < N) l1.push_back(Gate::cx(N + m, 2 * (m + 1)));
  for (int m = 0; 2 * m + 1 < N; ++m) l2.push_back(Gate::cx(2 * m, 2 * m + 1));
  for (int m = 0; m < K; ++m) l3.push_back(Gate::cx(2 * m + 1, N + m));
  c.add_layer(l1, "encode");
  c.add_layer(l2, "encode");
  c.add_layer(l3, "encode");
  return c;
}

// Cluster-type stabilizers Z X Z: CZ on even bonds, then odd bonds, around the X centres.
inline Circuit tmpl_kw_cz(const std::vector<PauliString>& stabs, int n) {
  std::set<int> centres;
  for (const auto& s : stabs) {
    int xs = 0;
    for (int q : s.support()) {
      if (s.letter(q) == 'X') {
        centres.insert(q);
        ++xs;
      } else if (s.letter(q) != 'Z') {
        throw std::runtime_error("KWCZLayers: expects Z..X..Z stabilizers");
      }
    }
    if (xs != 1) throw std::runtime_error("KWCZLayers: expects one X centre per stabilizer");
  }
  Circuit c(n);
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Gate> l;
    for (int q = parity; q + 1 < n; q += 2)
      if (centres.count(q) || centres.count(q + 1)) l.push_back(Gate::cz(q, q + 1));
    c.add_layer(l, "encode");
  }
  return c;
}

// ---- bounded exhaustive search over CX layers on CSS-aligned stabilizers ----

struct CssStab {
  char type;
  std::uint32_t mask;
  bool operator==(const CssStab& o) const { return type == o.type && mask == o.mask; }
  bool operator<(const CssStab& o) const { return type != o.type ? type < o.type : mask < o.mask; }
};

inline void css_cx(std::vector<CssStab>& s, int c, int t) {
  std::uint32_t bc = 1u << c, bt = 1u << t;
  for (auto& x : s) {
    if (x.type == 'Z' && (x.mask & bt)) x.mask ^= bc;
    if (x.type == 'X' && (x.mask & bc)) x.mask ^= bt;
  }
}

inline int css_lower_bound(const std::vector<CssStab>& s) {
  int lb = 0;
  for (const auto& x : s) {
    int w = std::popcount(x.mask), d = 0;
    while ((1 << d) < w) ++d;
    lb = std::max(lb, d);
  }
  return lb;
}

struct CxSearch {
  int L = 0;
  std::size_t budget = 2000000, nodes = 0;
  bool exhausted = false;
  std::vector<std::vector<std::pair<int, int>>> path;
  std::set<std::pair<std::vector<CssStab>, int>> dead;

  static bool done(const std::vector<CssStab>& s) {
    for (const auto& x : s)
      if (std::popcount(x.mask) != 1) return false;
    return true;
  }

  bool dfs(const std::vector<CssStab>& s, int remaining) {
    if (done(s)) return true;
    if (remaining == 0 || css_lower_bound(s) > remaining) return false;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (dead.count({s, remaining})) return false;
    std::vector<std::pair<int, int>> cand;
    for (int a = 0; a < L; ++a)
      for (int b = 0; b < L; ++b) {
        if (a == b) continue;
        bool co = false;
        for (const auto& x : s) co = co || ((x.mask >> a) & 1u && (x.mask >> b) & 1u);
        if (co) cand.emplace_back(a, b);
      }
    std::vector<std::pair<int, int>> layer;
    std::function<bool(std::size_t, std::uint32_t)> pick = [&](std::size_t i, std::uint32_t used) -> bool {
      if (exhausted) return false;
      if (i == cand.size()) {
        if (layer.empty()) return false;
        auto next = s;
        for (auto [c, t] : layer) css_cx(next, c, t);
        path.push_back(layer);
        if (dfs(next, remaining - 1)) return true;
        path.pop_back();
        return false;
      }
      if (pick(i + 1, used)) return true;
      auto [c, t] = cand[i];
      std::uint32_t m = (1u << c) | (1u << t);
      if (used & m) return false;
      layer.push_back(cand[i]);
      bool ok = pick(i + 1, used | m);
      layer.pop_back();
      return ok;
    };
    if (pick(0, 0)) return true;
    if (!exhausted) dead.insert({s, remaining});
    return false;
  }
};

}  // namespace detail

struct SearchResult {
  bool found = false;
  bool exhausted_budget = false;
  int depth = -1;
  Circuit circuit;  // alignment + CX layers (no final basis fix)
  std::size_t nodes = 0;
};

// Iterative deepening over CX layers (pairs restricted to qubits that co-occur in a stabilizer).
inline SearchResult search_min_cx_encoder(const std::vector<PauliString>& stabs, int n, int max_depth,
                                          std::size_t budget = 2000000) {
  SearchResult res;
  Alignment a = css_align(stabs, n);
  if (!a.ok) return res;
  std::vector<int> qubits;
  {
    std::set<int> qs;
    for (const auto& s : a.aligned)
      for (int q : s.support()) qs.insert(q);
    qubits.assign(qs.begin(), qs.end());
  }
  if (qubits.size() > 24) return res;
  std::map<int, int> local;
  for (std::size_t i = 0; i < qubits.size(); ++i) local[qubits[i]] = static_cast<int>(i);
  std::vector<detail::CssStab> start;
  for (std::size_t i = 0; i < a.aligned.size(); ++i) {
    std::uint32_t m = 0;
    for (int q : a.aligned[i].support()) m |= 1u << local[q];
    start.push_back({a.type[i], m});
  }
  for (int d = detail::css_lower_bound(start); d <= max_depth; ++d) {
    detail::CxSearch s;
    s.L = static_cast<int>(qubits.size());
    s.budget = budget;
    bool ok = s.dfs(start, d);
    res.nodes += s.nodes;
    if (ok) {
      res.found = true;
      res.depth = d;
      res.circuit = a.pre;
      for (auto& layer : s.path) {
        std::vector<Gate> gs;
        for (auto [c, t] : layer) gs.push_back(Gate::cx(qubits[c], qubits[t]));
        res.circuit.add_layer(gs, "encode");
      }
      return res;
    }
    if (s.exhausted) {
      res.exhausted_budget = true;
      return res;
    }
  }
  return res;
}

namespace detail {

// Elimination fallback for any commuting independent set: not depth-optimal, always succeeds.
inline Circuit tmpl_eliminate(const std::vector<PauliString>& stabs, int n) {
  std::vector<PauliString> cur = stabs;
  std::vector<Gate> seq;
  auto apply = [&](const Gate& g) {
    seq.push_back(g);
    for (auto& s : cur) conjugate_in_place(s, g);
  };
  std::set<int> used;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    std::vector<int> fresh;
    for (int q : cur[i].support())
      if (!used.count(q)) fresh.push_back(q);
    if (fresh.empty()) throw std::runtime_error("elimination: stabilizers are dependent");
    int pivot = fresh.back();
    for (int q : fresh)
      for (GateKind k : local_clifford({{cur[i].letter(q), 'Z'}})) apply(Gate{k, q});
    for (int q : cur[i].support())
      if (q != pivot) {
        if (cur[i].letter(q) != 'Z') throw std::runtime_error("elimination: stabilizers do not commute");
        apply(Gate::cx(q, pivot));
      }
    used.insert(pivot);
  }
  Circuit c(n);
  append_asap(c, seq, "encode");
  return c;
}

inline Circuit tmpl_generic(const std::vector<PauliString>& stabs, int n) {
  std::set<int> qs;
  for (const auto& s : stabs)
    for (int q : s.support()) qs.insert(q);
  if (qs.size() <= 12) {
    SearchResult r = search_min_cx_encoder(stabs, n, 4, 200000);
    if (r.found) return r.circuit;
  }
  return tmpl_eliminate(stabs, n);
}

}  // namespace detail

struct ComponentEncoder {
  EncoderCategory category = EncoderCategory::Generic;
  Circuit circuit;
  EncMap map;
  std::vector<EdgeKey> order;  // stabilizer order (component edge order)
  std::vector<Landing> landings;
  int entangling_depth = 0;
};

inline std::vector<PauliString> component_stabilizers(const ConnectedComponent& cc, const Encoding& enc) {
  std::vector<PauliString> s;
  for (const auto& e : cc.edges) s.push_back(enc.transfer(e.source, e.target));
  return s;
}

inline ComponentEncoder synthesize_component_encoder(EncoderCategory cat, const ConnectedComponent& cc,
                                                     const Encoding& enc) {
  int n = enc.n_qubits();
  auto stabs = component_stabilizers(cc, enc);
  const char* who = to_string(cat);
  auto shape_error = [&](const char* why) {
    return std::invalid_argument(std::string(who) + ": " + why + " (component shape " + to_string(cc.shape) + ")");
  };
  Circuit c(n);
  switch (cat) {
    case EncoderCategory::JWLadder:
      if (cc.shape != ComponentShape::LineChain) throw shape_error("needs an open chain");
      c = detail::tmpl_ladder(stabs, n);
      break;
    case EncoderCategory::JWAugmentedTriangle:
    case EncoderCategory::VCTriangle:
    case EncoderCategory::GSETriangleNorth:
    case EncoderCategory::GSETriangleSouthSym:
      if (cc.shape == ComponentShape::Petal2Loop) throw shape_error("needs a line component");
      c = detail::tmpl_fanin(stabs, n, who);
      break;
    case EncoderCategory::GSEHorizontalSwapped: {
      if (cc.shape == ComponentShape::Petal2Loop) throw shape_error("needs a line component");
      if (enc.kind != EncodingKind::GSE) throw shape_error("needs the GSE layout");
      Circuit sw(n);
      std::vector<Gate> l;
      for (int s : cc.sites()) l.push_back(Gate::swap(2 * s, 2 * s + 1));
      sw.add_layer(l, "translate");
      c = sw;
      c.append(detail::tmpl_fanin(detail::conjugate_all(sw, stabs), n, who));
      break;
    }
    case EncoderCategory::Triangle3Edges:
      if (cc.shape != ComponentShape::LineChain) throw shape_error("needs an open chain");
      c = detail::tmpl_triangle3(stabs, n, who, false);
      break;
    case EncoderCategory::ToricPeriodic:
    case EncoderCategory::DKPeriodicTriangle:
      if (cc.shape != ComponentShape::LineLoop && cc.shape != ComponentShape::Plaquette4Loop)
        throw shape_error("needs a closed loop");
      c = detail::tmpl_triangle3(stabs, n, who, true);
      break;
    case EncoderCategory::Mixed3to2:
      if (cc.shape != ComponentShape::LineChain) throw shape_error("needs an open chain");
      c = detail::tmpl_mixed(stabs, cc, enc);
      break;
    case EncoderCategory::Square2to1:
    case EncoderCategory::VCSquare:
      if (cc.shape == ComponentShape::Petal2Loop) throw shape_error("needs a line component");
      c = detail::tmpl_square(stabs, n, who);
      break;
    case EncoderCategory::KWCZLayers:
      c = detail::tmpl_kw_cz(stabs, n);
      break;
    case EncoderCategory::Generic:
      c = detail::tmpl_generic(stabs, n);
      break;
  }
  // Final single-qubit basis fix: every single-qubit image is rotated onto Z.
  auto images = detail::conjugate_all(c, stabs);
  std::map<int, std::vector<GateKind>> fix;
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto sup = images[i].support();
    if (sup.size() != 1)
      throw std::runtime_error(std::string(who) + ": synthesis failed, " + stabs[i].sparse_str() + " maps to " +
                               images[i].sparse_str());
    auto w = detail::local_clifford({{images[i].letter(sup[0]), 'Z'}});
    if (!w.empty()) fix[sup[0]] = w;
  }
  detail::append_local_words(c, fix, "basis");

  std::vector<std::string> names;
  for (const auto& e : cc.edges) names.push_back("T" + std::to_string(e.source) + "," + std::to_string(e.target));
  EncoderCheck chk = verify_encoder(c, stabs, names);
  if (!chk.ok) throw std::runtime_error(std::string(who) + ": encoder verification failed: " + chk.diagnostic);

  ComponentEncoder out;
  out.category = cat;
  out.circuit = c;
  out.landings = chk.landings;
  out.entangling_depth = cx_depth(c, DepthMode::NativeTwoQubit);
  for (std::size_t i = 0; i < cc.edges.size(); ++i) {
    EdgeKey k{cc.edges[i].source, cc.edges[i].target};
    out.order.push_back(k);
    out.map.entries[k] = chk.landings[i];
  }
  int bound = category_depth_bound(cat, cc.edges.size());
  if (bound >= 0 && out.entangling_depth > bound)
    throw std::runtime_error(std::string(who) + ": depth " + std::to_string(out.entangling_depth) +
                             " exceeds the family bound " + std::to_string(bound));
  return out;
}

// Encoder family for a component of a given encoding.
inline EncoderCategory resolve_category(const Encoding& enc, const ConnectedComponent& cc) {
  if (cc.edges.empty()) throw std::invalid_argument("resolve_category: empty component");
  if (cc.shape == ComponentShape::Petal2Loop) return EncoderCategory::Generic;
  Orientation o = cc.edges.front().orientation;
  bool horizontal = cc.edges.front().horizontal();
  switch (enc.kind) {
    case EncodingKind::JW: return EncoderCategory::JWLadder;
    case EncodingKind::JWAugmented: return EncoderCategory::JWAugmentedTriangle;
    case EncodingKind::SingleAncilla3Edge:
      return cc.edges.size() == 3 ? EncoderCategory::Triangle3Edges : EncoderCategory::Generic;
    case EncodingKind::Toric4Edge:
      return cc.edges.size() == 4 && cc.shape == ComponentShape::LineLoop ? EncoderCategory::ToricPeriodic
                                                                           : EncoderCategory::Generic;
    case EncodingKind::Ratio3to2: return EncoderCategory::Mixed3to2;
    case EncodingKind::Ratio2to1: return EncoderCategory::Square2to1;
    case EncodingKind::VC: return horizontal ? EncoderCategory::VCTriangle : EncoderCategory::VCSquare;
    case EncodingKind::DK:
      return cc.shape == ComponentShape::Plaquette4Loop ? EncoderCategory::DKPeriodicTriangle : EncoderCategory::Generic;
    case EncodingKind::GSE:
      if (o == Orientation::West) return EncoderCategory::GSEHorizontalSwapped;
      if (o == Orientation::South) return EncoderCategory::GSETriangleSouthSym;
      return EncoderCategory::GSETriangleNorth;
    case EncodingKind::KWDual:
      return o == Orientation::West ? EncoderCategory::KWCZLayers : EncoderCategory::Generic;
  }
  return EncoderCategory::Generic;
}

// ---- depth-1 impossibility certificate ----

struct Depth1Certificate {
  int n_qubits = 0;
  int max_weight = 0;
  std::size_t partitions_checked = 0;  // pairings of the qubits into blocks of size <= 2
  std::size_t partitions_admitting = 0;
  std::size_t cx_layers_checked = 0;   // oriented CX matchings after CSS alignment
  std::size_t cx_layers_solving = 0;
  bool depth1_possible() const { return partitions_admitting > 0 || cx_layers_solving > 0; }
};

// A depth-1 circuit is a product of Cliffords on disjoint blocks of <= 2 qubits. A stabilizer touching
// two blocks keeps a non-identity factor on each, so its image has weight >= 2.
inline Depth1Certificate depth1_certificate(const std::vector<PauliString>& stabs) {
  Depth1Certificate cert;
  std::set<int> qs;
  for (const auto& s : stabs) {
    for (int q : s.support()) qs.insert(q);
    cert.max_weight = std::max(cert.max_weight, s.weight());
  }
  std::vector<int> qubits(qs.begin(), qs.end());
  int L = static_cast<int>(qubits.size());
  cert.n_qubits = L;
  if (L > 8) throw std::invalid_argument("depth1_certificate: at most 8 qubits");
  std::map<int, int> local;
  for (int i = 0; i < L; ++i) local[qubits[i]] = i;
  std::vector<std::uint32_t> masks;
  for (const auto& s : stabs) {
    std::uint32_t m = 0;
    for (int q : s.support()) m |= 1u << local[q];
    masks.push_back(m);
  }
  std::vector<int> block(L, -1);
  std::function<void(int, int)> pairings = [&](int i, int nb) {
    if (i == L) {
      ++cert.partitions_checked;
      bool all = true;
      for (auto m : masks) {
        std::set<int> touched;
        for (int q = 0; q < L; ++q)
          if ((m >> q) & 1u) touched.insert(block[q]);
        all = all && touched.size() <= 1;
      }
      if (all) ++cert.partitions_admitting;
      return;
    }
    if (block[i] >= 0) return pairings(i + 1, nb);
    block[i] = nb;
    pairings(i + 1, nb + 1);
    for (int j = i + 1; j < L; ++j)
      if (block[j] < 0) {
        block[j] = nb;
        pairings(i + 1, nb + 1);
        block[j] = -1;
      }
    block[i] = -1;
  };
  pairings(0, 0);

  Alignment a = css_align(stabs, stabs.empty() ? 0 : stabs[0].n_qubits());
  if (a.ok) {
    std::vector<detail::CssStab> start;
    for (std::size_t i = 0; i < a.aligned.size(); ++i) {
      std::uint32_t m = 0;
      for (int q : a.aligned[i].support()) m |= 1u << local[q];
      start.push_back({a.type[i], m});
    }
    std::vector<std::pair<int, int>> layer;
    std::function<void(int, std::uint32_t)> layers = [&](int i, std::uint32_t used) {
      if (i == L) {
        ++cert.cx_layers_checked;
        auto s = start;
        for (auto [c, t] : layer) detail::css_cx(s, c, t);
        if (detail::CxSearch::done(s)) ++cert.cx_layers_solving;
        return;
      }
      if ((used >> i) & 1u) return layers(i + 1, used);
      layers(i + 1, used);
      for (int j = i + 1; j < L; ++j)
        if (!((used >> j) & 1u))
          for (int dir = 0; dir < 2; ++dir) {
            layer.push_back(dir ? std::make_pair(j, i) : std::make_pair(i, j));
            layers(i + 1, used | (1u << i) | (1u << j));
            layer.pop_back();
          }
    };
    layers(0, 0);
  }
  return cert;
}

}  // namespace fflow
