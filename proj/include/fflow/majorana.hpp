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

#include <stdexcept>
#include <string>
#include <vector>

#include "fflow/lattice.hpp"
#include "fflow/pauli.hpp"

namespace fflow {

// i^phase * gamma_{a1} gamma_{a2} ... with a1 < a2 < ... (0-based: site j owns 2j and 2j+1).
struct MajoranaMonomial {
  int n_modes = 0;
  std::vector<int> indices;
  int phase = 0;

  bool is_identity() const { return indices.empty(); }
  int degree() const { return static_cast<int>(indices.size()); }
  bool operator==(const MajoranaMonomial& o) const {
    return n_modes == o.n_modes && indices == o.indices && phase == o.phase;
  }

  std::string str() const {
    static const char* pre[4] = {"+", "+i", "-", "-i"};
    std::string s = pre[phase & 3];
    if (indices.empty()) return s + "1";
    for (int a : indices) s += "g" + std::to_string(a);
    return s;
  }
};

inline MajoranaMonomial make_monomial(int n_modes, std::vector<int> idx, int phase = 0) {
  // Bubble sort with sign tracking; equal neighbors annihilate (gamma^2 = 1).
  int swaps = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t k = 0; k + 1 < idx.size() - i; ++k)
      if (idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
        ++swaps;
      }
  std::vector<int> out;
  for (int a : idx) {
    if (a < 0 || a >= 2 * n_modes) throw std::out_of_range("Majorana index out of range");
    if (!out.empty() && out.back() == a)
      out.pop_back();
    else
      out.push_back(a);
  }
  return {n_modes, out, ((phase + 2 * swaps) % 4 + 4) % 4};
}

inline MajoranaMonomial majorana_mul(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  if (a.n_modes != b.n_modes) throw std::invalid_argument("majorana_mul: mode count mismatch");
  // Moving each gamma of b left past every larger gamma of a costs one sign.
  int inv = 0;
  for (int ai : a.indices)
    for (int bj : b.indices)
      if (ai > bj) ++inv;
  std::vector<int> out;
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() || j < b.indices.size()) {
    if (j == b.indices.size() || (i < a.indices.size() && a.indices[i] < b.indices[j])) {
      out.push_back(a.indices[i++]);
    } else if (i == a.indices.size() || b.indices[j] < a.indices[i]) {
      out.push_back(b.indices[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  return {a.n_modes, out, (a.phase + b.phase + 2 * inv) % 4};
}

inline bool majorana_commutes(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  if (a.n_modes != b.n_modes) throw std::invalid_argument("majorana_commutes: mode count mismatch");
  int overlap = 0;
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() && j < b.indices.size()) {
    if (a.indices[i] == b.indices[j]) {
      ++overlap;
      ++i;
      ++j;
    } else if (a.indices[i] < b.indices[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return (a.degree() * b.degree() + overlap) % 2 == 0;
}

// GF(2) support of a monomial over 2 * n_modes Majoranas.
inline BitVec majorana_bits(const MajoranaMonomial& m) {
  BitVec b(2 * m.n_modes);
  for (int a : m.indices) b.set(a);
  return b;
}

enum class TermKind { Vertex, Edge, Transfer };

struct FermionicTerm {
  TermKind kind = TermKind::Vertex;
  int j = 0, k = 0;
  MajoranaMonomial monomial;
  double coefficient = 1.0;

  std::string name() const {
    switch (kind) {
      case TermKind::Vertex: return "V" + std::to_string(j);
      case TermKind::Edge: return "E" + std::to_string(j) + "," + std::to_string(k);
      case TermKind::Transfer: return "T" + std::to_string(j) + "," + std::to_string(k);
    }
    return "?";
  }
};

// V_j = -i g_{2j} g_{2j+1}
inline FermionicTerm vertex_op(int n_modes, int j) {
  return {TermKind::Vertex, j, j, make_monomial(n_modes, {2 * j, 2 * j + 1}, 3), 1.0};
}

// E_jk = -i g_{2j} g_{2k}
inline FermionicTerm edge_op(int n_modes, int j, int k) {
  if (j == k) throw std::invalid_argument("edge_op: j == k");
  return {TermKind::Edge, j, k, make_monomial(n_modes, {2 * j, 2 * k}, 3), 1.0};
}

// T_jk = (1/2) * (i g_{2j+1} g_{2k}); the 1/2 lives in the coefficient.
inline FermionicTerm transfer_op(int n_modes, int j, int k) {
  if (j == k) throw std::invalid_argument("transfer_op: j == k");
  return {TermKind::Transfer, j, k, make_monomial(n_modes, {2 * j + 1, 2 * k}, 1), 0.5};
}

struct RelationViolation {
  std::string a, b;
  bool majorana_commute = false;
  bool expected_commute = false;
};

struct RelationReport {
  std::size_t pairs_checked = 0;
  std::size_t commuting = 0;
  std::size_t anticommuting = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {
// Index rule for the mixed relations: flow (head-to-tail) and disjoint pairs commute,
// clashes (shared head or shared tail) anticommute, a vertex anticommutes with terms touching it.
inline bool expected_commute(const FermionicTerm& a, const FermionicTerm& b, bool fallback) {
  auto touches = [](const FermionicTerm& t, int s) { return t.j == s || t.k == s; };
  if (a.kind == TermKind::Vertex && b.kind == TermKind::Vertex) return true;
  if (a.kind == TermKind::Vertex) return !(b.kind != TermKind::Vertex && touches(b, a.j));
  if (b.kind == TermKind::Vertex) return !touches(a, b.j);
  if (a.kind == TermKind::Transfer && b.kind == TermKind::Transfer) {
    if (a.j == b.j && a.k == b.k) return true;
    if (a.j == b.k && a.k == b.j) return true;      // [T_jk, T_kj] = 0
    if (a.k == b.j || a.j == b.k) return true;      // flow
    if (a.j == b.j || a.k == b.k) return false;     // clash
    return true;
  }
  if (a.kind == TermKind::Edge && b.kind == TermKind::Edge) {
    int shared = (a.j == b.j || a.j == b.k) + (a.k == b.j || a.k == b.k);
    return shared != 1;
  }
  return fallback;
}
}  // namespace detail

inline RelationReport check_mixed_relations(const std::vector<FermionicTerm>& terms) {
  RelationReport r;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t k = i + 1; k < terms.size(); ++k) {
      const auto& a = terms[i].monomial;
      const auto& b = terms[k].monomial;
      auto ab = majorana_mul(a, b), ba = majorana_mul(b, a);
      bool by_product = ab == ba;
      bool by_rule = majorana_commutes(a, b);
      bool expect = detail::expected_commute(terms[i], terms[k], by_rule);
      ++r.pairs_checked;
      (by_product ? r.commuting : r.anticommuting)++;
      if (by_product != by_rule || by_product != expect)
        r.violations.push_back({terms[i].name(), terms[k].name(), by_product, expect});
    }
  return r;
}

// H = J * sum over directed edges of T_jk, i.e. -J * sum (c_j^dag c_k + h.c.).
inline std::vector<std::pair<FermionicTerm, double>> build_hopping_hamiltonian(const Lattice& lat, double J) {
  std::vector<std::pair<FermionicTerm, double>> h;
  for (const auto& e : directed_edges(lat)) h.emplace_back(transfer_op(lat.n_sites(), e.source, e.target), J);
  return h;
}

}  // namespace fflow
