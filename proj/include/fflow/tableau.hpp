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

#include "fflow/circuit.hpp"
#include "fflow/pauli.hpp"

namespace fflow {

namespace detail {

// Work in "XZ form": P = i^f * prod_q X_q^x Z_q^z, where f = phase + #Y. Conjugation by
// CX/SWAP keeps f; H and CZ pick up the signs noted below.
inline int y_count(const PauliString& p, std::initializer_list<int> qs) {
  int c = 0;
  for (int q : qs) c += p.x(q) && p.z(q);
  return c;
}

inline void set_xz(PauliString& p, int q, bool x, bool z) { p.set(q, x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I')); }

}  // namespace detail

// In place: p <- g p g^dag. Rotations are rejected.
inline void conjugate_in_place(PauliString& p, const Gate& g) {
  using detail::set_xz;
  using detail::y_count;
  if (!g.clifford()) throw std::invalid_argument(std::string("non-Clifford gate ") + to_string(g.kind));
  int a = g.q0, b = g.q1;
  switch (g.kind) {
    case GateKind::H: {
      bool x = p.x(a), z = p.z(a);
      // H Y H = -Y
      set_xz(p, a, z, x);
      if (x && z) p = -p;
      break;
    }
    case GateKind::S: {
      // X -> Y, Y -> -X
      bool x = p.x(a), z = p.z(a);
      if (x && z) p = -p;
      set_xz(p, a, x, z ^ x);
      break;
    }
    case GateKind::Sdg: {
      // X -> -Y, Y -> X
      bool x = p.x(a), z = p.z(a);
      if (x && !z) p = -p;
      set_xz(p, a, x, z ^ x);
      break;
    }
    case GateKind::CX: {
      int f = p.phase() + y_count(p, {a, b});
      bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
      set_xz(p, a, xa, za ^ zb);
      set_xz(p, b, xb ^ xa, zb);
      p.set_phase(f - y_count(p, {a, b}));
      break;
    }
    case GateKind::CZ: {
      int f = p.phase() + y_count(p, {a, b});
      bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
      f += 2 * (xa && xb);
      set_xz(p, a, xa, za ^ xb);
      set_xz(p, b, xb, zb ^ xa);
      p.set_phase(f - y_count(p, {a, b}));
      break;
    }
    case GateKind::SWAP: {
      char la = p.letter(a), lb = p.letter(b);
      p.set(a, lb);
      p.set(b, la);
      break;
    }
    case GateKind::PermuteV: {
      std::vector<char> old;
      for (int t : g.targets) old.push_back(p.letter(t));
      for (std::size_t i = 0; i < g.targets.size(); ++i) p.set(g.targets[i], old[g.perm[i]]);
      break;
    }
    default: break;
  }
}

// U p U^dag for the unitary U of circuit c (layers applied first to last).
inline PauliString conjugate_pauli(const Circuit& c, PauliString p) {
  if (p.n_qubits() != c.n_qubits()) throw std::invalid_argument("conjugate_pauli: qubit count mismatch");
  for (const auto& l : c.layers())
    for (const auto& g : l.gates) conjugate_in_place(p, g);
  return p;
}

// Images U X_q U^dag and U Z_q U^dag.
class Tableau {
 public:
  explicit Tableau(int n) : n_(n) {
    for (int q = 0; q < n; ++q) {
      xs_.push_back(PauliString::single(n, q, 'X'));
      zs_.push_back(PauliString::single(n, q, 'Z'));
    }
  }

  int n_qubits() const { return n_; }
  const PauliString& x_image(int q) const { return xs_.at(q); }
  const PauliString& z_image(int q) const { return zs_.at(q); }

  void apply(const Gate& g) {
    for (auto& p : xs_) conjugate_in_place(p, g);
    for (auto& p : zs_) conjugate_in_place(p, g);
  }
  void apply(const Circuit& c) {
    for (const auto& l : c.layers())
      for (const auto& g : l.gates) apply(g);
  }

  // U P U^dag from the generator images: P = i^f prod X^x Z^z in XZ form.
  PauliString conjugate(const PauliString& p) const {
    int f = p.phase();
    for (int q = 0; q < n_; ++q) f += p.x(q) && p.z(q);
    PauliString r(n_);
    r.set_phase(f);
    for (int q = 0; q < n_; ++q) {
      if (p.x(q)) r = r * xs_[q];
      if (p.z(q)) r = r * zs_[q];
    }
    return r;
  }

  // Images must keep the canonical commutation relations and stay Hermitian.
  bool symplectic() const {
    for (int a = 0; a < n_; ++a) {
      if (!xs_[a].hermitian() || !zs_[a].hermitian()) return false;
      for (int b = 0; b < n_; ++b) {
        if (!xs_[a].commutes(xs_[b]) || !zs_[a].commutes(zs_[b])) return false;
        if (xs_[a].commutes(zs_[b]) != (a != b)) return false;
      }
    }
    return true;
  }

  bool is_identity() const {
    for (int q = 0; q < n_; ++q)
      if (xs_[q] != PauliString::single(n_, q, 'X') || zs_[q] != PauliString::single(n_, q, 'Z')) return false;
    return true;
  }

 private:
  int n_;
  std::vector<PauliString> xs_, zs_;
};

inline Tableau apply_gate(Tableau t, const Gate& g) {
  t.apply(g);
  return t;
}

}  // namespace fflow
