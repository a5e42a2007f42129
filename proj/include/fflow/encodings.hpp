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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fflow/lattice.hpp"
#include "fflow/majorana.hpp"
#include "fflow/pauli.hpp"

namespace fflow {

enum class EncodingKind {
  JW,
  JWAugmented,
  SingleAncilla3Edge,
  Toric4Edge,
  Ratio3to2,
  Ratio2to1,
  VC,
  DK,
  GSE,
  KWDual
};

inline const char* to_string(EncodingKind k) {
  switch (k) {
    case EncodingKind::JW: return "JW";
    case EncodingKind::JWAugmented: return "JWAugmented";
    case EncodingKind::SingleAncilla3Edge: return "SingleAncilla3Edge";
    case EncodingKind::Toric4Edge: return "Toric4Edge";
    case EncodingKind::Ratio3to2: return "Ratio3to2";
    case EncodingKind::Ratio2to1: return "Ratio2to1";
    case EncodingKind::VC: return "VC";
    case EncodingKind::DK: return "DK";
    case EncodingKind::GSE: return "GSE";
    case EncodingKind::KWDual: return "KWDual";
  }
  return "?";
}

struct QubitLayout {
  int n_qubits = 0;
  std::vector<int> physical;                          // site -> qubit, -1 when parity is delocalized
  std::vector<std::pair<std::string, int>> ancilla;   // role name -> qubit
  std::vector<std::string> qubit_role;                // qubit -> role, for reports
};

using EdgeKey = std::pair<int, int>;

// Transfer images are stored without the 1/2: T^_jk = transfer_coeff * transfer_image(j,k).
struct Encoding {
  EncodingKind kind = EncodingKind::JW;
  Lattice lattice;
  QubitLayout layout;
  std::vector<PauliString> parity_image;
  std::map<EdgeKey, PauliString> edge_image;
  std::map<EdgeKey, PauliString> transfer_image;
  double transfer_coeff = 0.5;
  bool local_parity = true;
  std::string convention;

  std::string name() const { return to_string(kind); }
  int n_qubits() const { return layout.n_qubits; }
  int n_modes() const { return lattice.n_sites(); }
  const PauliString& transfer(int j, int k) const {
    auto it = transfer_image.find({j, k});
    if (it == transfer_image.end())
      throw std::out_of_range("no transfer image for (" + std::to_string(j) + "," + std::to_string(k) + ")");
    return it->second;
  }
  const PauliString& edge(int j, int k) const { return edge_image.at({j, k}); }
};

namespace detail {

inline void label_qubits(QubitLayout& L) {
  L.qubit_role.assign(L.n_qubits, "");
  for (std::size_t j = 0; j < L.physical.size(); ++j)
    if (L.physical[j] >= 0) L.qubit_role[L.physical[j]] = "site" + std::to_string(j);
  for (auto& [role, q] : L.ancilla) L.qubit_role[q] = role;
}

// Fill the reverse transfer from the product equality T_kj = -V_j V_k T_jk, then edges
// from S_jk = i V_j E_jk.
inline void complete_from_transfers(Encoding& enc, const std::vector<EdgeKey>& forward) {
  for (auto [j, k] : forward) {
    const PauliString& s = enc.transfer_image.at({j, k});
    PauliString r = -(enc.parity_image[j] * enc.parity_image[k] * s);
    enc.transfer_image[{k, j}] = r;
  }
  for (auto& [key, s] : enc.transfer_image) {
    auto [j, k] = key;
    enc.edge_image[key] = (enc.parity_image[j] * s).times_i(3);
  }
}

// S_st = i V_s E_st and S_ts = i E_st V_t, with E_ts = -E_st.
inline void complete_from_edges(Encoding& enc, const std::vector<std::pair<EdgeKey, PauliString>>& edges) {
  for (const auto& [key, e] : edges) {
    auto [s, t] = key;
    enc.edge_image[{s, t}] = e;
    enc.edge_image[{t, s}] = -e;
    enc.transfer_image[{s, t}] = (enc.parity_image[s] * e).times_i(1);
    enc.transfer_image[{t, s}] = (e * enc.parity_image[t]).times_i(1);
  }
}

inline std::vector<PauliString> z_parities(int n_sites, int n_qubits) {
  std::vector<PauliString> v;
  for (int j = 0; j < n_sites; ++j) v.push_back(PauliString::single(n_qubits, j, 'Z'));
  return v;
}

inline Encoding local_base(EncodingKind kind, const Lattice& lat, int n_qubits) {
  Encoding enc;
  enc.kind = kind;
  enc.lattice = lat;
  enc.layout.n_qubits = n_qubits;
  for (int j = 0; j < lat.n_sites(); ++j) enc.layout.physical.push_back(j);
  enc.parity_image = z_parities(lat.n_sites(), n_qubits);
  return enc;
}

}  // namespace detail

// Jordan-Wigner with strings to the right: g_{2j} = X_j Z_{>j}, g_{2j+1} = Y_j Z_{>j}.
inline Encoding jw_encode(int chain_length) {
  if (chain_length < 1) throw std::invalid_argument("jw_encode: chain_length >= 1");
  Lattice lat(chain_length, 1, Boundary::Open);
  int n = chain_length;
  Encoding enc = detail::local_base(EncodingKind::JW, lat, n);
  auto gamma = [n](int a) {
    PauliString p(n);
    int j = a / 2;
    p.set(j, a % 2 == 0 ? 'X' : 'Y');
    for (int q = j + 1; q < n; ++q) p.set(q, 'Z');
    return p;
  };
  for (const auto& e : directed_edges(lat)) {
    MajoranaMonomial m = transfer_op(n, e.source, e.target).monomial;
    PauliString s(n);
    s.set_phase(m.phase);
    for (int a : m.indices) s = s * gamma(a);
    enc.transfer_image[{e.source, e.target}] = s;
    enc.edge_image[{e.source, e.target}] = (enc.parity_image[e.source] * s).times_i(3);
  }
  enc.convention = "Z-strings to the right; V_j = Z_j";
  detail::label_qubits(enc.layout);
  return enc;
}

enum class Variant1D { JWAugmented, SingleAncilla3Edge, Toric4Edge, Ratio3to2, Ratio2to1 };

inline Encoding encode_1d_variant(Variant1D cat, int chain_length, Boundary bc) {
  const int N = chain_length;
  auto xx = [](int n, int i, int k) {
    PauliString p(n);
    p.set(i, 'X');
    p.set(k, 'X');
    return p;
  };
  std::vector<std::pair<EdgeKey, PauliString>> edges;
  Encoding enc;
  switch (cat) {
    case Variant1D::JWAugmented: {
      if (bc != Boundary::Open || N < 2) throw std::invalid_argument("JWAugmented: open chain of length >= 2");
      int n = 2 * N - 1;
      enc = detail::local_base(EncodingKind::JWAugmented, Lattice(N, 1, bc), n);
      for (int j = 0; j + 1 < N; ++j) {
        enc.layout.ancilla.push_back({"b" + std::to_string(j), N + j});
        edges.push_back({{j, j + 1}, make_pauli(n, {{j, 'X'}, {j + 1, 'Y'}, {N + j, 'Z'}})});
      }
      enc.convention = "E_{j,j+1} = X_j Y_{j+1} Z_b(j), one ancilla per edge";
      break;
    }
    case Variant1D::SingleAncilla3Edge:
    case Variant1D::Toric4Edge: {
      bool toric = cat == Variant1D::Toric4Edge;
      if (N != 4 || (toric && bc != Boundary::Periodic) || (!toric && bc != Boundary::Open))
        throw std::invalid_argument(toric ? "Toric4Edge: periodic chain of length 4"
                                          : "SingleAncilla3Edge: open chain of length 4");
      int n = 5, a = 4;
      enc = detail::local_base(toric ? EncodingKind::Toric4Edge : EncodingKind::SingleAncilla3Edge,
                               Lattice(4, 1, bc), n);
      enc.layout.ancilla.push_back({"a", a});
      const char anc[4] = {'X', 'Z', 'X', 'Z'};
      for (int i = 0; i < (toric ? 4 : 3); ++i) {
        PauliString e = xx(n, i, (i + 1) % 4);
        e.set(a, anc[i]);
        // One flipped sign closes the loop with the right fermionic phase.
        if (toric && i == 0) e = -e;
        edges.push_back({{i, (i + 1) % 4}, e});
      }
      enc.convention = toric ? "E_i = X_i X_{i+1} (XZXZ)_a, E_0 negated" : "E_i = X_i X_{i+1} (XZX)_a";
      break;
    }
    case Variant1D::Ratio3to2: {
      if (bc != Boundary::Open || N < 3) throw std::invalid_argument("Ratio3to2: open chain of length >= 3");
      int E = N - 1, K = E / 2, n = N + K;
      enc = detail::local_base(EncodingKind::Ratio3to2, Lattice(N, 1, bc), n);
      for (int m = 0; m < K; ++m) enc.layout.ancilla.push_back({"c" + std::to_string(m), N + m});
      for (int i = 0; i < E; ++i) {
        PauliString e = xx(n, i, i + 1);
        // Ancilla c_m covers edges 2m, 2m+1, 2m+2 with letters X, Z, X.
        for (int m = 0; m < K; ++m)
          if (i >= 2 * m && i <= 2 * m + 2) e.set(N + m, i == 2 * m + 1 ? 'Z' : 'X');
        edges.push_back({{i, i + 1}, e});
      }
      enc.convention = "ancilla c_m on edges 2m..2m+2 with letters XZX";
      break;
    }
    case Variant1D::Ratio2to1: {
      if (bc != Boundary::Open || N < 3) throw std::invalid_argument("Ratio2to1: open chain of length >= 3");
      int n = 2 * N - 2;
      enc = detail::local_base(EncodingKind::Ratio2to1, Lattice(N, 1, bc), n);
      auto b = [N](int j) { return N + j - 1; };
      for (int j = 1; j + 1 < N; ++j) enc.layout.ancilla.push_back({"b" + std::to_string(j), b(j)});
      for (int i = 0; i + 1 < N; ++i) {
        PauliString e = xx(n, i, i + 1);
        if (i >= 1) e.set(b(i), 'Z');
        if (i + 1 <= N - 2) e.set(b(i + 1), 'X');
        edges.push_back({{i, i + 1}, e});
      }
      enc.convention = "E_i = X_i X_{i+1} Z_b(i) X_b(i+1), ancillas on interior sites";
      break;
    }
  }
  detail::complete_from_edges(enc, edges);
  detail::label_qubits(enc.layout);
  return enc;
}

// Verstraete-Cirac: a(j) = N + j. Letter P = X on even rows, Y on odd rows (row of the source).
inline Encoding vc_encode(const Lattice& lat) {
  if (lat.periodic()) throw std::invalid_argument("vc_encode: open lattices only");
  int N = lat.n_sites(), n = 2 * N;
  Encoding enc = detail::local_base(EncodingKind::VC, lat, n);
  for (int j = 0; j < N; ++j) enc.layout.ancilla.push_back({"a" + std::to_string(j), N + j});
  std::vector<EdgeKey> fwd;
  for (auto [j, k] : lat.bonds()) {
    char P = lat.y_of(j) % 2 == 0 ? 'X' : 'Y';
    PauliString s(n);
    s.set(j, P);
    s.set(k, P);
    if (k == lat.neighbor(j, Orientation::East)) {
      s.set(N + j, 'Z');
    } else {
      s.set(N + j, P);
      s.set(N + k, P);
    }
    enc.transfer_image[{j, k}] = s;
    fwd.push_back({j, k});
  }
  detail::complete_from_transfers(enc, fwd);
  enc.convention = "P = X on even rows, Y on odd rows; horizontal ancilla on the western site";
  detail::label_qubits(enc.layout);
  return enc;
}

// Ancilla faces of the Derby-Klassen layout: odd plaquettes (x + y odd); -1 if none.
inline int dk_face_index(const Lattice& lat, int x, int y) {
  int W = lat.width(), H = lat.height();
  if (lat.periodic()) {
    x = ((x % W) + W) % W;
    y = ((y % H) + H) % H;
  } else if (x < 0 || y < 0 || x >= W - 1 || y >= H - 1) {
    return -1;
  }
  if ((x + y) % 2 == 0) return -1;
  int idx = 0;
  int fw = lat.periodic() ? W : W - 1;
  for (int yy = 0; yy < y; ++yy)
    for (int xx = 0; xx < fw; ++xx)
      if ((xx + yy) % 2 != 0) ++idx;
  for (int xx = 0; xx < x; ++xx)
    if ((xx + y) % 2 != 0) ++idx;
  return idx;
}

inline Encoding dk_encode(const Lattice& lat) {
  int W = lat.width(), H = lat.height();
  if (W % 2 || H % 2) throw std::invalid_argument("dk_encode: even lattice dimensions required");
  int N = lat.n_sites();
  int fw = lat.periodic() ? W : W - 1, fh = lat.periodic() ? H : H - 1;
  int n_faces = 0;
  for (int y = 0; y < fh; ++y)
    for (int x = 0; x < fw; ++x)
      if ((x + y) % 2 != 0) ++n_faces;
  int n = N + n_faces;
  Encoding enc = detail::local_base(EncodingKind::DK, lat, n);
  for (int y = 0; y < fh; ++y)
    for (int x = 0; x < fw; ++x)
      if ((x + y) % 2 != 0)
        enc.layout.ancilla.push_back({"f(" + std::to_string(x) + "," + std::to_string(y) + ")",
                                      N + dk_face_index(lat, x, y)});
  std::vector<std::pair<EdgeKey, PauliString>> edges;
  for (auto [j, k] : lat.bonds()) {
    int x = lat.x_of(j), y = lat.y_of(j);
    bool horizontal = k == lat.neighbor(j, Orientation::East);
    int f = horizontal ? std::max(dk_face_index(lat, x, y), dk_face_index(lat, x, y - 1))
                       : std::max(dk_face_index(lat, x, y), dk_face_index(lat, x - 1, y));
    int s, t;
    PauliString e(n);
    if (horizontal) {
      bool east = y % 2 == 0;
      s = east ? j : k;
      t = east ? k : j;
      e.set(s, 'X');
      e.set(t, 'Y');
      if (f >= 0) e.set(N + f, 'Y');
    } else {
      bool north = x % 2 != 0;
      s = north ? j : k;
      t = north ? k : j;
      e.set(s, 'X');
      e.set(t, 'Y');
      if (f >= 0) e.set(N + f, 'X');
      if (north) e = -e;
    }
    edges.push_back({{s, t}, e});
  }
  detail::complete_from_edges(enc, edges);
  enc.convention =
      "ancilla faces x+y odd; horizontal bonds point east on even rows, vertical bonds north on odd columns";
  detail::label_qubits(enc.layout);
  return enc;
}

// Generalized superfast encoding, interleaved layout v(i) = 2i, h(i) = 2i + 1.
inline Encoding gse_encode(const Lattice& lat) {
  if (lat.periodic()) throw std::invalid_argument("gse_encode: open lattices only");
  int N = lat.n_sites(), n = 2 * N;
  Encoding enc;
  enc.kind = EncodingKind::GSE;
  enc.lattice = lat;
  enc.local_parity = false;
  enc.layout.n_qubits = n;
  enc.layout.physical.assign(N, -1);
  for (int i = 0; i < N; ++i) {
    enc.layout.ancilla.push_back({"v" + std::to_string(i), 2 * i});
    enc.layout.ancilla.push_back({"h" + std::to_string(i), 2 * i + 1});
    enc.parity_image.push_back(make_pauli(n, {{2 * i, 'Z'}, {2 * i + 1, 'Z'}}));
  }
  std::vector<EdgeKey> fwd;
  for (auto [j, k] : lat.bonds()) {
    PauliString s(n);
    if (k == lat.neighbor(j, Orientation::North)) {
      s = make_pauli(n, {{2 * j, 'Y'}, {2 * k, 'Y'}, {2 * k + 1, 'Z'}});
    } else {
      s = make_pauli(n, {{2 * j + 1, 'Y'}, {2 * k + 1, 'Y'}, {2 * j, 'Z'}});
    }
    enc.transfer_image[{j, k}] = s;
    fwd.push_back({j, k});
  }
  detail::complete_from_transfers(enc, fwd);
  enc.convention = "v(i) = 2i, h(i) = 2i+1; V_j = Z_v Z_h";
  detail::label_qubits(enc.layout);
  return enc;
}

// Kramers-Wannier dual of JW: N_f + 1 qubits, V_j = Z_j Z_{j+1}, T_{j,j+1} = X_{j+1}.
inline Encoding kw_dual_encode(int chain_length) {
  if (chain_length < 2) throw std::invalid_argument("kw_dual_encode: chain_length >= 2");
  int N = chain_length, n = N + 1;
  Encoding enc;
  enc.kind = EncodingKind::KWDual;
  enc.lattice = Lattice(N, 1, Boundary::Open);
  enc.local_parity = false;
  enc.layout.n_qubits = n;
  enc.layout.physical.assign(N, -1);
  for (int q = 0; q < n; ++q) enc.layout.ancilla.push_back({"d" + std::to_string(q), q});
  for (int j = 0; j < N; ++j) enc.parity_image.push_back(make_pauli(n, {{j, 'Z'}, {j + 1, 'Z'}}));
  std::vector<EdgeKey> fwd;
  for (int j = 0; j + 1 < N; ++j) {
    enc.transfer_image[{j, j + 1}] = PauliString::single(n, j + 1, 'X');
    fwd.push_back({j, j + 1});
  }
  detail::complete_from_transfers(enc, fwd);
  enc.convention = "T_{j+1,j} = -Z_j X_{j+1} Z_{j+2} (sign fixed by the product equality)";
  detail::label_qubits(enc.layout);
  return enc;
}

// Encoding names accepted by the CLI: jw, vc, dk, gse, kw.
inline Encoding make_encoding(const std::string& name, const Lattice& lat) {
  if (name == "jw" || name == "kw") {
    if (lat.height() != 1 || lat.periodic())
      throw std::invalid_argument(name + " needs an open 1D lattice (Wx1)");
    return name == "jw" ? jw_encode(lat.width()) : kw_dual_encode(lat.width());
  }
  if (name == "vc") return vc_encode(lat);
  if (name == "dk") return dk_encode(lat);
  if (name == "gse") return gse_encode(lat);
  throw std::invalid_argument("unknown encoding '" + name + "'");
}

// ---------------------------------------------------------------------------
// Validation

struct GaugeConstraint {
  PauliString stabilizer;            // +1 on the physical subspace
  std::vector<std::string> product;  // generator names whose product gives it
};

struct EncodingReport {
  std::string encoding;
  std::size_t n_terms = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> pair_violations;
  std::vector<std::string> product_shape_violations;
  std::vector<std::string> product_sign_violations;
  std::vector<std::string> hermiticity_violations;
  std::vector<std::string> relation_phase_violations;
  std::vector<GaugeConstraint> gauge_constraints;
  bool faithful = true;
  // Global fermion parity is a scalar on the code space (a superselection sector, not a violation).
  bool parity_fixed = false;

  std::size_t violation_count() const {
    return pair_violations.size() + product_shape_violations.size() + product_sign_violations.size() +
           hermiticity_violations.size() + relation_phase_violations.size() + (faithful ? 0 : 1);
  }
  bool ok() const { return violation_count() == 0; }
};

namespace detail {

struct Gen {
  std::string name;
  MajoranaMonomial m;
  PauliString p;
};

inline BitVec pauli_bits(const PauliString& p) {
  int n = p.n_qubits();
  BitVec b(2 * n);
  for (int q = 0; q < n; ++q) {
    if (p.x(q)) b.set(q);
    if (p.z(q)) b.set(n + q);
  }
  return b;
}

// Kernel basis of the GF(2) map i -> rows[i], as subsets of row indices.
inline std::vector<BitVec> gf2_kernel(std::vector<BitVec> rows) {
  std::size_t m = rows.size();
  std::vector<BitVec> track(m, BitVec(m));
  for (std::size_t i = 0; i < m; ++i) track[i].set(i);
  std::size_t r = 0;
  std::size_t width = m ? rows[0].size() : 0;
  for (std::size_t bit = 0; bit < width && r < m; ++bit) {
    std::size_t sel = m;
    for (std::size_t i = r; i < m; ++i)
      if (rows[i].get(bit)) {
        sel = i;
        break;
      }
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    std::swap(track[r], track[sel]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != r && rows[i].get(bit)) {
        rows[i] ^= rows[r];
        track[i] ^= track[r];
      }
    ++r;
  }
  return std::vector<BitVec>(track.begin() + static_cast<long>(r), track.end());
}

}  // namespace detail

inline EncodingReport validate_encoding(const Encoding& enc) {
  EncodingReport rep;
  rep.encoding = enc.name();
  const Lattice& lat = enc.lattice;
  int nf = lat.n_sites();
  std::vector<detail::Gen> terms;
  for (int j = 0; j < nf; ++j) terms.push_back({"V" + std::to_string(j), vertex_op(nf, j).monomial, enc.parity_image[j]});
  for (auto [j, k] : lat.bonds())
    terms.push_back({"E" + std::to_string(j) + "," + std::to_string(k), edge_op(nf, j, k).monomial, enc.edge(j, k)});
  for (const auto& e : directed_edges(lat))
    terms.push_back({"T" + std::to_string(e.source) + "," + std::to_string(e.target),
                     transfer_op(nf, e.source, e.target).monomial, enc.transfer(e.source, e.target)});
  rep.n_terms = terms.size();

  for (const auto& t : terms)
    if (!t.p.hermitian()) rep.hermiticity_violations.push_back(t.name + " -> " + t.p.sparse_str());

  for (std::size_t a = 0; a < terms.size(); ++a)
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      ++rep.pairs_checked;
      bool fm = majorana_commutes(terms[a].m, terms[b].m);
      bool qb = terms[a].p.commutes(terms[b].p);
      if (fm != qb)
        rep.pair_violations.push_back(terms[a].name + " / " + terms[b].name + ": fermionic " +
                                      (fm ? "commute" : "anticommute") + ", qubit " + (qb ? "commute" : "anticommute"));
    }

  for (const auto& e : directed_edges(lat)) {
    int j = e.source, k = e.target;
    PauliString rhs = -(enc.parity_image[j] * enc.parity_image[k] * enc.transfer(k, j));
    const PauliString& lhs = enc.transfer(j, k);
    std::string tag = "T" + std::to_string(j) + "," + std::to_string(k);
    if (!rhs.same_letters(lhs))
      rep.product_shape_violations.push_back(tag + ": " + lhs.sparse_str() + " vs " + rhs.sparse_str());
    else if (rhs.phase() != lhs.phase())
      rep.product_sign_violations.push_back(tag + ": " + lhs.sparse_str() + " vs " + rhs.sparse_str());
  }

  // Relations among the generators V_j, T_jk: identity products must carry the fermionic phase.
  std::vector<detail::Gen> gens;
  for (const auto& t : terms)
    if (t.name[0] != 'E') gens.push_back(t);
  std::vector<BitVec> mrows, prows;
  for (const auto& g : gens) {
    mrows.push_back(majorana_bits(g.m));
    prows.push_back(detail::pauli_bits(g.p));
  }
  for (const auto& combo : detail::gf2_kernel(mrows)) {
    MajoranaMonomial fm{nf, {}, 0};
    PauliString pq(enc.n_qubits());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (combo.get(i)) {
        fm = majorana_mul(fm, gens[i].m);
        pq = pq * gens[i].p;
        names.push_back(gens[i].name);
      }
    PauliString g = pq.times_i(4 - fm.phase);
    if (g.is_identity()) {
      if (g.phase() != 0) {
        std::string s;
        for (auto& nm : names) s += nm + " ";
        rep.relation_phase_violations.push_back("product " + s + "gives " + g.str().substr(0, 2) + " I");
      }
    } else if (!g.hermitian()) {
      rep.relation_phase_violations.push_back("non-hermitian gauge product " + g.sparse_str());
    } else {
      rep.gauge_constraints.push_back({g, names});
    }
  }
  // A Pauli relation must be a fermionic relation too; the only tolerated exception is the total parity.
  for (const auto& combo : detail::gf2_kernel(prows)) {
    BitVec acc(2 * nf);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (combo.get(i)) acc ^= mrows[i];
    if (acc.count() == 2 * nf)
      rep.parity_fixed = true;
    else if (acc.any())
      rep.faithful = false;
  }
  return rep;
}

}  // namespace fflow
