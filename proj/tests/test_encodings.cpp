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

#include <catch_amalgamated.hpp>

#include "fflow/encodings.hpp"

using namespace fflow;

namespace {

PauliString ps(const std::string& s) { return PauliString::parse(s); }

// JW images built independently from the textbook Majorana strings (strings to the right).
PauliString jw_gamma(int n, int a) {
  PauliString p(n);
  p.set(a / 2, a % 2 ? 'Y' : 'X');
  for (int q = a / 2 + 1; q < n; ++q) p.set(q, 'Z');
  return p;
}

}  // namespace

TEST_CASE("JW images match Majorana strings", "[encodings]") {
  auto enc = jw_encode(4);
  CHECK(enc.n_qubits() == 4);
  for (const auto& e : directed_edges(enc.lattice)) {
    auto m = transfer_op(4, e.source, e.target).monomial;
    PauliString want(4);
    want.set_phase(m.phase);
    for (int a : m.indices) want = want * jw_gamma(4, a);
    CHECK(enc.transfer(e.source, e.target) == want);
  }
  CHECK(enc.transfer(0, 1) == ps("-YYII"));
  CHECK(enc.transfer(1, 0) == ps("-XXII"));
  CHECK(enc.edge(0, 1) == ps("XYII"));
  CHECK(enc.parity_image[2] == ps("IIZI"));
}

TEST_CASE("JW length 1 has parities only", "[encodings]") {
  auto enc = jw_encode(1);
  CHECK(enc.transfer_image.empty());
  CHECK(enc.parity_image.size() == 1);
  CHECK(validate_encoding(enc).ok());
}

TEST_CASE("isomorphism suite: every shipped encoding validates", "[encodings]") {
  std::vector<Encoding> encs = {
      jw_encode(6),
      encode_1d_variant(Variant1D::JWAugmented, 5, Boundary::Open),
      encode_1d_variant(Variant1D::SingleAncilla3Edge, 4, Boundary::Open),
      encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic),
      encode_1d_variant(Variant1D::Ratio3to2, 9, Boundary::Open),
      encode_1d_variant(Variant1D::Ratio2to1, 6, Boundary::Open),
      vc_encode(Lattice(4, 4, Boundary::Open)),
      dk_encode(Lattice(4, 4, Boundary::Periodic)),
      dk_encode(Lattice(4, 4, Boundary::Open)),
      gse_encode(Lattice(4, 4, Boundary::Open)),
      kw_dual_encode(8)};
  for (const auto& enc : encs) {
    INFO(enc.name());
    auto r = validate_encoding(enc);
    CHECK(r.pair_violations.empty());
    CHECK(r.product_shape_violations.empty());
    CHECK(r.product_sign_violations.empty());
    CHECK(r.hermiticity_violations.empty());
    CHECK(r.relation_phase_violations.empty());
    CHECK(r.faithful);
    CHECK(r.pairs_checked == r.n_terms * (r.n_terms - 1) / 2);
  }
}

TEST_CASE("1D variant qubit counts and weights", "[encodings]") {
  auto aug = encode_1d_variant(Variant1D::JWAugmented, 2, Boundary::Open);
  CHECK(aug.n_qubits() == 3);
  CHECK(aug.transfer(0, 1).weight() == 3);
  auto r32 = encode_1d_variant(Variant1D::Ratio3to2, 5, Boundary::Open);
  CHECK(r32.n_qubits() == 7);
  std::vector<int> w;
  for (int i = 0; i < 4; ++i) w.push_back(r32.transfer(i, i + 1).weight());
  // Edges sharing two ancillas sit between ones sharing one.
  CHECK(w == std::vector<int>{3, 3, 4, 3});
  auto r21 = encode_1d_variant(Variant1D::Ratio2to1, 4, Boundary::Open);
  CHECK(r21.n_qubits() == 6);
  CHECK(r21.transfer(1, 2).weight() == 4);
  CHECK(r21.transfer(0, 1).weight() == 3);
  auto tor = encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic);
  CHECK(tor.n_qubits() == 5);
  CHECK(tor.transfer_image.size() == 8);
  CHECK_THROWS(encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Open));
}

TEST_CASE("VC images: weight-3 horizontal, weight-4 vertical, Z parity", "[encodings]") {
  Lattice lat(4, 4, Boundary::Open);
  auto enc = vc_encode(lat);
  int N = 16;
  CHECK(enc.n_qubits() == 32);
  CHECK(enc.transfer(0, 1) == make_pauli(32, {{0, 'X'}, {1, 'X'}, {N + 0, 'Z'}}));
  // Odd row: Y letters on the vertical edge starting there.
  int j = lat.site(1, 1), k = lat.site(1, 2);
  CHECK(enc.transfer(j, k) == make_pauli(32, {{j, 'Y'}, {k, 'Y'}, {N + j, 'Y'}, {N + k, 'Y'}}));
  CHECK(enc.parity_image[5] == PauliString::single(32, 5, 'Z'));
  for (auto [a, b] : lat.bonds()) CHECK(enc.transfer(a, b).weight() == (b == a + 1 ? 3 : 4));
}

TEST_CASE("VC with the column-parity letter rule breaks the isomorphism", "[encodings][mutation]") {
  Lattice lat(4, 4, Boundary::Open);
  auto enc = vc_encode(lat);
  // Rebuild the forward images with P chosen by the column of j instead of its row.
  for (auto [j, k] : lat.bonds()) {
    char P = lat.x_of(j) % 2 == 0 ? 'X' : 'Y';
    PauliString s(32);
    s.set(j, P);
    s.set(k, P);
    if (k == j + 1) {
      s.set(16 + j, 'Z');
    } else {
      s.set(16 + j, P);
      s.set(16 + k, P);
    }
    enc.transfer_image[{j, k}] = s;
  }
  CHECK_FALSE(validate_encoding(enc).ok());
}

TEST_CASE("DK layout: 24 qubits on 4x4 periodic and signed vertical edges", "[encodings]") {
  Lattice lat(4, 4, Boundary::Periodic);
  auto enc = dk_encode(lat);
  CHECK(enc.n_qubits() == 24);
  CHECK(enc.layout.ancilla.size() == 8);
  CHECK(dk_face_index(lat, 0, 0) == -1);
  CHECK(dk_face_index(lat, 1, 0) == 0);
  // Vertical bonds: north-pointing edges (odd x) carry the negative sign and ancilla letter X.
  int s = lat.site(1, 1), t = lat.site(1, 2);
  auto e = enc.edge(s, t);
  CHECK(e.phase() == 2);
  CHECK(e.letter(16 + dk_face_index(lat, 0, 1)) == 'X');
  CHECK(e.weight() == 3);
  int s2 = lat.site(0, 2), t2 = lat.site(0, 1);  // even column points south
  CHECK(enc.edge(s2, t2).phase() == 0);
  CHECK(enc.edge(s2, t2).letter(16 + dk_face_index(lat, 0, 1)) == 'X');
  // Horizontal bonds carry ancilla letter Y.
  auto h = enc.edge(lat.site(0, 0), lat.site(1, 0));
  CHECK(h.letter(16 + dk_face_index(lat, 0, 3)) == 'Y');
  CHECK(dk_encode(Lattice(4, 4, Boundary::Open)).n_qubits() == 20);
  CHECK_THROWS(dk_encode(Lattice(3, 3, Boundary::Periodic)));
}

TEST_CASE("DK fixes the global parity, other encodings do not", "[encodings]") {
  auto dk = validate_encoding(dk_encode(Lattice(4, 4, Boundary::Periodic)));
  CHECK(dk.ok());
  CHECK(dk.parity_fixed);
  CHECK_FALSE(validate_encoding(jw_encode(4)).parity_fixed);
  CHECK_FALSE(validate_encoding(vc_encode(Lattice(2, 2, Boundary::Open))).parity_fixed);
}

TEST_CASE("GSE images", "[encodings]") {
  Lattice lat(2, 2, Boundary::Open);
  auto enc = gse_encode(lat);
  CHECK(enc.n_qubits() == 8);
  // north edge 0 -> 2: Y_v0 Y_v2 Z_h2; south edge 2 -> 0: X_v0 X_v2 Z_h0 (up to sign).
  CHECK(enc.transfer(0, 2).same_letters(make_pauli(8, {{0, 'Y'}, {4, 'Y'}, {5, 'Z'}})));
  CHECK(enc.transfer(2, 0).same_letters(make_pauli(8, {{0, 'X'}, {4, 'X'}, {1, 'Z'}})));
  CHECK(enc.parity_image[1] == make_pauli(8, {{2, 'Z'}, {3, 'Z'}}));
  CHECK_FALSE(enc.local_parity);
}

TEST_CASE("KW dual images", "[encodings]") {
  auto enc = kw_dual_encode(6);
  CHECK(enc.n_qubits() == 7);
  CHECK(enc.transfer(0, 1) == PauliString::single(7, 1, 'X'));
  CHECK(enc.transfer(1, 0) == -make_pauli(7, {{0, 'Z'}, {1, 'X'}, {2, 'Z'}}));
  CHECK(kw_dual_encode(2).n_qubits() == 3);
}

TEST_CASE("KW with the unsigned reverse transfer fails the product equality", "[encodings][mutation]") {
  auto enc = kw_dual_encode(4);
  enc.transfer_image[{1, 0}] = make_pauli(5, {{0, 'Z'}, {1, 'X'}, {2, 'Z'}});
  auto r = validate_encoding(enc);
  CHECK_FALSE(r.product_sign_violations.empty());
}

TEST_CASE("corrupted images are detected", "[encodings][mutation]") {
  auto enc = jw_encode(4);
  auto& t = enc.transfer_image[{1, 2}];
  t.set(1, 'X');  // flip one letter
  auto r = validate_encoding(enc);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.pair_violations.empty());
  bool named = false;
  for (const auto& v : r.pair_violations) named = named || v.find("T1,2") != std::string::npos;
  CHECK(named);
}

TEST_CASE("Toric loop sign is caught by the relation check only", "[encodings][mutation]") {
  auto enc = encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic);
  // Undo the closing sign: rebuild every image with E_0 positive.
  auto& e0 = enc.edge_image[{0, 1}];
  e0 = -e0;
  enc.edge_image[{1, 0}] = -enc.edge_image[{1, 0}];
  enc.transfer_image[{0, 1}] = -enc.transfer_image[{0, 1}];
  enc.transfer_image[{1, 0}] = -enc.transfer_image[{1, 0}];
  auto r = validate_encoding(enc);
  CHECK(r.pair_violations.empty());
  CHECK(r.product_sign_violations.empty());
  CHECK_FALSE(r.relation_phase_violations.empty());
}

TEST_CASE("gauge constraints of VC 2x2", "[encodings]") {
  auto r = validate_encoding(vc_encode(Lattice(2, 2, Boundary::Open)));
  CHECK(r.ok());
  CHECK(r.gauge_constraints.size() == 2);
  for (const auto& g : r.gauge_constraints) CHECK(g.stabilizer.hermitian());
}

TEST_CASE("make_encoding dispatch", "[encodings]") {
  CHECK(make_encoding("vc", Lattice(2, 2, Boundary::Open)).kind == EncodingKind::VC);
  CHECK(make_encoding("kw", Lattice(5, 1, Boundary::Open)).n_qubits() == 6);
  CHECK_THROWS(make_encoding("jw", Lattice(2, 2, Boundary::Open)));
  CHECK_THROWS(make_encoding("bk", Lattice(2, 2, Boundary::Open)));
}
