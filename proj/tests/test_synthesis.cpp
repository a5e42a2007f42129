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

#include <numeric>
#include <random>

#include "fflow/dense.hpp"
#include "fflow/fflow.hpp"

using namespace fflow;

namespace {

PauliString ps(const std::string& s) { return PauliString::parse(s); }

Circuit random_clifford(std::mt19937& rng, int n, int layers) {
  Circuit c(n);
  for (int l = 0; l < layers; ++l) {
    std::vector<int> qs(n);
    std::iota(qs.begin(), qs.end(), 0);
    std::shuffle(qs.begin(), qs.end(), rng);
    std::vector<Gate> gates;
    for (int i = 0; i + 1 < n; i += 2) {
      switch (rng() % 6) {
        case 0: gates.push_back(Gate::cx(qs[i], qs[i + 1])); break;
        case 1: gates.push_back(Gate::cz(qs[i], qs[i + 1])); break;
        case 2: gates.push_back(Gate::swap(qs[i], qs[i + 1])); break;
        case 3: gates.push_back(Gate::h(qs[i])); gates.push_back(Gate::s(qs[i + 1])); break;
        case 4: gates.push_back(Gate::sdg(qs[i])); gates.push_back(Gate::h(qs[i + 1])); break;
        default: break;
      }
    }
    c.add_layer(gates);
  }
  return c;
}

struct Case {
  std::string what;
  Encoding enc;
  Strategy strategy;
};

}  // namespace

TEST_CASE("CX conjugation table", "[tableau]") {
  Circuit c(2);
  c.add_layer({Gate::cx(0, 1)});
  CHECK(conjugate_pauli(c, ps("IZ")) == ps("ZZ"));
  CHECK(conjugate_pauli(c, ps("XI")) == ps("XX"));
  CHECK(conjugate_pauli(c, ps("ZI")) == ps("ZI"));
  CHECK(conjugate_pauli(c, ps("IX")) == ps("IX"));
  CHECK(conjugate_pauli(c, ps("YY")) == ps("-XZ"));
  c.add_layer({Gate::cx(0, 1)});
  Tableau t(2);
  t.apply(c);
  CHECK(t.is_identity());
}

TEST_CASE("single-qubit Clifford images", "[tableau]") {
  auto img = [](Gate g, const char* p) {
    Circuit c(1);
    c.add_layer({g});
    return conjugate_pauli(c, ps(p));
  };
  CHECK(img(Gate::h(0), "X") == ps("Z"));
  CHECK(img(Gate::h(0), "Y") == ps("-Y"));
  CHECK(img(Gate::s(0), "X") == ps("Y"));
  CHECK(img(Gate::s(0), "Y") == ps("-X"));
  CHECK(img(Gate::sdg(0), "X") == ps("-Y"));
  CHECK(img(Gate::s(0), "Z") == ps("Z"));
  Circuit r(1);
  r.add_layer({Gate::rz(0, 0.1)});
  CHECK_THROWS(conjugate_pauli(r, ps("X")));
}

TEST_CASE("tableau agrees with dense conjugation on random Cliffords", "[tableau][oracle]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 6;
    Circuit c = random_clifford(rng, n, 8);
    Matrix u = circuit_to_unitary(c);
    Tableau t(n);
    t.apply(c);
    CHECK(t.symplectic());
    for (int k = 0; k < 5; ++k) {
      PauliString p(n);
      for (int q = 0; q < n; ++q) p.set(q, "IXYZ"[rng() % 4]);
      PauliString img = conjugate_pauli(c, p);
      CHECK(t.conjugate(p) == img);
      CHECK((pauli_to_matrix(img) - u * pauli_to_matrix(p) * u.adjoint()).norm() < 1e-10);
    }
    Tableau back(n);
    back.apply(c);
    back.apply(c.inverse());
    CHECK(back.is_identity());
  }
}

TEST_CASE("permutation gates move states and lower to swaps", "[circuit]") {
  Circuit c(4);
  c.add_layer({Gate::permute({0, 1, 2, 3}, {3, 0, 1, 2})});
  // State on targets[perm[i]] moves to targets[i]: Z on qubit 3 ends on qubit 0.
  CHECK(conjugate_pauli(c, ps("IIIZ")) == ps("ZIII"));
  Circuit low = lower_permutations(c);
  for (const auto& l : low.layers())
    for (const auto& g : l.gates) CHECK(g.kind == GateKind::SWAP);
  CHECK(conjugate_pauli(low, ps("IIIZ")) == ps("ZIII"));
  CHECK(cx_depth(c, DepthMode::NativeTwoQubit) == cx_depth(low, DepthMode::NativeTwoQubit));
}

TEST_CASE("cx depth counts swaps natively or as three CX", "[circuit]") {
  Circuit c(4);
  c.add_layer({Gate::h(0)});
  c.add_layer({Gate::swap(0, 1), Gate::cx(2, 3)});
  c.add_layer({Gate::cz(1, 2)});
  c.add_layer({Gate::rz(3, 0.5)});
  CHECK(cx_depth(c, DepthMode::NativeTwoQubit) == 2);
  CHECK(cx_depth(c, DepthMode::CXDecomposed) == 4);
  auto lc = layer_counts(c);
  CHECK(lc.swap_layers == 1);
  CHECK(lc.two_qubit_gates == 3);
  CHECK(lc.rotations == 1);
  CHECK_THROWS(c.add_layer({Gate::cx(0, 1), Gate::h(1)}));
  CHECK_THROWS(c.add_layer({Gate::cx(0, 4)}));
}

TEST_CASE("component encoders meet their family depth bounds", "[synthesis]") {
  std::vector<Case> cases = {
      {"jw6 line", jw_encode(6), Strategy::Line},
      {"jwaug line", encode_1d_variant(Variant1D::JWAugmented, 5, Boundary::Open), Strategy::Line},
      {"tri3 line", encode_1d_variant(Variant1D::SingleAncilla3Edge, 4, Boundary::Open), Strategy::Line},
      {"toric line", encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic), Strategy::Line},
      {"mixed line", encode_1d_variant(Variant1D::Ratio3to2, 9, Boundary::Open), Strategy::Line},
      {"square line", encode_1d_variant(Variant1D::Ratio2to1, 6, Boundary::Open), Strategy::Line},
      {"vc line", vc_encode(Lattice(4, 4, Boundary::Open)), Strategy::Line},
      {"gse line", gse_encode(Lattice(4, 4, Boundary::Open)), Strategy::Line},
      {"dk plaquette", dk_encode(Lattice(4, 4, Boundary::Periodic)), Strategy::Plaquette},
      {"kw line", kw_dual_encode(6), Strategy::Line}};
  for (const auto& cs : cases) {
    INFO(cs.what);
    for (const auto& fs : flow_sets_for(cs.strategy, cs.enc.lattice))
      for (const auto& cc : fs.components) {
        INFO(fs.label);
        auto cat = resolve_category(cs.enc, cc);
        auto ce = synthesize_component_encoder(cat, cc, cs.enc);
        int bound = category_depth_bound(cat, cc.edges.size());
        if (bound >= 0) CHECK(ce.entangling_depth <= bound);
        CHECK(verify_encoder(ce.circuit, component_stabilizers(cc, cs.enc)).ok);
        CHECK(ce.circuit.clifford());
      }
  }
}

TEST_CASE("specific encoder depths", "[synthesis]") {
  for (int n = 3; n <= 8; ++n) {
    auto enc = jw_encode(n);
    auto cc = line_flow_sets(enc.lattice)[2].components.at(0);
    CHECK(synthesize_component_encoder(EncoderCategory::JWLadder, cc, enc).entangling_depth == n - 1);
  }
  auto tor = encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic);
  auto loop = line_flow_sets(tor.lattice)[2].components.at(0);
  CHECK(synthesize_component_encoder(EncoderCategory::ToricPeriodic, loop, tor).entangling_depth == 4);
  auto kw = kw_dual_encode(8);
  auto sets = line_flow_sets(kw.lattice);
  CHECK(synthesize_component_encoder(resolve_category(kw, sets[2].components[0]), sets[2].components[0], kw)
            .entangling_depth == 0);
  CHECK(synthesize_component_encoder(EncoderCategory::KWCZLayers, sets[3].components[0], kw).entangling_depth == 2);
}

TEST_CASE("wrong template shapes are rejected", "[synthesis]") {
  auto enc = jw_encode(4);
  auto petal = petal_flow_sets(enc.lattice)[0].components[0];
  CHECK_THROWS_AS(synthesize_component_encoder(EncoderCategory::JWLadder, petal, enc), std::invalid_argument);
  auto vc = vc_encode(Lattice(4, 2, Boundary::Open));
  auto cc = line_flow_sets(vc.lattice)[2].components[0];
  CHECK_THROWS(synthesize_component_encoder(EncoderCategory::GSEHorizontalSwapped, cc, vc));
}

TEST_CASE("verify_encoder names the failing stabilizer", "[synthesis][mutation]") {
  auto enc = jw_encode(4);
  auto cc = line_flow_sets(enc.lattice)[2].components[0];
  auto stabs = component_stabilizers(cc, enc);
  std::vector<std::string> names = {"T0,1", "T1,2", "T2,3"};
  auto id = verify_encoder(Circuit(4), stabs, names);
  CHECK_FALSE(id.ok);
  CHECK(id.diagnostic.find("T0,1") != std::string::npos);

  auto ce = synthesize_component_encoder(EncoderCategory::JWLadder, cc, enc);
  Circuit broken = ce.circuit;
  for (auto& l : broken.layers())
    if (l.entangling()) {
      l.gates.erase(std::find_if(l.gates.begin(), l.gates.end(), [](const Gate& g) { return g.two_qubit(); }));
      break;
    }
  auto chk = verify_encoder(broken, stabs, names);
  CHECK_FALSE(chk.ok);
  CHECK(chk.diagnostic.find("T") != std::string::npos);
}

TEST_CASE("encoder followed by its inverse is the identity", "[synthesis]") {
  auto enc = vc_encode(Lattice(4, 4, Boundary::Open));
  for (const auto& fs : line_flow_sets(enc.lattice)) {
    auto cc = fs.components.at(0);
    auto ce = synthesize_component_encoder(resolve_category(enc, cc), cc, enc);
    Tableau t(enc.n_qubits());
    t.apply(ce.circuit);
    t.apply(ce.circuit.inverse());
    CHECK(t.is_identity());
  }
}

TEST_CASE("local Clifford words", "[synthesis]") {
  CHECK(detail::local_clifford({{'Z', 'Z'}}).empty());
  CHECK(detail::local_clifford({{'X', 'Z'}}) == std::vector<GateKind>{GateKind::H});
  auto w = detail::local_clifford({{'Y', 'Z'}});
  CHECK(detail::conj_letter('Y', w) == 'Z');
  CHECK(w.size() == 2);
}

TEST_CASE("minimum CX search and depth-1 certificates", "[synthesis]") {
  auto tor = encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic);
  auto loop = line_flow_sets(tor.lattice)[2].components.at(0);
  auto res = search_min_cx_encoder(component_stabilizers(loop, tor), tor.n_qubits(), 4);
  CHECK(res.found);
  CHECK(res.depth == 3);

  auto vc = vc_encode(Lattice(4, 1, Boundary::Open));
  auto row = line_flow_sets(vc.lattice)[2].components.at(0);
  auto cert = depth1_certificate(component_stabilizers(row, vc));
  CHECK(cert.max_weight == 3);
  CHECK(cert.partitions_checked > 0);
  CHECK(cert.cx_layers_checked > 0);
  CHECK_FALSE(cert.depth1_possible());

  // Two weight-2 stabilizers on disjoint pairs admit a single CX layer.
  auto easy = depth1_certificate({ps("ZZII"), ps("IIZZ")});
  CHECK(easy.depth1_possible());
}
