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

#include "fflow/fflow.hpp"

using namespace fflow;

namespace {

CompilationPlan plan(const std::string& enc, Strategy s) {
  CompilationPlan p;
  p.encoding = enc;
  p.strategy = s;
  p.dt = 0.1;
  return p;
}

}  // namespace

TEST_CASE("VC line step has entangling depth 16 independent of size", "[trotter]") {
  for (int L : {4, 6}) {
    auto enc = vc_encode(Lattice(L, L, Boundary::Open));
    auto tc = compile_trotter_step(enc, plan("vc", Strategy::Line));
    CHECK(tc.report.cx_depth_native == 16);
    REQUIRE(tc.factors.size() == 4);
    for (const auto& f : tc.factors) CHECK(f.native_depth == 4);
    CHECK(tc.factors[0].label == "EA");
    CHECK(tc.factors[1].realized_by.find("R^Z(+pi/2)") != std::string::npos);
    CHECK(tc.factors[3].realized_by == "direct");
    CHECK(tc.report.qubits == 2 * L * L);
    CHECK(tc.report.ratio == 2.0);
  }
}

TEST_CASE("VC petal baseline depth", "[trotter]") {
  auto enc = vc_encode(Lattice(4, 4, Boundary::Open));
  auto tc = compile_petal_baseline(enc, 1.0, 0.1);
  CHECK(tc.report.cx_depth_native == 40);
  REQUIRE(tc.factors.size() == 4);
  CHECK(tc.factors[0].native_depth == 8);
  CHECK(tc.factors[2].native_depth == 12);
  REQUIRE_FALSE(tc.report.notes.empty());
  CHECK(tc.report.notes[0].find("44") != std::string::npos);
  CHECK(tc.report.notes[0].find("not compiled") != std::string::npos);
}

TEST_CASE("GSE line step counts SWAP layers separately", "[trotter]") {
  auto enc = gse_encode(Lattice(4, 4, Boundary::Open));
  auto tc = compile_trotter_step(enc, plan("gse", Strategy::Line));
  CHECK(tc.report.cx_depth_native == 18);
  CHECK(tc.report.cx_depth_cx == 22);
  CHECK(tc.report.swap_layers == 2);
  CHECK(tc.report.cx_layers == 16);
}

TEST_CASE("DK with line flow sets is inadmissible; plaquettes compile", "[trotter]") {
  auto enc = dk_encode(Lattice(4, 4, Boundary::Open));
  try {
    compile_trotter_step(enc, plan("dk", Strategy::Line));
    FAIL("expected InadmissibleError");
  } catch (const InadmissibleError& e) {
    CHECK(std::string(e.what()).find("overlapping ancilla supports") != std::string::npos);
  }
  auto tc = compile_trotter_step(enc, plan("dk", Strategy::Plaquette));
  CHECK(tc.report.cx_depth_native == 32);
  auto per = dk_encode(Lattice(4, 4, Boundary::Periodic));
  CHECK(compile_trotter_step(per, plan("dk", Strategy::Plaquette)).report.cx_depth_native == 32);
}

TEST_CASE("KW step: weight-1 set is free, CZ set has depth 4", "[trotter]") {
  auto enc = kw_dual_encode(8);
  auto tc = compile_trotter_step(enc, plan("kw", Strategy::Line));
  REQUIRE(tc.factors.size() == 2);
  CHECK(tc.factors[0].label == "EA");
  CHECK(tc.factors[0].native_depth == 0);
  CHECK(tc.factors[1].native_depth == 4);
  REQUIRE(tc.report.notes.size() == 2);
  CHECK(tc.report.notes[1].find("CZ-layer set") != std::string::npos);
}

TEST_CASE("1D encodings compile with line flow sets", "[trotter]") {
  struct Want {
    Encoding enc;
    int factor_depth;
  };
  std::vector<Want> wants = {
      {encode_1d_variant(Variant1D::JWAugmented, 6, Boundary::Open), 4},
      {encode_1d_variant(Variant1D::SingleAncilla3Edge, 4, Boundary::Open), 4},
      {encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic), 8},
      {encode_1d_variant(Variant1D::Ratio3to2, 7, Boundary::Open), 6},
      {encode_1d_variant(Variant1D::Ratio2to1, 6, Boundary::Open), 4}};
  for (const auto& w : wants) {
    INFO(w.enc.name());
    auto tc = compile_trotter_step(w.enc, plan("", Strategy::Line));
    for (const auto& f : tc.factors) CHECK(f.native_depth == w.factor_depth);
  }
}

TEST_CASE("steps repeat the step circuit", "[trotter]") {
  auto enc = vc_encode(Lattice(4, 4, Boundary::Open));
  auto one = compile_trotter(enc, plan("vc", Strategy::Line), 1);
  auto three = compile_trotter(enc, plan("vc", Strategy::Line), 3);
  CHECK(three.report.cx_depth_native == 3 * one.report.cx_depth_native);
  CHECK(three.circuit.layers().size() == 3 * one.circuit.layers().size());
  CHECK_THROWS(compile_trotter(enc, plan("vc", Strategy::Line), 0));
}

TEST_CASE("custom order and bad labels", "[trotter]") {
  auto enc = vc_encode(Lattice(4, 4, Boundary::Open));
  auto p = plan("vc", Strategy::Line);
  p.order = {"NO", "SO", "EA", "WE"};
  auto tc = compile_trotter_step(enc, p);
  CHECK(tc.factors[0].label == "NO");
  CHECK(tc.report.cx_depth_native == 16);
  p.order = {"XX"};
  CHECK_THROWS_AS(compile_trotter_step(enc, p), std::invalid_argument);
}

TEST_CASE("rotation angles are +-J dt", "[trotter]") {
  auto enc = jw_encode(4);
  auto p = plan("jw", Strategy::Line);
  p.dt = 0.25;
  p.J = 2.0;
  auto tc = compile_trotter_step(enc, p);
  int n_rot = 0;
  for (const auto& l : tc.circuit.layers())
    for (const auto& g : l.gates)
      if (g.rotation()) {
        ++n_rot;
        CHECK(std::abs(std::abs(g.angle) - 0.5) < 1e-15);
      }
  CHECK(n_rot == 6);
}

TEST_CASE("merged encoder layers keep their tags", "[trotter]") {
  auto enc = vc_encode(Lattice(4, 4, Boundary::Open));
  auto f = compile_flow_set_factor(enc, line_flow_sets(enc.lattice)[2], 1.0, 0.1);
  for (const auto& l : f.circuit.layers()) CHECK(l.tag.rfind("EA", 0) == 0);
  CHECK(f.info.components == 4);
  CHECK(f.info.categories.front() == "VCTriangle");
}
