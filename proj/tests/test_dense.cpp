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

#include "fflow/dense.hpp"

using namespace fflow;

namespace {

PauliString ps(const std::string& s) { return PauliString::parse(s); }

Matrix eye(int n) { return Matrix::Identity(1L << n, 1L << n); }

CompilationPlan plan(Strategy s, double dt) {
  CompilationPlan p;
  p.strategy = s;
  p.dt = dt;
  return p;
}

}  // namespace

TEST_CASE("gate matrices", "[dense]") {
  Circuit c(2);
  c.add_layer({Gate::cx(0, 1)});
  Matrix u = circuit_to_unitary(c);
  // Little endian: basis |q1 q0>; control q0 = 1 flips q1.
  CHECK(std::abs(u(3, 1) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(u(1, 3) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(u(0, 0) - cplx(1, 0)) < 1e-15);
  Circuit r(1);
  r.add_layer({Gate::rz(0, 0.3)});
  Matrix rz = circuit_to_unitary(r);
  CHECK(std::abs(rz(0, 0) - std::exp(cplx(0, -0.15))) < 1e-15);
  CHECK(std::abs(rz(1, 1) - std::exp(cplx(0, 0.15))) < 1e-15);
  CHECK(unitarity_defect(circuit_to_unitary(Circuit(3))) < 1e-15);
}

TEST_CASE("ham_exp examples", "[dense]") {
  PauliSum x = {{ps("X"), 1.0}};
  CHECK(unitary_distance(ham_exp(x, 0.0), eye(1)) < 1e-14);
  double t = 0.7;
  Matrix want = std::cos(t) * eye(1) - cplx(0, 1) * std::sin(t) * pauli_to_matrix(ps("X"));
  CHECK((ham_exp(x, t) - want).norm() < 1e-13);

  PauliSum h = {{ps("ZIX"), 0.4}, {ps("YYI"), -1.1}, {ps("IXZ"), 0.3}};
  CHECK(unitary_distance(ham_exp(h, 0.9) * ham_exp(h, -0.9), eye(3)) < 1e-12);
  CHECK_THROWS(ham_exp({{ps("+iX"), 1.0}}, 0.1));
}

TEST_CASE("two-site JW hopping has eigenvalues -J, 0, 0, J", "[dense]") {
  auto enc = jw_encode(2);
  double J = 1.3;
  Eigen::SelfAdjointEigenSolver<Matrix> es(pauli_sum_matrix(encoded_hamiltonian(enc, J)));
  auto ev = es.eigenvalues();
  CHECK(ev(0) == Catch::Approx(-J));
  CHECK(std::abs(ev(1)) < 1e-12);
  CHECK(std::abs(ev(2)) < 1e-12);
  CHECK(ev(3) == Catch::Approx(J));
}

TEST_CASE("unitary distance", "[dense]") {
  Matrix X = pauli_to_matrix(ps("X"));
  CHECK(unitary_distance(eye(1), X) == Catch::Approx(2.0));
  CHECK(unitary_distance(X, cplx(0, 1) * X) < 1e-14);  // global phase ignored
  CHECK(unitary_distance(eye(2), eye(2)) == 0.0);
  CHECK_THROWS(unitary_distance(eye(1), eye(2)));
}

TEST_CASE("flow-set factors are exact", "[dense][oracle]") {
  std::vector<std::pair<Encoding, Strategy>> cases = {
      {vc_encode(Lattice(2, 2, Boundary::Open)), Strategy::Line},
      {jw_encode(6), Strategy::Line},
      {gse_encode(Lattice(2, 2, Boundary::Open)), Strategy::Line},
      {vc_encode(Lattice(2, 2, Boundary::Open)), Strategy::Petal},
      {encode_1d_variant(Variant1D::Toric4Edge, 4, Boundary::Periodic), Strategy::Line},
      {encode_1d_variant(Variant1D::Ratio3to2, 5, Boundary::Open), Strategy::Line},
      {kw_dual_encode(6), Strategy::Line},
      {dk_encode(Lattice(2, 2, Boundary::Open)), Strategy::Plaquette}};
  for (const auto& [enc, s] : cases)
    for (double dt : {0.05, 0.3, 1.0}) {
      INFO(enc.name() << " dt=" << dt);
      for (const auto& f : flow_set_exactness(enc, s, 1.0, dt)) {
        INFO(f.label);
        CHECK(f.distance < 1e-10);
        CHECK(f.unitarity < 1e-10);
      }
    }
}

TEST_CASE("dt = 0 compiles to the identity", "[dense]") {
  auto enc = vc_encode(Lattice(2, 2, Boundary::Open));
  Matrix u = circuit_to_unitary(compile_trotter_step(enc, plan(Strategy::Line, 0.0)).circuit);
  CHECK(unitary_distance(u, eye(8)) < 1e-12);
}

TEST_CASE("VC step equals the product of exact factors", "[dense][oracle]") {
  auto enc = vc_encode(Lattice(2, 2, Boundary::Open));
  double dt = 0.37;
  auto sets = line_flow_sets(enc.lattice);
  std::map<std::string, FlowSet> by;
  for (auto& f : sets) by[f.label] = f;
  Matrix want = eye(8);
  for (const char* l : {"EA", "WE", "SO", "NO"}) want = ham_exp(encoded_flow_set_terms(enc, by[l], 1.0), dt) * want;
  Matrix got = circuit_to_unitary(compile_trotter_step(enc, plan(Strategy::Line, dt)).circuit);
  CHECK(unitary_distance(got, want) < 1e-12);
}

TEST_CASE("petal baseline matches the compiled petal step", "[dense]") {
  auto enc = jw_encode(4);
  double dt = 0.21;
  Matrix base = circuit_to_unitary(compile_petal_baseline(enc, 1.0, dt).circuit);
  Matrix step = circuit_to_unitary(compile_trotter_step(enc, plan(Strategy::Petal, dt)).circuit);
  CHECK(unitary_distance(base, step) < 1e-12);
}

TEST_CASE("first-order Trotter error scales as dt^2", "[dense]") {
  for (const auto& enc : {jw_encode(4), vc_encode(Lattice(2, 2, Boundary::Open))}) {
    auto sw = trotter_error_sweep(enc, plan(Strategy::Line, 0), {0.08, 0.04, 0.02, 0.01});
    for (std::size_t i = 1; i < sw.size(); ++i) {
      double ratio = sw[i - 1].error / sw[i].error;
      CHECK(ratio > 3.5);
      CHECK(ratio < 4.5);
    }
  }
}

TEST_CASE("encoded spectrum equals free-fermion subset sums", "[dense][oracle]") {
  auto jw = free_fermion_spectrum_check(jw_encode(6), 1.0);
  CHECK(jw.ok());
  CHECK(jw.n_constraints == 0);
  CHECK(jw.multiplicity == 1);
  auto vc = free_fermion_spectrum_check(vc_encode(Lattice(2, 2, Boundary::Open)), 1.0);
  CHECK(vc.ok());
  CHECK(vc.n_constraints == 2);
  CHECK(vc.sector_dim == 128);
  CHECK(vc.multiplicity == 8);
}

TEST_CASE("dense cap is enforced", "[dense]") {
  CHECK_THROWS(pauli_to_matrix(PauliString(kDenseQubitCap + 1)));
  CHECK_THROWS(free_fermion_spectrum_check(vc_encode(Lattice(4, 2, Boundary::Open)), 1.0));
}
