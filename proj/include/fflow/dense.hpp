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

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fflow/circuit.hpp"
#include "fflow/encodings.hpp"
#include "fflow/pauli.hpp"
#include "fflow/trotter.hpp"

namespace fflow {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kDenseQubitCap = 14;

// Basis index bit q is qubit q (little endian).
inline void check_cap(int n, const char* who) {
  if (n > kDenseQubitCap)
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(n) + " qubits exceeds the dense cap of " +
                                std::to_string(kDenseQubitCap));
}

inline Matrix pauli_to_matrix(const PauliString& p) {
  int n = p.n_qubits();
  check_cap(n, "pauli_to_matrix");
  std::size_t dim = std::size_t{1} << n;
  std::uint64_t xm = 0, zm = 0;
  int f = p.phase();
  for (int q = 0; q < n; ++q) {
    if (p.x(q)) xm |= std::uint64_t{1} << q;
    if (p.z(q)) zm |= std::uint64_t{1} << q;
    f += p.x(q) && p.z(q);  // Y = i X Z
  }
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Matrix m = Matrix::Zero(static_cast<long>(dim), static_cast<long>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    // X^x Z^z |i> = (-1)^{|i & z|} |i ^ x>
    double s = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
    m(static_cast<long>(i ^ xm), static_cast<long>(i)) = ipow[f & 3] * s;
  }
  return m;
}

namespace detail {

inline void apply_1q(Matrix& u, int q, const Eigen::Matrix2cd& g) {
  long dim = u.rows();
  long bit = 1L << q;
  for (long i = 0; i < dim; ++i) {
    if (i & bit) continue;
    long j = i | bit;
    Eigen::RowVectorXcd a = u.row(i), b = u.row(j);
    u.row(i) = g(0, 0) * a + g(0, 1) * b;
    u.row(j) = g(1, 0) * a + g(1, 1) * b;
  }
}

inline Eigen::Matrix2cd gate_matrix(const Gate& g) {
  const cplx I(0, 1);
  Eigen::Matrix2cd m;
  double h = std::sqrt(0.5), t = g.angle / 2;
  switch (g.kind) {
    case GateKind::H: m << h, h, h, -h; break;
    case GateKind::S: m << 1, 0, 0, I; break;
    case GateKind::Sdg: m << 1, 0, 0, -I; break;
    case GateKind::RX: m << std::cos(t), -I * std::sin(t), -I * std::sin(t), std::cos(t); break;
    case GateKind::RY: m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t); break;
    case GateKind::RZ: m << std::exp(-I * t), 0, 0, std::exp(I * t); break;
    default: throw std::logic_error("gate_matrix: not a single-qubit gate");
  }
  return m;
}

// u <- G u for one gate G.
inline void left_apply(Matrix& u, const Gate& g) {
  long dim = u.rows();
  switch (g.kind) {
    case GateKind::CX: {
      long c = 1L << g.q0, t = 1L << g.q1;
      for (long i = 0; i < dim; ++i)
        if ((i & c) && !(i & t)) u.row(i).swap(u.row(i | t));
      break;
    }
    case GateKind::CZ: {
      long a = 1L << g.q0, b = 1L << g.q1;
      for (long i = 0; i < dim; ++i)
        if ((i & a) && (i & b)) u.row(i) *= -1.0;
      break;
    }
    case GateKind::SWAP: {
      long a = 1L << g.q0, b = 1L << g.q1;
      for (long i = 0; i < dim; ++i)
        if ((i & a) && !(i & b)) u.row(i).swap(u.row((i & ~a) | b));
      break;
    }
    case GateKind::PermuteV: {
      Matrix v = u;
      for (long i = 0; i < dim; ++i) {
        long j = i;
        for (std::size_t k = 0; k < g.targets.size(); ++k) {
          long src = 1L << g.targets[g.perm[k]], dst = 1L << g.targets[k];
          j = (j & ~dst) | ((i & src) ? dst : 0);
        }
        u.row(j) = v.row(i);
      }
      break;
    }
    default: apply_1q(u, g.q0, gate_matrix(g));
  }
}

}  // namespace detail

inline Matrix circuit_to_unitary(const Circuit& c) {
  check_cap(c.n_qubits(), "circuit_to_unitary");
  long dim = 1L << c.n_qubits();
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& l : c.layers())
    for (const auto& g : l.gates) detail::left_apply(u, g);
  return u;
}

using PauliSum = std::vector<std::pair<PauliString, double>>;

inline Matrix pauli_sum_matrix(const PauliSum& terms) {
  if (terms.empty()) throw std::invalid_argument("pauli_sum_matrix: empty sum");
  int n = terms.front().first.n_qubits();
  long dim = 1L << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& [p, c] : terms) {
    if (!p.hermitian()) throw std::invalid_argument("ham_exp: non-Hermitian term " + p.sparse_str());
    h += c * pauli_to_matrix(p);
  }
  return h;
}

// exp(-i t sum c_k P_k) by Hermitian eigendecomposition.
inline Matrix ham_exp(const PauliSum& terms, double t) {
  Matrix h = pauli_sum_matrix(terms);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const cplx I(0, 1);
  Eigen::VectorXcd ph = (-I * t * es.eigenvalues().cast<cplx>()).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Phase-aligned spectral-norm distance: the global phase is fixed by arg tr(V^dag U).
inline double unitary_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("unitary_distance: dimension mismatch");
  cplx tr = (v.adjoint() * u).trace();
  cplx ph = std::abs(tr) > 1e-12 * static_cast<double>(u.rows()) ? tr / std::abs(tr) : cplx(1, 0);
  Matrix d = u - ph * v;
  Eigen::BDCSVD<Matrix> svd(d);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

inline double frobenius_distance(const Matrix& u, const Matrix& v) {
  cplx tr = (v.adjoint() * u).trace();
  cplx ph = std::abs(tr) > 1e-12 ? tr / std::abs(tr) : cplx(1, 0);
  return (u - ph * v).norm();
}

inline double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

struct SweepPoint {
  double dt = 0;
  double error = 0;
};

inline std::vector<SweepPoint> trotter_error_sweep(const Encoding& enc, CompilationPlan plan, const std::vector<double>& dts) {
  if (enc.n_qubits() > 12) throw std::invalid_argument("trotter_error_sweep: at most 12 qubits");
  std::vector<SweepPoint> out;
  auto h = encoded_hamiltonian(enc, plan.J);
  for (double dt : dts) {
    plan.dt = dt;
    Matrix u = circuit_to_unitary(compile_trotter_step(enc, plan).circuit);
    out.push_back({dt, unitary_distance(u, ham_exp(h, dt))});
  }
  return out;
}

// Flow-set exactness: every compiled factor against exp(-i dt sum of its encoded terms).
struct FactorCheck {
  std::string label;
  double distance = 0;
  double unitarity = 0;
};

inline std::vector<FactorCheck> flow_set_exactness(const Encoding& enc, Strategy s, double J, double dt) {
  std::vector<FactorCheck> out;
  for (const auto& fs : flow_sets_for(s, enc.lattice)) {
    if (fs.components.empty()) continue;
    Matrix u = circuit_to_unitary(compile_flow_set(enc, fs, J, dt));
    Matrix v = ham_exp(encoded_flow_set_terms(enc, fs, J), dt);
    out.push_back({fs.label, unitary_distance(u, v), unitarity_defect(u)});
  }
  return out;
}

struct SpectrumReport {
  int n_constraints = 0;
  long sector_dim = 0;
  long multiplicity = 0;
  double max_deviation = 0;
  std::vector<double> encoded;   // sorted, restricted to the gauge sector
  std::vector<double> expected;  // sorted subset sums, each repeated `multiplicity` times
  bool ok(double tol = 1e-8) const { return !encoded.empty() && encoded.size() == expected.size() && max_deviation <= tol; }
};

// Single-particle matrix of H = J sum_jk T_jk = -J sum (c_j^dag c_k + h.c.).
inline Eigen::MatrixXd hopping_matrix(const Lattice& lat, double J) {
  int n = lat.n_sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : directed_edges(lat)) h(e.source, e.target) += -J;
  return h;
}

inline SpectrumReport free_fermion_spectrum_check(const Encoding& enc, double J) {
  if (enc.n_qubits() > 12) throw std::invalid_argument("free_fermion_spectrum_check: at most 12 qubits");
  SpectrumReport r;
  int nf = enc.n_modes();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sp(hopping_matrix(enc.lattice, J));
  std::vector<double> sums;
  for (long mask = 0; mask < (1L << nf); ++mask) {
    double s = 0;
    for (int i = 0; i < nf; ++i)
      if (mask >> i & 1) s += sp.eigenvalues()(i);
    sums.push_back(s);
  }
  Matrix h = pauli_sum_matrix(encoded_hamiltonian(enc, J));
  auto rep = validate_encoding(enc);
  r.n_constraints = static_cast<int>(rep.gauge_constraints.size());
  long dim = h.rows();
  Matrix proj = Matrix::Identity(dim, dim);
  for (const auto& g : rep.gauge_constraints)
    proj = proj * (0.5 * (Matrix::Identity(dim, dim) + pauli_to_matrix(g.stabilizer)));
  Eigen::SelfAdjointEigenSolver<Matrix> pe(0.5 * (proj + proj.adjoint()));
  std::vector<long> keep;
  for (long i = 0; i < dim; ++i)
    if (pe.eigenvalues()(i) > 0.5) keep.push_back(i);
  if (keep.empty()) throw std::runtime_error("free_fermion_spectrum_check: empty gauge sector");
  Matrix basis(dim, static_cast<long>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) basis.col(static_cast<long>(k)) = pe.eigenvectors().col(keep[k]);
  Matrix hr = basis.adjoint() * h * basis;
  Eigen::SelfAdjointEigenSolver<Matrix> he(0.5 * (hr + hr.adjoint()));
  r.sector_dim = static_cast<long>(keep.size());
  for (long i = 0; i < hr.rows(); ++i) r.encoded.push_back(he.eigenvalues()(i));
  std::sort(r.encoded.begin(), r.encoded.end());
  if (r.sector_dim % (1L << nf) != 0) {
    r.max_deviation = INFINITY;
    return r;
  }
  r.multiplicity = r.sector_dim / (1L << nf);
  for (double s : sums)
    for (long k = 0; k < r.multiplicity; ++k) r.expected.push_back(s);
  std::sort(r.expected.begin(), r.expected.end());
  for (std::size_t i = 0; i < r.encoded.size(); ++i)
    r.max_deviation = std::max(r.max_deviation, std::abs(r.encoded[i] - r.expected[i]));
  return r;
}

}  // namespace fflow
