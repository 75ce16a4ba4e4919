// Copyright 2026 The mrae Authors
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

#include <doctest.h>

#include <random>

#include "mrae/fidelity.hpp"
#include "mrae/model.hpp"
#include "mrae/operators.hpp"
#include "mrae/scenarios.hpp"

using namespace mrae;

namespace {

GateSchedule idle_schedule(int dim, double duration = 0.1) {
  GateSchedule s;
  s.dim = dim;
  Segment seg;
  seg.ham.dim = dim;
  seg.duration = duration;
  s.segments.push_back(std::move(seg));
  return s;
}

Matrix random_unitary(int d, std::mt19937& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix h(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = complexd(u(gen), u(gen));
  h = 0.5 * (h + h.adjoint().eval());
  return hermitian_propagator(h, 1.0);
}

// Eq.-style Pauli sum for an explicitly given channel map.
double pauli_sum_fidelity(const Matrix& ideal,
                          const std::function<Matrix(const Matrix&)>& chan) {
  const int d = static_cast<int>(ideal.rows());
  const int nq = d == 2 ? 1 : (d == 4 ? 2 : 3);
  complexd sum = 0.0;
  for (const auto& uj : pauli_strings(nq))
    sum += (ideal * uj.adjoint() * ideal.adjoint() * chan(uj)).trace();
  return (sum.real() + d * d) / (static_cast<double>(d) * d * (d + 1));
}

}  // namespace

TEST_CASE("identity channel has unit fidelity") {
  ChannelSpec c;
  c.schedule = idle_schedule(2);
  c.embedding = Matrix::Identity(2, 2);
  c.ideal = Matrix::Identity(2, 2);
  CHECK(average_gate_fidelity(c) == doctest::Approx(1.0).epsilon(1e-12));
  FidelityOptions fo;
  fo.force_master = true;
  CHECK(average_gate_fidelity(c, fo) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("completely depolarizing channel gives 1/2") {
  // strong symmetric Pauli jumps erase every non-identity component
  GateSchedule s = idle_schedule(2, 8.0);
  for (int k = 1; k < 4; ++k)
    s.jumps.push_back({pauli_basis()[k].sparseView(), "pauli"});
  ChannelSpec c;
  c.schedule = s;
  c.embedding = Matrix::Identity(2, 2);
  c.ideal = Matrix::Identity(2, 2);
  FidelityOptions fo;
  fo.dt_override = 1e-3;
  CHECK(average_gate_fidelity(c, fo) ==
        doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("pauli sum reproduces the unitary-channel closed form") {
  std::mt19937 gen(23);
  for (int d : {2, 4}) {
    const Matrix ideal = random_unitary(d, gen);
    const Matrix v = random_unitary(d, gen);
    const double direct = pauli_sum_fidelity(
        ideal, [&](const Matrix& x) { return Matrix(v * x * v.adjoint()); });
    CHECK(std::abs(direct - unitary_channel_fidelity(ideal, v)) < 1e-10);
  }
}

TEST_CASE("global phase on the ideal gate is irrelevant") {
  std::mt19937 gen(29);
  const Matrix v = random_unitary(2, gen);
  const Matrix ideal = random_unitary(2, gen);
  const auto chan = [&](const Matrix& x) {
    return Matrix(v * x * v.adjoint());
  };
  const Matrix rotated = std::exp(ii * 0.7) * ideal;
  CHECK(std::abs(pauli_sum_fidelity(ideal, chan) -
                 pauli_sum_fidelity(rotated, chan)) < 1e-12);
}

TEST_CASE("operator propagation is linear in the initial operator") {
  // one dissipative two-level channel; propagate E_01 directly and as the
  // combination of its Hermitian parts
  TimeDependentHamiltonian ham;
  ham.dim = 2;
  Term t;
  SparseOp op(2, 2);
  op.insert(0, 1) = 1.0;
  op.makeCompressed();
  t.op = op;
  t.coeff = [](double) { return complexd(1.3, 0.0); };
  t.add_adjoint = true;
  ham.terms.push_back(std::move(t));
  SparseOp l(2, 2);
  l.insert(0, 1) = std::sqrt(0.37);
  l.makeCompressed();
  const std::vector<JumpOp> jumps = {{l, "decay"}};

  Matrix e01 = Matrix::Zero(2, 2);
  e01(0, 1) = 1.0;
  const Matrix a = e01 + Matrix(e01.adjoint());            // Hermitian
  const Matrix b = ii * e01 - ii * Matrix(e01.adjoint());  // Hermitian
  const double T = 1.7, dt = 1e-4;
  const Matrix direct = evolve_master(e01, ham, jumps, T, dt).final_op;
  const Matrix ra = evolve_master(a, ham, jumps, T, dt).final_op;
  const Matrix rb = evolve_master(b, ham, jumps, T, dt).final_op;
  CHECK(max_abs(direct - 0.5 * (ra - ii * rb)) < 1e-10);
}

TEST_CASE("embedding must be an isometry and the ideal unitary") {
  ChannelSpec c;
  c.schedule = idle_schedule(3);
  c.embedding = Matrix::Zero(3, 2);
  c.embedding(0, 0) = 1.0;
  c.embedding(1, 1) = 0.5;  // not an isometry
  c.ideal = Matrix::Identity(2, 2);
  CHECK_THROWS(average_gate_fidelity(c));
  c.embedding(1, 1) = 1.0;
  c.ideal(0, 0) = 2.0;  // not unitary
  CHECK_THROWS(average_gate_fidelity(c));
}

TEST_CASE("leaky embedding lowers the identity fidelity") {
  // population leaving the computational block is simply lost
  GateSchedule s = idle_schedule(3, 2.0);
  SparseOp l(3, 3);
  l.insert(2, 1) = std::sqrt(0.5);  // |1> decays out of the block
  l.makeCompressed();
  s.jumps.push_back({l, "leak"});
  ChannelSpec c;
  c.schedule = s;
  c.embedding = Matrix::Zero(3, 2);
  c.embedding(0, 0) = 1.0;
  c.embedding(1, 1) = 1.0;
  c.ideal = Matrix::Identity(2, 2);
  FidelityOptions fo;
  fo.dt_override = 1e-3;
  const double f = average_gate_fidelity(c, fo);
  CHECK(f < 1.0);
  CHECK(f > 0.4);
}

TEST_CASE("state fidelity") {
  Vector psi(2);
  psi << 1.0, 0.0;
  CHECK(state_fidelity(Matrix(psi * psi.adjoint()), psi) ==
        doctest::Approx(1.0));
  Vector orth(2);
  orth << 0.0, 1.0;
  CHECK(state_fidelity(Matrix(psi * psi.adjoint()), orth) ==
        doctest::Approx(0.0));
  Vector bad(3);
  CHECK_THROWS(state_fidelity(Matrix(psi * psi.adjoint()), bad));
}

TEST_CASE("thread count does not change the result") {
  TwoQubitSetup s;
  // tiny, fast parameters; physics values irrelevant for determinism
  s.n_atoms = 1;
  s.omega1 = 60.0;
  s.omega_b = 60.0;
  s.omega_c = 60.0;
  s.delta = 12.0 * 60.0;
  s.v = 2.0 * s.delta;
  s.gamma_p = 1.0;
  const auto c = two_qubit_nhqc_gate(s);
  FidelityOptions one, many;
  one.threads = 1;
  many.threads = 4;
  one.dt_override = many.dt_override = 5e-5;
  CHECK(average_gate_fidelity(c, one) == average_gate_fidelity(c, many));
}
