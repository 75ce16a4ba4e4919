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

#include <benchmark/benchmark.h>

#include "mrae/dynamics.hpp"
#include "mrae/model.hpp"
#include "mrae/units.hpp"

namespace {

using namespace mrae;

// Middle gate segment of the two-qubit protocol: the integrator hot loop.
struct Fixture {
  TimeDependentHamiltonian ham;
  std::vector<JumpOp> jumps;
  Matrix rho;
  Vector psi;

  explicit Fixture(int n_atoms) {
    EnsembleParams p;
    p.n_atoms = n_atoms;
    p.omegaB = omega_from_mhz(10.0);
    p.omegaA = -p.omegaB;
    p.omegaC = p.omegaB;
    p.delta = 12.0 * p.omegaB;
    p.gamma_p = 1.0;
    p.gamma_R = 0.004;
    const auto ctrl = control_space();
    const auto ens = ensemble_space(n_atoms);
    const std::vector<int> dims = {ctrl.dim(), ens.dim()};
    ham.dim = ctrl.dim() * ens.dim();
    ham.terms = embed_terms(
        ensemble_drive_terms(p, EnsembleEnvelopes::constant(p), {}), dims, 1);
    ControlAtomParams cp;
    cp.gamma_r = 0.004;
    jumps = lindblad_ops(cp, p, ctrl.tensor(ens));
    const Vector b = kron_sparse(SparseOp(basis_vector(3, 0).sparseView()),
                                 SparseOp(bright_state(ens, p.vartheta(), 0.0)
                                              .sparseView())) *
                     Vector::Ones(1);
    psi = b;
    rho = b * b.adjoint();
  }
};

void bm_master_step(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  const double dt = 1e-5;
  EvolveOptions opts;
  opts.check_trace = false;
  const long steps_per_iter = 64;
  for (auto _ : state) {
    auto res =
        evolve_master(f.rho, f.ham, f.jumps, steps_per_iter * dt, dt, opts);
    benchmark::DoNotOptimize(res.final_op.data());
  }
  state.SetItemsProcessed(state.iterations() * steps_per_iter);
}

void bm_state_step(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  const double dt = 1e-5;
  const long steps_per_iter = 1024;
  for (auto _ : state) {
    Vector out = evolve_state(f.psi, f.ham, steps_per_iter * dt, dt);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * steps_per_iter);
}

void bm_dense_build(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Matrix h = f.ham.dense(0.37);
    benchmark::DoNotOptimize(h.data());
  }
}

}  // namespace

BENCHMARK(bm_master_step)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_state_step)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_dense_build)->Arg(4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
