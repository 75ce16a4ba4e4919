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

#include "mrae/fidelity.hpp"

#include <cmath>
#include <stdexcept>

#include "mrae/parallel.hpp"

namespace mrae {

namespace {

int log2_dim(int d) {
  int n = 0, v = 1;
  while (v < d) {
    v *= 2;
    ++n;
  }
  if (v != d)
    throw std::invalid_argument("average_gate_fidelity: d must be 2^n");
  return n;
}

void validate(const ChannelSpec& c) {
  const int d = static_cast<int>(c.ideal.cols());
  if (c.ideal.rows() != d)
    throw std::invalid_argument("average_gate_fidelity: ideal not square");
  if (c.embedding.cols() != d || c.embedding.rows() != c.schedule.dim)
    throw std::invalid_argument(
        "average_gate_fidelity: embedding does not match schedule/gate dims");
  if (max_abs(Matrix(c.embedding.adjoint() * c.embedding) -
              Matrix::Identity(d, d)) > 1e-10)
    throw std::invalid_argument(
        "average_gate_fidelity: embedding is not an isometry");
  if (max_abs(Matrix(c.ideal.adjoint() * c.ideal) - Matrix::Identity(d, d)) >
      1e-10)
    throw std::invalid_argument("average_gate_fidelity: ideal not unitary");
}

}  // namespace

double average_gate_fidelity(const ChannelSpec& c, const FidelityOptions& opts,
                             FidelityTrace* trace) {
  validate(c);
  const int d = static_cast<int>(c.ideal.cols());
  const double denom = static_cast<double>(d) * d * (d + 1);
  const Matrix& v = c.embedding;

  if (c.schedule.jumps.empty() && !opts.force_master && trace == nullptr) {
    // Unitary channel: propagate the d computational basis states and form
    // the projected block propagator B = V^dag U_full V.
    Matrix w(c.schedule.dim, d);
    parallel_for(d, resolve_threads(opts.threads), [&](int k) {
      w.col(k) = run_schedule_state(c.schedule, Vector(v.col(k)),
                                    opts.dt_override);
    });
    const Matrix b = v.adjoint() * w;
    complexd sum = 0.0;
    for (const auto& u_j : pauli_strings(log2_dim(d)))
      sum += (c.ideal * u_j.adjoint() * c.ideal.adjoint() * b * u_j *
              b.adjoint())
                 .trace();
    return (sum.real() + d * d) / denom;
  }

  const auto strings = pauli_strings(log2_dim(d));
  const int n_strings = static_cast<int>(strings.size());
  std::vector<complexd> contrib(n_strings);
  std::vector<EvolutionResult> results(n_strings);
  parallel_for(n_strings, resolve_threads(opts.threads), [&](int j) {
    const Matrix target = c.ideal * strings[j].adjoint() * c.ideal.adjoint();
    const Matrix x0 = v * strings[j] * v.adjoint();
    EvolveOptions eopts;
    eopts.dt_override = opts.dt_override;
    if (trace) eopts.observables = {Matrix(v * target * v.adjoint())};
    results[j] = run_schedule(c.schedule, x0, eopts);
    contrib[j] =
        (target * Matrix(v.adjoint() * results[j].final_op * v)).trace();
  });
  complexd sum = 0.0;
  for (const auto& s : contrib) sum += s;
  if (trace) {
    trace->times = results[0].sample_times;
    trace->fidelity.assign(trace->times.size(), 0.0);
    for (size_t k = 0; k < trace->times.size(); ++k) {
      complexd acc = 0.0;
      for (int j = 0; j < n_strings; ++j)
        acc += results[j].observable_traces[0][k];
      trace->fidelity[k] = (acc.real() + d * d) / denom;
    }
  }
  return (sum.real() + d * d) / denom;
}

double unitary_channel_fidelity(const Matrix& ideal, const Matrix& actual) {
  const int d = static_cast<int>(ideal.cols());
  const double overlap = std::norm((ideal.adjoint() * actual).trace());
  return (overlap + d) / (static_cast<double>(d) * d + d);
}

double state_fidelity(const Matrix& rho, const Vector& target) {
  if (rho.rows() != target.size())
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  return (target.adjoint() * rho * target)(0, 0).real();
}

}  // namespace mrae
