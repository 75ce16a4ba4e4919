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

#include "mrae/dynamics.hpp"

#include <chrono>
#include <cmath>
#include <map>

namespace mrae {

Matrix TimeDependentHamiltonian::dense(double t, double eps_c,
                                       double eps_t) const {
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& term : terms) {
    double scale = 1.0;
    if (term.subsystem == Subsystem::control_drive)
      scale = std::pow(1.0 + eps_c, term.error_exponent);
    else if (term.subsystem == Subsystem::ensemble_drive)
      scale = std::pow(1.0 + eps_t, term.error_exponent);
    const complexd c = scale * term.coeff(t);
    h += c * Matrix(term.op);
    if (term.add_adjoint) h += std::conj(c) * Matrix(term.op).adjoint().eval();
  }
  return h;
}

TimeDependentHamiltonian::Scales TimeDependentHamiltonian::step_scales(
    double duration, int samples) const {
  Scales s;
  for (const auto& term : terms) {
    double cmax = 0.0;
    for (int k = 0; k < samples; ++k) {
      const double t = duration * k / (samples - 1);
      cmax = std::max(cmax, std::abs(term.coeff(t)));
    }
    double off = 0.0, diag = 0.0;
    for (int k = 0; k < term.op.outerSize(); ++k)
      for (SparseOp::InnerIterator it(term.op, k); it; ++it) {
        const double v = cmax * std::abs(it.value());
        (it.row() == it.col() ? diag : off) = std::max(
            it.row() == it.col() ? diag : off, v);
      }
    s.omega_max = std::max(s.omega_max, 2.0 * off);
    s.delta_max = std::max({s.delta_max, diag, term.rate_hint});
  }
  return s;
}

double GateSchedule::total_duration() const {
  double t = 0.0;
  for (const auto& seg : segments) t += seg.duration;
  return t;
}

double default_step(const TimeDependentHamiltonian& ham, double duration) {
  const auto s = ham.step_scales(duration);
  double dt = duration / 50.0;
  if (s.omega_max > 0.0) dt = std::min(dt, 0.002 / s.omega_max);
  if (s.delta_max > 0.0) dt = std::min(dt, 0.02 / s.delta_max);
  return dt;
}

namespace {

using RMatrix =
    Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

double error_scale(const Term& term, double eps_c, double eps_t) {
  if (term.subsystem == Subsystem::control_drive)
    return std::pow(1.0 + eps_c, term.error_exponent);
  if (term.subsystem == Subsystem::ensemble_drive)
    return std::pow(1.0 + eps_t, term.error_exponent);
  return 1.0;
}

// Merged CSR with per-term slot lists; values are refilled at each RK4
// stage from the term coefficients.
struct CompiledHam {
  int dim = 0;
  std::vector<int> row_ptr, col;
  std::vector<complexd> val;
  struct SlotRef {
    int slot;
    complexd pref;
  };
  struct CTerm {
    CoeffFn coeff;
    double scale = 1.0;
    std::vector<SlotRef> slots;  // adjoint entries flagged by conj_coeff
    std::vector<SlotRef> adj_slots;
  };
  std::vector<CTerm> terms;

  CompiledHam(const TimeDependentHamiltonian& ham, double eps_c, double eps_t)
      : dim(ham.dim) {
    std::map<std::pair<int, int>, int> slot_of;
    struct Pending {
      int term;
      bool adjoint;
      int i, j;
      complexd pref;
    };
    std::vector<Pending> pending;
    for (size_t n = 0; n < ham.terms.size(); ++n) {
      const Term& t = ham.terms[n];
      for (int k = 0; k < t.op.outerSize(); ++k)
        for (SparseOp::InnerIterator it(t.op, k); it; ++it) {
          pending.push_back({static_cast<int>(n), false,
                             static_cast<int>(it.row()),
                             static_cast<int>(it.col()), it.value()});
          slot_of.emplace(std::make_pair(it.row(), it.col()), -1);
          if (t.add_adjoint) {
            pending.push_back({static_cast<int>(n), true,
                               static_cast<int>(it.col()),
                               static_cast<int>(it.row()),
                               std::conj(it.value())});
            slot_of.emplace(std::make_pair(it.col(), it.row()), -1);
          }
        }
    }
    // CSR layout in (row, col) order (std::map iterates sorted)
    row_ptr.assign(dim + 1, 0);
    int slot = 0;
    for (auto& [key, s] : slot_of) s = slot++;
    col.resize(slot_of.size());
    val.assign(slot_of.size(), 0.0);
    for (const auto& [key, s] : slot_of) {
      ++row_ptr[key.first + 1];
      col[s] = key.second;
    }
    for (int i = 0; i < dim; ++i) row_ptr[i + 1] += row_ptr[i];
    terms.resize(ham.terms.size());
    for (size_t n = 0; n < ham.terms.size(); ++n) {
      terms[n].coeff = ham.terms[n].coeff;
      terms[n].scale = error_scale(ham.terms[n], eps_c, eps_t);
    }
    for (const auto& p : pending) {
      const int s = slot_of.at({p.i, p.j});
      (p.adjoint ? terms[p.term].adj_slots : terms[p.term].slots)
          .push_back({s, p.pref});
    }
  }

  void refresh(double t) {
    std::fill(val.begin(), val.end(), complexd(0.0));
    for (const auto& term : terms) {
      const complexd c = term.scale * term.coeff(t);
      for (const auto& s : term.slots) val[s.slot] += c * s.pref;
      const complexd cc = std::conj(c);
      for (const auto& s : term.adj_slots) val[s.slot] += cc * s.pref;
    }
  }

  // out = H x
  void apply_left(const RMatrix& x, RMatrix& out) const {
    out.setZero();
    const complexd* xd = x.data();
    complexd* od = out.data();
    for (int i = 0; i < dim; ++i) {
      complexd* orow = od + static_cast<ptrdiff_t>(i) * dim;
      for (int s = row_ptr[i]; s < row_ptr[i + 1]; ++s) {
        const complexd v = val[s];
        const complexd* xrow = xd + static_cast<ptrdiff_t>(col[s]) * dim;
        for (int j = 0; j < dim; ++j) orow[j] += v * xrow[j];
      }
    }
  }

  // out = x H
  void apply_right(const RMatrix& x, RMatrix& out) const {
    out.setZero();
    const complexd* xd = x.data();
    complexd* od = out.data();
    for (int k = 0; k < dim; ++k) {
      for (int s = row_ptr[k]; s < row_ptr[k + 1]; ++s) {
        const complexd v = val[s];
        const int j = col[s];
        for (int i = 0; i < dim; ++i)
          od[static_cast<ptrdiff_t>(i) * dim + j] +=
              xd[static_cast<ptrdiff_t>(i) * dim + k] * v;
      }
    }
  }

  void apply_vec(const Vector& x, Vector& out) const {
    out.setZero();
    for (int i = 0; i < dim; ++i) {
      complexd acc = 0.0;
      for (int s = row_ptr[i]; s < row_ptr[i + 1]; ++s)
        acc += val[s] * x(col[s]);
      out(i) = acc;
    }
  }
};

struct CompiledJumps {
  int dim = 0;
  struct TransitionJump {
    std::vector<int> to, from;
    std::vector<complexd> amp;
  };
  std::vector<TransitionJump> jumps;
  Eigen::VectorXd half_gamma_diag;  // 0.5 * diag(sum_j L_j^dag L_j)
  bool diagonal_gamma = true;
  Matrix gamma_sum;  // fallback when L^dag L is not diagonal

  CompiledJumps(const std::vector<JumpOp>& ops, int d) : dim(d) {
    Matrix gs = Matrix::Zero(dim, dim);
    for (const auto& j : ops) {
      TransitionJump tj;
      for (int k = 0; k < j.op.outerSize(); ++k)
        for (SparseOp::InnerIterator it(j.op, k); it; ++it) {
          tj.to.push_back(static_cast<int>(it.row()));
          tj.from.push_back(static_cast<int>(it.col()));
          tj.amp.push_back(it.value());
        }
      jumps.push_back(std::move(tj));
      gs += Matrix(j.op).adjoint() * Matrix(j.op);
    }
    gamma_sum = gs;
    Matrix off = gs;
    off.diagonal().setZero();
    diagonal_gamma = max_abs(off) < 1e-13;
    half_gamma_diag = 0.5 * gs.diagonal().real();
  }

  bool empty() const { return jumps.empty(); }
};

struct Workspace {
  RMatrix t1, t2, k1, k2, k3, k4, xt;
  void resize(int d) {
    for (RMatrix* m : {&t1, &t2, &k1, &k2, &k3, &k4, &xt}) m->resize(d, d);
  }
};

// K = -i[H, X] - 0.5 {sum L^dag L, X} + sum_j L_j X L_j^dag
void rhs(CompiledHam& ham, const CompiledJumps& jumps, double t,
         const RMatrix& x, RMatrix& k, Workspace& w, bool hermitian) {
  const int d = ham.dim;
  ham.refresh(t);
  ham.apply_left(x, w.t1);
  if (hermitian) {
    // (H X)^dag = X H for Hermitian H, X
    for (int i = 0; i < d; ++i) {
      const complexd* t1row = w.t1.data() + static_cast<ptrdiff_t>(i) * d;
      complexd* krow = k.data() + static_cast<ptrdiff_t>(i) * d;
      for (int j = 0; j < d; ++j) {
        const complexd a = t1row[j] - std::conj(w.t1(j, i));
        krow[j] = complexd(a.imag(), -a.real());  // -i * a
      }
    }
  } else {
    ham.apply_right(x, w.t2);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const complexd a = w.t1(i, j) - w.t2(i, j);
        k(i, j) = complexd(a.imag(), -a.real());
      }
  }
  if (jumps.empty()) return;
  if (jumps.diagonal_gamma) {
    const double* g = jumps.half_gamma_diag.data();
    for (int i = 0; i < d; ++i) {
      const double gi = g[i];
      const complexd* xrow = x.data() + static_cast<ptrdiff_t>(i) * d;
      complexd* krow = k.data() + static_cast<ptrdiff_t>(i) * d;
      for (int j = 0; j < d; ++j) krow[j] -= (gi + g[j]) * xrow[j];
    }
  } else {
    k.noalias() -= 0.5 * (jumps.gamma_sum * x.eval() +
                          (x * jumps.gamma_sum).eval());
  }
  for (const auto& tj : jumps.jumps) {
    const size_t m = tj.to.size();
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b)
        k(tj.to[a], tj.to[b]) +=
            tj.amp[a] * std::conj(tj.amp[b]) * x(tj.from[a], tj.from[b]);
  }
}

struct SampleSink {
  const EvolveOptions* opts = nullptr;
  EvolutionResult* result = nullptr;
  std::vector<RMatrix> obs;
  complexd trace0 = 0.0;
  bool first = true;

  void init(const EvolveOptions& o, EvolutionResult& r, int dim) {
    opts = &o;
    result = &r;
    for (const auto& m : o.observables) obs.emplace_back(m);
    r.observable_traces.assign(obs.size(), {});
    (void)dim;
  }

  void record(double t, const RMatrix& x) {
    const complexd tr = x.trace();
    if (first) {
      trace0 = tr;
      first = false;
    } else if (opts->check_trace &&
               std::abs(tr - trace0) >
                   opts->trace_tol * std::max(1.0, std::abs(trace0))) {
      throw IntegrationError(
          "master-equation trace drift exceeds tolerance; decrease dt");
    }
    result->sample_times.push_back(t);
    result->trace_samples.push_back(tr);
    for (size_t m = 0; m < obs.size(); ++m)
      result->observable_traces[m].push_back((obs[m] * x).trace());
  }
};

void evolve_compiled(RMatrix& x, CompiledHam& ham, const CompiledJumps& jumps,
                     double t_offset, double duration, double dt,
                     const EvolveOptions& opts, EvolutionResult& result,
                     SampleSink& sink, bool hermitian, Workspace& w) {
  if (duration <= 0.0) return;
  const long steps =
      std::max<long>(1, static_cast<long>(std::ceil(duration / dt - 1e-9)));
  const long stride =
      std::max<long>(1, steps / std::max(1, opts.max_samples));
  double t = 0.0;
  for (long s = 0; s < steps; ++s) {
    const double h = std::min(dt, duration - t);
    rhs(ham, jumps, t, x, w.k1, w, hermitian);
    w.xt = x + (0.5 * h) * w.k1;
    rhs(ham, jumps, t + 0.5 * h, w.xt, w.k2, w, hermitian);
    w.xt = x + (0.5 * h) * w.k2;
    rhs(ham, jumps, t + 0.5 * h, w.xt, w.k3, w, hermitian);
    w.xt = x + h * w.k3;
    rhs(ham, jumps, t + h, w.xt, w.k4, w, hermitian);
    x += (h / 6.0) * (w.k1 + 2.0 * w.k2 + 2.0 * w.k3 + w.k4);
    t += h;
    ++result.steps;
    if (s % stride == stride - 1 || s == steps - 1)
      sink.record(t_offset + t, x);
  }
}

}  // namespace

EvolutionResult evolve_master(const Matrix& rho0,
                              const TimeDependentHamiltonian& ham,
                              const std::vector<JumpOp>& jumps,
                              double duration, double dt,
                              const EvolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  EvolutionResult result;
  CompiledHam cham(ham, 0.0, 0.0);
  CompiledJumps cjumps(jumps, ham.dim);
  Workspace w;
  w.resize(ham.dim);
  RMatrix x = rho0;
  const bool hermitian = hermiticity_error(rho0) < 1e-10;
  SampleSink sink;
  sink.init(opts, result, ham.dim);
  sink.record(0.0, x);
  evolve_compiled(x, cham, cjumps, 0.0, duration, dt, opts, result, sink,
                  hermitian, w);
  result.final_op = x;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

Vector evolve_state(const Vector& psi0, const TimeDependentHamiltonian& ham,
                    double duration, double dt) {
  CompiledHam cham(ham, 0.0, 0.0);
  Vector x = psi0, k1(ham.dim), k2(ham.dim), k3(ham.dim), k4(ham.dim),
         xt(ham.dim), hx(ham.dim);
  const long steps =
      std::max<long>(1, static_cast<long>(std::ceil(duration / dt - 1e-9)));
  auto deriv = [&](double t, const Vector& v, Vector& out) {
    cham.refresh(t);
    cham.apply_vec(v, hx);
    out = -ii * hx;
  };
  double t = 0.0;
  for (long s = 0; s < steps; ++s) {
    const double h = std::min(dt, duration - t);
    deriv(t, x, k1);
    xt = x + (0.5 * h) * k1;
    deriv(t + 0.5 * h, xt, k2);
    xt = x + (0.5 * h) * k2;
    deriv(t + 0.5 * h, xt, k3);
    xt = x + h * k3;
    deriv(t + h, xt, k4);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
  }
  return x;
}

EvolutionResult run_schedule(const GateSchedule& s, const Matrix& rho0,
                             const EvolveOptions& opts) {
  if (std::abs(s.errors.epsilon_c) > 0.5 || std::abs(s.errors.epsilon_t) > 0.5)
    throw std::invalid_argument("run_schedule: |epsilon| above sanity bound");
  const auto start = std::chrono::steady_clock::now();
  EvolutionResult result;
  CompiledJumps cjumps(s.jumps, s.dim);
  Workspace w;
  w.resize(s.dim);
  RMatrix x = rho0;
  const bool hermitian = hermiticity_error(rho0) < 1e-10;
  SampleSink sink;
  sink.init(opts, result, s.dim);
  sink.record(0.0, x);
  double t_offset = 0.0;
  for (const auto& seg : s.segments) {
    CompiledHam cham(seg.ham, s.errors.epsilon_c, s.errors.epsilon_t);
    const double dt = opts.dt_override > 0.0
                          ? opts.dt_override
                          : default_step(seg.ham, seg.duration);
    evolve_compiled(x, cham, cjumps, t_offset, seg.duration, dt, opts, result,
                    sink, hermitian, w);
    t_offset += seg.duration;
  }
  result.final_op = x;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

Vector run_schedule_state(const GateSchedule& s, const Vector& psi0,
                          double dt_override) {
  if (!s.jumps.empty())
    throw std::invalid_argument(
        "run_schedule_state: schedule carries jump operators");
  if (std::abs(s.errors.epsilon_c) > 0.5 || std::abs(s.errors.epsilon_t) > 0.5)
    throw std::invalid_argument("run_schedule_state: |epsilon| above bound");
  Vector x = psi0;
  for (const auto& seg : s.segments) {
    TimeDependentHamiltonian scaled = seg.ham;
    for (auto& term : scaled.terms) {
      const double sc =
          error_scale(term, s.errors.epsilon_c, s.errors.epsilon_t);
      if (sc != 1.0) {
        CoeffFn base = term.coeff;
        term.coeff = [base, sc](double t) { return sc * base(t); };
      }
    }
    const double dt = dt_override > 0.0 ? dt_override
                                        : default_step(seg.ham, seg.duration);
    x = evolve_state(x, scaled, seg.duration, dt);
  }
  return x;
}

PulseSet inject_systematic_error(const PulseSet& p, double eps) {
  PulseSet out;
  out.tau = p.tau;
  const double scale = 1.0 + eps;
  out.omega_R = [f = p.omega_R, scale](double t) { return scale * f(t); };
  out.omega_I = [f = p.omega_I, scale](double t) { return scale * f(t); };
  return out;
}

}  // namespace mrae
