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

#include "mrae/model.hpp"

#include <cmath>
#include <stdexcept>

namespace mrae {

namespace {

SparseOp sparse_from_triplets(int dim,
                              std::vector<Eigen::Triplet<complexd>> trips) {
  SparseOp op(dim, dim);
  op.setFromTriplets(trips.begin(), trips.end());
  return op;
}

SparseOp transition(int dim, int to, int from, complexd amp = 1.0) {
  return sparse_from_triplets(dim, {{to, from, amp}});
}

int n_atoms_of(const HilbertSpace& ens) {
  return (ens.dim() - 1) / 4;
}

}  // namespace

std::vector<double> InteractionParams::per_atom_shifts(int n_atoms) const {
  std::vector<double> out;
  if (!distances.empty()) {
    if (static_cast<int>(distances.size()) != n_atoms)
      throw std::invalid_argument("per_atom_shifts: distance count != N");
    for (double d : distances) {
      if (d <= 0) throw std::invalid_argument("per_atom_shifts: d <= 0");
      out.push_back(two_pi * 1e3 * c6 / std::pow(d, 6));
    }
  } else {
    out.assign(n_atoms, v);
  }
  return out;
}

Vector collective_state(const HilbertSpace& space, const std::string& level) {
  if (level != "A" && level != "B" && level != "p" && level != "R")
    throw std::invalid_argument("collective_state: unknown level " + level);
  const int n = n_atoms_of(space);
  Vector out = Vector::Zero(space.dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int l = 1; l <= n; ++l) out(space.at(level + std::to_string(l))) = amp;
  return out;
}

Vector bright_state(const HilbertSpace& space, double vartheta,
                    double phi_ab) {
  return std::sin(0.5 * vartheta) * std::exp(ii * phi_ab) *
             collective_state(space, "A") +
         std::cos(0.5 * vartheta) * collective_state(space, "B");
}

Vector dark_state(const HilbertSpace& space, double vartheta, double phi_ab) {
  return std::cos(0.5 * vartheta) * collective_state(space, "A") -
         std::sin(0.5 * vartheta) * std::exp(-ii * phi_ab) *
             collective_state(space, "B");
}

Matrix control_hamiltonian(const ControlAtomParams& p) {
  const HilbertSpace c = control_space();
  Matrix h = Matrix::Zero(3, 3);
  h(c.at("0"), c.at("r")) = 0.5 * p.omega0 * std::exp(ii * p.phi0);
  h(c.at("1"), c.at("r")) = 0.5 * p.omega1 * std::exp(ii * p.phi1);
  h = Matrix(h + h.adjoint().eval());
  return h;
}

ControlEnvelopes ControlEnvelopes::constant(const ControlAtomParams& p) {
  return {[p](double) { return p.omega0; }, [p](double) { return p.omega1; },
          [p](double) { return p.phi0; }, [p](double) { return p.phi1; }};
}

ControlEnvelopes ControlEnvelopes::from_pulse(const PulseSet& p) {
  return {[](double) { return 0.0; },
          [p](double t) { return p.omega_eff(t); },
          [](double) { return 0.0; },
          [p](double t) { return p.phi_B(t); }};
}

EnsembleEnvelopes EnsembleEnvelopes::constant(const EnsembleParams& p) {
  return {[p](double) { return p.omegaA; }, [p](double) { return p.omegaB; },
          [p](double) { return p.phiA; }, [p](double) { return p.phiB; }};
}

EnsembleEnvelopes EnsembleEnvelopes::from_pulse(const PulseSet& p,
                                                const EnsembleParams& base,
                                                double vartheta, double phi) {
  if (base.omegaC == 0 || base.delta == 0)
    throw std::invalid_argument("from_pulse: needs omegaC and delta");
  const double scale = 2.0 * base.delta / base.omegaC;
  const double sa = std::sin(0.5 * vartheta), ca = std::cos(0.5 * vartheta);
  return {[p, scale, sa](double t) { return scale * p.omega_eff(t) * sa; },
          [p, scale, ca](double t) { return scale * p.omega_eff(t) * ca; },
          [p, phi](double t) { return p.phi_B(t) + phi; },
          [p](double t) { return p.phi_B(t); }};
}

std::vector<Term> control_drive_terms(const ControlEnvelopes& env,
                                      const HilbertSpace& ctrl) {
  const int dim = ctrl.dim();
  const int i0 = ctrl.at("0"), i1 = ctrl.at("1"), ir = ctrl.at("r");
  std::vector<Term> terms;
  Term t0;
  t0.op = transition(dim, i0, ir);
  t0.coeff = [env](double t) {
    return 0.5 * env.omega0(t) * std::exp(ii * env.phi0(t));
  };
  t0.add_adjoint = true;
  t0.error_exponent = 1;
  t0.subsystem = Subsystem::control_drive;
  terms.push_back(std::move(t0));
  Term t1;
  t1.op = transition(dim, i1, ir);
  t1.coeff = [env](double t) {
    return 0.5 * env.omega1(t) * std::exp(ii * env.phi1(t));
  };
  t1.add_adjoint = true;
  t1.error_exponent = 1;
  t1.subsystem = Subsystem::control_drive;
  terms.push_back(std::move(t1));
  return terms;
}

std::vector<Term> ensemble_drive_terms(const EnsembleParams& base,
                                       const EnsembleEnvelopes& env,
                                       const EnsembleTermOptions& opt) {
  const HilbertSpace space = ensemble_space(base.n_atoms);
  const int dim = space.dim();
  const int n = base.n_atoms;
  const bool rotating = opt.frame == Frame::phase_rotating;

  std::vector<Eigen::Triplet<complexd>> ap, bp, rp, pdiag, rdiag, bproj;
  const double phi_ab = env.phiA(0.0) - env.phiB(0.0);
  const double sa = std::sin(0.5 * base.vartheta());
  const double ca = std::cos(0.5 * base.vartheta());
  for (int l = 1; l <= n; ++l) {
    const std::string ls = std::to_string(l);
    const int iA = space.at("A" + ls), iB = space.at("B" + ls);
    const int ip = space.at("p" + ls), iR = space.at("R" + ls);
    ap.emplace_back(iA, ip, 1.0);
    bp.emplace_back(iB, ip, 1.0);
    rp.emplace_back(iR, ip, 1.0);
    pdiag.emplace_back(ip, ip, 1.0);
    rdiag.emplace_back(iR, iR, 1.0);
    // |Bright_l><Bright_l| block on {A_l, B_l}
    bproj.emplace_back(iA, iA, sa * sa);
    bproj.emplace_back(iB, iB, ca * ca);
    bproj.emplace_back(iA, iB, sa * ca * std::exp(ii * phi_ab));
    bproj.emplace_back(iB, iA, sa * ca * std::exp(-ii * phi_ab));
  }

  const double delta = base.delta;
  const double shift = opt.two_photon_shift;
  std::vector<Term> terms;

  Term tA;
  tA.op = sparse_from_triplets(dim, ap);
  tA.coeff = rotating ? CoeffFn([env, delta](double t) {
    return 0.5 * env.omegaA(t) * std::exp(ii * (env.phiA(t) + delta * t));
  })
                      : CoeffFn([env](double t) {
                          return 0.5 * env.omegaA(t) *
                                 std::exp(ii * env.phiA(t));
                        });
  tA.add_adjoint = true;
  tA.error_exponent = 1;
  tA.subsystem = Subsystem::ensemble_drive;
  tA.rate_hint = rotating ? std::abs(delta) : 0.0;
  terms.push_back(std::move(tA));

  Term tB;
  tB.op = sparse_from_triplets(dim, bp);
  tB.coeff = rotating ? CoeffFn([env, delta](double t) {
    return 0.5 * env.omegaB(t) * std::exp(ii * (env.phiB(t) + delta * t));
  })
                      : CoeffFn([env](double t) {
                          return 0.5 * env.omegaB(t) *
                                 std::exp(ii * env.phiB(t));
                        });
  tB.add_adjoint = true;
  tB.error_exponent = 1;
  tB.subsystem = Subsystem::ensemble_drive;
  tB.rate_hint = rotating ? std::abs(delta) : 0.0;
  terms.push_back(std::move(tB));

  const double omegaC = base.omegaC;
  Term tC;
  tC.op = sparse_from_triplets(dim, rp);
  tC.coeff = rotating ? CoeffFn([omegaC, delta, shift](double t) {
    return 0.5 * omegaC * std::exp(ii * (delta + shift) * t);
  })
                      : CoeffFn([omegaC](double) { return 0.5 * omegaC; });
  tC.add_adjoint = true;
  tC.subsystem = Subsystem::ensemble_drive;
  tC.rate_hint = rotating ? std::abs(delta + shift) : 0.0;
  terms.push_back(std::move(tC));

  if (!rotating) {
    Term tp;
    tp.op = sparse_from_triplets(dim, pdiag);
    tp.coeff = [delta](double) { return -delta; };
    terms.push_back(std::move(tp));
    if (shift != 0.0) {
      Term tr;
      tr.op = sparse_from_triplets(dim, rdiag);
      tr.coeff = [shift](double) { return shift; };
      terms.push_back(std::move(tr));
    }
  }

  if (opt.stark_compensation && delta != 0.0) {
    Term tb;
    tb.op = sparse_from_triplets(dim, bproj);
    tb.coeff = [env, delta](double t) {
      const double w = std::hypot(env.omegaA(t), env.omegaB(t));
      return -w * w / (4.0 * delta);
    };
    tb.error_exponent = 2;
    tb.subsystem = Subsystem::ensemble_drive;
    terms.push_back(std::move(tb));
    if (omegaC != 0.0) {
      Term tr;
      tr.op = sparse_from_triplets(dim, rdiag);
      tr.coeff = [omegaC, delta](double) {
        return -omegaC * omegaC / (4.0 * delta);
      };
      terms.push_back(std::move(tr));
    }
  }
  return terms;
}

std::vector<Term> effective_drive_terms(const HilbertSpace& eff,
                                        double vartheta, double phi_ab,
                                        RealFn amplitude, RealFn phase,
                                        double delta_prime) {
  const int dim = eff.dim();
  const int iA = eff.at("Abar"), iB = eff.at("Bbar"), iR = eff.at("Rbar");
  const double sa = std::sin(0.5 * vartheta), ca = std::cos(0.5 * vartheta);
  std::vector<Term> terms;
  Term tc;
  tc.op = sparse_from_triplets(
      dim, {{iA, iR, sa * std::exp(ii * phi_ab)}, {iB, iR, ca}});
  tc.coeff = [amplitude, phase](double t) {
    return 0.5 * amplitude(t) * std::exp(ii * phase(t));
  };
  tc.add_adjoint = true;
  tc.error_exponent = 1;
  tc.subsystem = Subsystem::ensemble_drive;
  terms.push_back(std::move(tc));
  if (delta_prime != 0.0) {
    Term td;
    td.op = transition(dim, iR, iR);
    td.coeff = [delta_prime](double) { return delta_prime; };
    terms.push_back(std::move(td));
  }
  return terms;
}

Matrix ensemble_hamiltonian_full(const EnsembleParams& p, Frame frame,
                                 double blockade_shift, double t) {
  EnsembleTermOptions opt;
  opt.frame = frame;
  opt.two_photon_shift = blockade_shift;
  TimeDependentHamiltonian ham;
  ham.dim = ensemble_space(p.n_atoms).dim();
  ham.terms = ensemble_drive_terms(p, EnsembleEnvelopes::constant(p), opt);
  return ham.dense(t);
}

Matrix ensemble_hamiltonian_effective(const EnsembleParams& p) {
  if (p.delta == 0.0)
    throw std::invalid_argument("ensemble_hamiltonian_effective: delta == 0");
  const HilbertSpace eff = ensemble_effective_space(false, false);
  Vector bright = Vector::Zero(3);
  const double phi_ab = p.phiA - p.phiB;
  bright(eff.at("Abar")) = std::sin(0.5 * p.vartheta()) * std::exp(ii * phi_ab);
  bright(eff.at("Bbar")) = std::cos(0.5 * p.vartheta());
  Vector ryd = basis_vector(3, eff.at("Rbar"));
  Matrix h = 0.5 * p.omega_eff() * std::exp(ii * p.phiB) * bright *
             ryd.adjoint();
  return Matrix(h + h.adjoint().eval());
}

Matrix dispersive_effective_hamiltonian(const EnsembleParams& p) {
  const double wmax = std::max(std::abs(p.omegaA), std::abs(p.omegaB));
  if (p.delta_prime < 5.0 * wmax)
    throw std::invalid_argument(
        "dispersive_effective_hamiltonian: requires delta_prime >= "
        "5*max(omegaA', omegaB')");
  const HilbertSpace eff = ensemble_effective_space(false, false);
  Vector bright = Vector::Zero(3);
  const double phi_ab = p.phiA - p.phiB;
  bright(eff.at("Abar")) = std::sin(0.5 * p.vartheta()) * std::exp(ii * phi_ab);
  bright(eff.at("Bbar")) = std::cos(0.5 * p.vartheta());
  const double w2 = p.omegaA * p.omegaA + p.omegaB * p.omegaB;
  if (w2 == 0.0) return Matrix::Zero(3, 3);
  return Matrix(-w2 / (4.0 * p.delta_prime) * bright * bright.adjoint());
}

Matrix interaction_hamiltonian(const InteractionParams& ip,
                               InteractionKind kind, const HilbertSpace& ctrl,
                               const HilbertSpace& ens) {
  const int dim = ctrl.dim() * ens.dim();
  Matrix h = Matrix::Zero(dim, dim);
  if (kind == InteractionKind::blockade_shift) {
    const int ir = ctrl.at("r");
    const int n = n_atoms_of(ens);
    const auto shifts = ip.per_atom_shifts(n);
    for (int l = 1; l <= n; ++l) {
      const int iR = ens.at("R" + std::to_string(l));
      h(ir * ens.dim() + iR, ir * ens.dim() + iR) = shifts[l - 1];
    }
    return h;
  }
  if (!ctrl.has("R") || !ens.has("rbar"))
    throw std::invalid_argument(
        "interaction_hamiltonian: darkstate_exchange needs the extended "
        "control level R and the collective rbar level");
  const int a = ctrl.at("r") * ens.dim() + ens.at("Rbar");
  const int b = ctrl.at("R") * ens.dim() + ens.at("rbar");
  h(a, b) = ip.v_prime;
  h(b, a) = ip.v_prime;
  return h;
}

std::vector<JumpOp> ensemble_decay_jumps(const EnsembleParams& ep) {
  const HilbertSpace space = ensemble_space(ep.n_atoms);
  const int dim = space.dim();
  std::vector<JumpOp> jumps;
  const int iabar = space.at("abar");
  for (const auto& [level, rate] :
       {std::pair<const char*, double>{"p", ep.gamma_p},
        std::pair<const char*, double>{"R", ep.gamma_R}}) {
    if (rate <= 0.0) continue;
    const double amp = std::sqrt(rate / 3.0);
    for (int l = 1; l <= ep.n_atoms; ++l) {
      const std::string ls = std::to_string(l);
      const int ie = space.at(level + ls);
      for (const char* g : {"A", "B", "a"}) {
        const int ig = (g[0] == 'a') ? iabar : space.at(g + ls);
        jumps.push_back({transition(dim, ig, ie, amp),
                         std::string(g) + ls + "<-" + level + ls});
      }
    }
  }
  return jumps;
}

std::vector<JumpOp> control_decay_jumps(double gamma_r,
                                        const HilbertSpace& ctrl) {
  std::vector<JumpOp> jumps;
  if (gamma_r <= 0.0) return jumps;
  const double amp = std::sqrt(0.5 * gamma_r);
  for (const char* ryd : {"r", "R"}) {
    if (!ctrl.has(ryd)) continue;
    for (const char* g : {"0", "1"})
      jumps.push_back({transition(ctrl.dim(), ctrl.at(g), ctrl.at(ryd), amp),
                       std::string(g) + "<-" + ryd});
  }
  return jumps;
}

std::vector<JumpOp> effective_decay_jumps(
    double gamma, const HilbertSpace& eff,
    const std::vector<std::string>& rydberg_labels) {
  std::vector<JumpOp> jumps;
  if (gamma <= 0.0) return jumps;
  const double amp = std::sqrt(gamma / 3.0);
  for (const auto& ryd : rydberg_labels) {
    const int ie = eff.at(ryd);
    for (const char* g : {"Abar", "Bbar", "leak"}) {
      if (!eff.has(g)) continue;
      jumps.push_back(
          {transition(eff.dim(), eff.at(g), ie, amp), std::string(g)});
    }
  }
  return jumps;
}

JumpOp collective_dephasing_jump(double gamma_phi, const Vector& rbar) {
  const int dim = static_cast<int>(rbar.size());
  Matrix l = std::sqrt(gamma_phi) *
             (Matrix::Identity(dim, dim) - 2.0 * rbar * rbar.adjoint());
  return {l.sparseView(), "dephasing"};
}

std::vector<JumpOp> lindblad_ops(const ControlAtomParams& cp,
                                 const EnsembleParams& ep,
                                 const HilbertSpace& space) {
  const bool bare_control = space.has("r") && !space.has("abar");
  const bool bare_ensemble = space.has("abar");
  std::vector<JumpOp> jumps;
  if (bare_control) {
    return control_decay_jumps(cp.gamma_r, space);
  }
  if (bare_ensemble) {
    jumps = ensemble_decay_jumps(ep);
    if (ep.gamma_phi > 0.0)
      jumps.push_back(collective_dephasing_jump(
          ep.gamma_phi, collective_state(space, "R")));
    return jumps;
  }
  // composite control (x) ensemble
  const HilbertSpace ctrl = control_space();
  const HilbertSpace ens = ensemble_space(ep.n_atoms);
  if (space.dim() != ctrl.dim() * ens.dim())
    throw std::invalid_argument("lindblad_ops: unrecognized space layout");
  const std::vector<int> dims = {ctrl.dim(), ens.dim()};
  jumps = embed_jumps(control_decay_jumps(cp.gamma_r, ctrl), dims, 0);
  auto ej = embed_jumps(ensemble_decay_jumps(ep), dims, 1);
  jumps.insert(jumps.end(), ej.begin(), ej.end());
  if (ep.gamma_phi > 0.0) {
    auto deph = collective_dephasing_jump(ep.gamma_phi,
                                          collective_state(ens, "R"));
    jumps.push_back({embed_factor(deph.op, dims, 1), deph.label});
  }
  return jumps;
}

SparseOp embed_factor(const SparseOp& op, const std::vector<int>& dims,
                      int which) {
  SparseOp out = op;
  for (int f = which - 1; f >= 0; --f) {
    SparseOp id(dims[f], dims[f]);
    id.setIdentity();
    out = kron_sparse(id, out);
  }
  for (int f = which + 1; f < static_cast<int>(dims.size()); ++f) {
    SparseOp id(dims[f], dims[f]);
    id.setIdentity();
    out = kron_sparse(out, id);
  }
  return out;
}

std::vector<Term> embed_terms(const std::vector<Term>& terms,
                              const std::vector<int>& dims, int which) {
  std::vector<Term> out = terms;
  for (auto& t : out) t.op = embed_factor(t.op, dims, which);
  return out;
}

std::vector<JumpOp> embed_jumps(const std::vector<JumpOp>& jumps,
                                const std::vector<int>& dims, int which) {
  std::vector<JumpOp> out = jumps;
  for (auto& j : out) j.op = embed_factor(j.op, dims, which);
  return out;
}

}  // namespace mrae
