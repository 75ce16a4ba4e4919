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

#include "mrae/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace mrae {

namespace {

constexpr double pi = two_pi / 2.0;

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// Peak component amplitudes, for diagnostics and the Stark hint.
EnsembleParams ratio_params(const EnsembleGateSetup& s, double cap) {
  EnsembleParams p;
  p.n_atoms = s.n_atoms;
  p.omegaC = s.omega_c;
  p.delta = s.delta;
  p.gamma_p = s.gamma_p;
  p.gamma_R = s.gamma_R;
  const double prime_peak = 2.0 * s.delta * cap / s.omega_c;
  p.omegaA = prime_peak * std::sin(0.5 * s.vartheta);
  p.omegaB = prime_peak * std::cos(0.5 * s.vartheta);
  p.phiA = s.phi;
  p.phiB = 0.0;
  return p;
}

Term static_term(SparseOp op, double value) {
  Term t;
  t.op = std::move(op);
  t.coeff = [value](double) { return complexd(value); };
  return t;
}

// sum_l shift_l |ryd><ryd|_(ctrl factor) (x) |R_l><R_l|_(ens factor) on a
// two-factor space; `ens_first` swaps the ordering.
Term blockade_term(const std::vector<double>& shifts,
                   const HilbertSpace& ctrl, const HilbertSpace& ens,
                   bool ens_first = false) {
  const int n = (ens.dim() - 1) / 4;
  const int ir = ctrl.at("r");
  std::vector<Eigen::Triplet<complexd>> trips;
  for (int l = 1; l <= n; ++l) {
    const int iR = ens.at("R" + std::to_string(l));
    const int idx = ens_first ? iR * ctrl.dim() + ir : ir * ens.dim() + iR;
    trips.emplace_back(idx, idx, shifts[l - 1]);
  }
  const int dim = ctrl.dim() * ens.dim();
  SparseOp op(dim, dim);
  op.setFromTriplets(trips.begin(), trips.end());
  return static_term(std::move(op), 1.0);
}

}  // namespace

const std::vector<GateAngles>& universal_gate_set() {
  static const std::vector<GateAngles> gates = {
      {-pi / 2.0, 0.0, "NOT"}, {-pi / 4.0, 0.0, "Hadamard"}, {0.0, 0.0, "Pi"}};
  return gates;
}

Matrix holonomic_single_qubit_gate(double theta, double phi) {
  Matrix u(2, 2);
  u << std::cos(theta), -std::sin(theta) * std::exp(ii * phi),
      -std::sin(theta) * std::exp(-ii * phi), -std::cos(theta);
  return u;
}

Matrix controlled_gate(const Matrix& u) {
  Matrix out = Matrix::Identity(4, 4);
  out.topLeftCorner(2, 2) = u;
  return out;
}

ChannelSpec control_atom_gate(double theta, double phi, double omega1,
                              double gamma_r) {
  ControlAtomParams p;
  p.omega1 = omega1;
  p.omega0 = omega1 * std::tan(0.5 * theta);
  p.phi0 = phi;
  p.phi1 = 0.0;
  p.gamma_r = gamma_r;

  const HilbertSpace ctrl = control_space();
  ChannelSpec c;
  c.schedule.dim = ctrl.dim();
  Segment seg;
  seg.ham.dim = ctrl.dim();
  seg.ham.terms = control_drive_terms(ControlEnvelopes::constant(p), ctrl);
  seg.duration = two_pi / p.omega();
  seg.label = "2pi cycle";
  c.schedule.segments.push_back(std::move(seg));
  c.schedule.jumps = control_decay_jumps(gamma_r, ctrl);

  c.embedding = Matrix::Zero(3, 2);
  c.embedding(ctrl.at("0"), 0) = 1.0;
  c.embedding(ctrl.at("1"), 1) = 1.0;
  c.ideal = holonomic_single_qubit_gate(theta, phi);
  return c;
}

ChannelSpec ensemble_qubit_gate(const EnsembleGateSetup& s) {
  TimedPulse drive;
  switch (s.family) {
    case PulseFamily::nhqc_constant:
      drive = nhqc_constant_pulse(s.omega_eff_cap);
      break;
    case PulseFamily::lr: {
      const double tau = lr_tau_for_cap(s.omega_eff_cap);
      drive = {lr_pulse_from_angles(lr_invariant_angles(tau)), tau};
      break;
    }
    case PulseFamily::zss: {
      const double tau = zss_tau_for_cap(s.n, s.omega_eff_cap);
      drive = {zss_pulse(s.n, tau), tau};
      break;
    }
  }

  const EnsembleParams base = ratio_params(s, s.omega_eff_cap);
  const HilbertSpace ens = ensemble_space(s.n_atoms);
  ChannelSpec c;
  c.schedule.dim = ens.dim();
  Segment seg;
  seg.ham.dim = ens.dim();
  EnsembleTermOptions opt;
  opt.frame = s.frame;
  seg.ham.terms = ensemble_drive_terms(
      base, EnsembleEnvelopes::from_pulse(drive.pulse, base, s.vartheta, s.phi),
      opt);
  seg.duration = drive.duration;
  seg.label = "ensemble cycle";
  c.schedule.segments.push_back(std::move(seg));
  c.schedule.jumps = lindblad_ops({}, base, ens);
  c.schedule.errors.epsilon_t = s.eps;

  c.embedding = Matrix::Zero(ens.dim(), 2);
  c.embedding.col(0) = collective_state(ens, "A");
  c.embedding.col(1) = collective_state(ens, "B");
  c.ideal = holonomic_single_qubit_gate(s.vartheta, s.phi);
  return c;
}

namespace {

ChannelSpec two_qubit_common(const TwoQubitSetup& s,
                             const ControlEnvelopes& ctrl_first,
                             double ctrl_half_duration,
                             const ControlEnvelopes& ctrl_second,
                             const EnsembleEnvelopes& target_env,
                             double target_duration,
                             const EnsembleParams& base) {
  const HilbertSpace ctrl = control_space();
  const HilbertSpace ens = ensemble_space(s.n_atoms);
  const std::vector<int> dims = {ctrl.dim(), ens.dim()};
  const int dim = ctrl.dim() * ens.dim();

  std::vector<double> shifts = s.blockade_shifts;
  if (shifts.empty()) shifts.assign(s.n_atoms, s.v);
  const Term rri = blockade_term(shifts, ctrl, ens);

  ChannelSpec c;
  c.schedule.dim = dim;
  auto control_segment = [&](const ControlEnvelopes& env,
                             const std::string& label) {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(control_drive_terms(env, ctrl), dims, 0);
    seg.ham.terms.push_back(rri);
    seg.duration = ctrl_half_duration;
    seg.label = label;
    return seg;
  };
  c.schedule.segments.push_back(control_segment(ctrl_first, "control up"));
  {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms =
        embed_terms(ensemble_drive_terms(base, target_env, {}), dims, 1);
    seg.ham.terms.push_back(rri);
    seg.duration = target_duration;
    seg.label = "target cycle";
    c.schedule.segments.push_back(std::move(seg));
  }
  c.schedule.segments.push_back(control_segment(ctrl_second, "control down"));

  ControlAtomParams cp;
  cp.gamma_r = s.gamma_r;
  c.schedule.jumps = lindblad_ops(cp, base, ctrl.tensor(ens));
  c.schedule.errors.epsilon_c = s.eps_c;
  c.schedule.errors.epsilon_t = s.eps_t;

  c.embedding = Matrix::Zero(dim, 4);
  const Vector e0 = basis_vector(3, ctrl.at("0"));
  const Vector e1 = basis_vector(3, ctrl.at("1"));
  c.embedding.col(0) = kron_vec(e0, collective_state(ens, "A"));
  c.embedding.col(1) = kron_vec(e0, collective_state(ens, "B"));
  c.embedding.col(2) = kron_vec(e1, collective_state(ens, "A"));
  c.embedding.col(3) = kron_vec(e1, collective_state(ens, "B"));
  c.ideal = controlled_gate(holonomic_single_qubit_gate(s.vartheta, s.phi));
  return c;
}

}  // namespace

ChannelSpec two_qubit_nhqc_gate(const TwoQubitSetup& s) {
  EnsembleParams base;
  base.n_atoms = s.n_atoms;
  base.omegaB = s.omega_b;
  base.omegaA = s.omega_b * std::tan(0.5 * s.vartheta);
  base.omegaC = s.omega_c;
  base.delta = s.delta;
  base.phiA = s.phi;
  base.phiB = 0.0;
  base.gamma_p = s.gamma_p;
  base.gamma_R = s.gamma_R;

  ControlAtomParams up;
  up.omega1 = s.omega1;
  ControlAtomParams down = up;
  down.phi1 = pi;

  return two_qubit_common(
      s, ControlEnvelopes::constant(up), pi / s.omega1,
      ControlEnvelopes::constant(down),
      EnsembleEnvelopes::constant(base), two_pi / base.omega_eff(), base);
}

ChannelSpec two_qubit_zss_gate(const TwoQubitSetup& s, double n,
                               double omega_eff_cap) {
  const double tau_c = zss_tau_for_cap(n, s.omega1);
  const double tau_t = zss_tau_for_cap(n, omega_eff_cap);
  const TwoQubitPulses pulses = two_qubit_schedule(n, tau_c, tau_t);

  EnsembleGateSetup es;
  es.n_atoms = s.n_atoms;
  es.omega_c = s.omega_c;
  es.delta = s.delta;
  es.vartheta = s.vartheta;
  es.phi = s.phi;
  es.gamma_p = s.gamma_p;
  es.gamma_R = s.gamma_R;
  const EnsembleParams base = ratio_params(es, omega_eff_cap);

  return two_qubit_common(
      s, ControlEnvelopes::from_pulse(pulses.control_first), 0.5 * tau_c,
      ControlEnvelopes::from_pulse(pulses.control_second),
      EnsembleEnvelopes::from_pulse(pulses.target, base, s.vartheta, s.phi),
      tau_t, base);
}

StateFidelityProblem toffoli_problem(const ToffoliSetup& s) {
  const HilbertSpace ctrl = control_space();
  const HilbertSpace ens = ensemble_space(s.n_atoms);
  const std::vector<int> dims = {ctrl.dim(), ctrl.dim(), ens.dim()};
  const int dim = 9 * ens.dim();

  EnsembleParams base;
  base.n_atoms = s.n_atoms;
  base.omegaB = s.omega_b;
  base.omegaA = s.omega_b * std::tan(0.5 * s.vartheta);
  base.omegaC = s.omega_c;
  base.delta = s.delta;
  base.gamma_p = s.gamma_p;
  base.gamma_R = s.gamma_R;

  // blockade on both control-ensemble pairs plus the control-control RRI
  std::vector<Eigen::Triplet<complexd>> trips;
  const int ir = ctrl.at("r");
  for (int c2 = 0; c2 < 3; ++c2)
    for (int l = 1; l <= s.n_atoms; ++l) {
      const int iR = ens.at("R" + std::to_string(l));
      const int a = (ir * 3 + c2) * ens.dim() + iR;
      trips.emplace_back(a, a, s.v);
      const int b = (c2 * 3 + ir) * ens.dim() + iR;
      trips.emplace_back(b, b, s.v);
    }
  for (int e = 0; e < ens.dim(); ++e) {
    const int a = (ir * 3 + ir) * ens.dim() + e;
    trips.emplace_back(a, a, s.v);
  }
  SparseOp rri_op(dim, dim);
  rri_op.setFromTriplets(trips.begin(), trips.end());
  const Term rri = static_term(std::move(rri_op), 1.0);

  ControlAtomParams up;
  up.omega1 = s.omega1;
  ControlAtomParams down = up;
  down.phi1 = pi;

  StateFidelityProblem prob;
  prob.schedule.dim = dim;
  auto control_segment = [&](int which, const ControlAtomParams& p,
                             const std::string& label) {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(
        control_drive_terms(ControlEnvelopes::constant(p), ctrl), dims, which);
    seg.ham.terms.push_back(rri);
    seg.duration = pi / s.omega1;
    seg.label = label;
    return seg;
  };
  prob.schedule.segments.push_back(control_segment(0, up, "c1 up"));
  prob.schedule.segments.push_back(control_segment(1, up, "c2 up"));
  {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(
        ensemble_drive_terms(base, EnsembleEnvelopes::constant(base), {}),
        dims, 2);
    seg.ham.terms.push_back(rri);
    seg.duration = two_pi / base.omega_eff();
    seg.label = "target cycle";
    prob.schedule.segments.push_back(std::move(seg));
  }
  prob.schedule.segments.push_back(control_segment(1, down, "c2 down"));
  prob.schedule.segments.push_back(control_segment(0, down, "c1 down"));

  auto cjumps = control_decay_jumps(s.gamma_r, ctrl);
  prob.schedule.jumps = embed_jumps(cjumps, dims, 0);
  auto c2j = embed_jumps(cjumps, dims, 1);
  prob.schedule.jumps.insert(prob.schedule.jumps.end(), c2j.begin(),
                             c2j.end());
  auto ej = embed_jumps(ensemble_decay_jumps(base), dims, 2);
  prob.schedule.jumps.insert(prob.schedule.jumps.end(), ej.begin(), ej.end());

  // (sqrt(0.1)|00A> + sqrt(0.9)|00B> + |01A> + ... + |11B|) / sqrt(7)
  const Vector vA = collective_state(ens, "A");
  const Vector vB = collective_state(ens, "B");
  auto basis3 = [&](int k) { return basis_vector(3, k); };
  Vector psi0 = Vector::Zero(dim);
  const Matrix u = holonomic_single_qubit_gate(s.vartheta, 0.0);
  Vector target = Vector::Zero(dim);
  struct Piece {
    int c1, c2;
    complexd a_amp, b_amp;
  };
  const double r7 = 1.0 / std::sqrt(7.0);
  const std::vector<Piece> pieces = {
      {0, 0, std::sqrt(0.1) * r7, std::sqrt(0.9) * r7},
      {0, 1, r7, r7},
      {1, 0, r7, r7},
      {1, 1, r7, r7}};
  for (const auto& p : pieces) {
    const Vector cc = kron_vec(basis3(p.c1), basis3(p.c2));
    psi0 += kron_vec(cc, Vector(p.a_amp * vA + p.b_amp * vB));
    if (p.c1 == 0 && p.c2 == 0) {
      const Vector rot_a = u(0, 0) * vA + u(1, 0) * vB;
      const Vector rot_b = u(0, 1) * vA + u(1, 1) * vB;
      target += kron_vec(cc, Vector(p.a_amp * rot_a + p.b_amp * rot_b));
    } else {
      target += kron_vec(cc, Vector(p.a_amp * vA + p.b_amp * vB));
    }
  }
  prob.initial = psi0;
  prob.target = target;
  return prob;
}

ChannelSpec role_exchange_gate(const RoleExchangeSetup& s) {
  const HilbertSpace ens = ensemble_space(s.n_atoms);
  const HilbertSpace ctrl = control_space();
  const std::vector<int> dims = {ens.dim(), ctrl.dim()};
  const int dim = ens.dim() * ctrl.dim();

  EnsembleParams base;
  base.n_atoms = s.n_atoms;
  base.omegaA = s.omega_a;
  base.omegaB = 0.0;
  base.omegaC = s.omega_c;
  base.delta = s.delta;
  base.gamma_p = s.gamma_p;
  base.gamma_R = s.gamma_R;

  ControlAtomParams atom;
  atom.omega1 = s.omega_a;  // caption: Omega_1 = Omega_A
  atom.omega0 = atom.omega1 * std::tan(0.5 * s.theta);
  atom.phi0 = s.phi;

  const Term rri =
      blockade_term(std::vector<double>(s.n_atoms, s.v), ctrl, ens, true);
  const double tau_pi = pi / base.omega_eff();

  ChannelSpec c;
  c.schedule.dim = dim;
  auto ensemble_pi = [&](double phiA, const std::string& label) {
    EnsembleParams p = base;
    p.phiA = phiA;
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(
        ensemble_drive_terms(p, EnsembleEnvelopes::constant(p), {}), dims, 0);
    seg.ham.terms.push_back(rri);
    seg.duration = tau_pi;
    seg.label = label;
    return seg;
  };
  c.schedule.segments.push_back(ensemble_pi(0.0, "ensemble up"));
  {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(
        control_drive_terms(ControlEnvelopes::constant(atom), ctrl), dims, 1);
    seg.ham.terms.push_back(rri);
    seg.duration = two_pi / atom.omega();
    seg.label = "atom cycle";
    c.schedule.segments.push_back(std::move(seg));
  }
  c.schedule.segments.push_back(ensemble_pi(pi, "ensemble down"));

  ControlAtomParams cp;
  cp.gamma_r = s.gamma_r;
  c.schedule.jumps = embed_jumps(ensemble_decay_jumps(base), dims, 0);
  auto cj = embed_jumps(control_decay_jumps(s.gamma_r, ctrl), dims, 1);
  c.schedule.jumps.insert(c.schedule.jumps.end(), cj.begin(), cj.end());

  c.embedding = Matrix::Zero(dim, 4);
  const Vector vA = collective_state(ens, "A");
  const Vector vB = collective_state(ens, "B");
  c.embedding.col(0) = kron_vec(vA, basis_vector(3, ctrl.at("0")));
  c.embedding.col(1) = kron_vec(vA, basis_vector(3, ctrl.at("1")));
  c.embedding.col(2) = kron_vec(vB, basis_vector(3, ctrl.at("0")));
  c.embedding.col(3) = kron_vec(vB, basis_vector(3, ctrl.at("1")));
  // excited (Abar) branch blocked, Bbar branch rotated
  c.ideal = Matrix::Identity(4, 4);
  c.ideal.bottomRightCorner(2, 2) =
      holonomic_single_qubit_gate(s.theta, s.phi);
  return c;
}

ChannelSpec dark_state_gate(const DarkStateSetup& s) {
  const HilbertSpace ctrl = control_space_extended();
  const HilbertSpace eff = ensemble_effective_space(true, true);
  const std::vector<int> dims = {ctrl.dim(), eff.dim()};
  const int dim = ctrl.dim() * eff.dim();

  // V' |r>_c<R| (x) |Rbar><rbar| + h.c.
  Term exchange;
  {
    const int a = ctrl.at("r") * eff.dim() + eff.at("Rbar");
    const int b = ctrl.at("R") * eff.dim() + eff.at("rbar");
    SparseOp op(dim, dim);
    op.insert(a, b) = 1.0;
    op.makeCompressed();
    exchange.op = op;
    exchange.coeff = [v = s.v_prime](double) { return complexd(v); };
    exchange.add_adjoint = true;
  }

  ControlAtomParams up;
  up.omega1 = s.omega1;
  ControlAtomParams down = up;
  down.phi1 = pi;

  const PulseSet envelope = adiabatic_sine2_pulse(s.t_middle);

  ChannelSpec c;
  c.schedule.dim = dim;
  auto control_segment = [&](const ControlAtomParams& p,
                             const std::string& label) {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(
        control_drive_terms(ControlEnvelopes::constant(p), ctrl), dims, 0);
    seg.ham.terms.push_back(exchange);
    seg.duration = pi / s.omega1;
    seg.label = label;
    return seg;
  };
  c.schedule.segments.push_back(control_segment(up, "control up"));
  {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(
        effective_drive_terms(
            eff, s.vartheta, s.phi,
            [envelope](double t) { return envelope.omega_eff(t); },
            [](double) { return 0.0; }, 0.0),
        dims, 1);
    seg.ham.terms.push_back(exchange);
    seg.duration = s.t_middle;
    seg.label = "adiabatic cycle";
    c.schedule.segments.push_back(std::move(seg));
  }
  c.schedule.segments.push_back(control_segment(down, "control down"));

  c.schedule.jumps = embed_jumps(control_decay_jumps(s.gamma, ctrl), dims, 0);
  auto ej =
      embed_jumps(effective_decay_jumps(s.gamma, eff, {"Rbar", "rbar"}),
                  dims, 1);
  c.schedule.jumps.insert(c.schedule.jumps.end(), ej.begin(), ej.end());

  c.embedding = Matrix::Zero(dim, 4);
  auto put = [&](int col, const char* cl, const char* el) {
    c.embedding(ctrl.at(cl) * eff.dim() + eff.at(el), col) = 1.0;
  };
  put(0, "0", "Abar");
  put(1, "0", "Bbar");
  put(2, "1", "Abar");
  put(3, "1", "Bbar");
  c.ideal = controlled_gate(holonomic_single_qubit_gate(s.vartheta, s.phi));
  return c;
}

ChannelSpec dispersive_regime_gate(const DispersiveSetup& s) {
  const HilbertSpace ctrl = control_space();
  // Conventional regime keeps the collective Rydberg level (and its decay
  // and dephasing); in the dispersive regime that level is adiabatically
  // discarded and only the ground-state light shift remains, with the
  // blockade-inhibited branch invariant.
  const HilbertSpace eff =
      s.dispersive ? HilbertSpace::from_labels({"Abar", "Bbar"})
                   : ensemble_effective_space(false, true);
  const std::vector<int> dims = {ctrl.dim(), eff.dim()};
  const int dim = ctrl.dim() * eff.dim();

  const double amp =
      std::abs(s.omega_b_prime / std::cos(0.5 * s.vartheta));
  const double duration = s.dispersive
                              ? two_pi * 2.0 * s.delta_prime / (amp * amp)
                              : two_pi / amp;

  ControlAtomParams up;
  up.omega1 = s.omega1;
  ControlAtomParams down = up;
  down.phi1 = pi;

  ChannelSpec c;
  c.schedule.dim = dim;

  std::vector<Term> middle_terms;
  if (s.dispersive) {
    // -amp^2/(4 delta') |Bright><Bright| on the non-excited control branch
    const double sa = std::sin(0.5 * s.vartheta);
    const double ca = std::cos(0.5 * s.vartheta);
    const double phi_ab = s.phi;
    std::vector<Eigen::Triplet<complexd>> trips;
    for (const char* cl : {"0", "1"}) {
      const int base = ctrl.at(cl) * eff.dim();
      const int iA = base + eff.at("Abar"), iB = base + eff.at("Bbar");
      trips.emplace_back(iA, iA, sa * sa);
      trips.emplace_back(iB, iB, ca * ca);
      trips.emplace_back(iA, iB, sa * ca * std::exp(ii * phi_ab));
      trips.emplace_back(iB, iA, sa * ca * std::exp(-ii * phi_ab));
    }
    SparseOp op(dim, dim);
    op.setFromTriplets(trips.begin(), trips.end());
    Term shift;
    shift.op = std::move(op);
    shift.coeff = [amp, dp = s.delta_prime](double) {
      return complexd(-amp * amp / (4.0 * dp));
    };
    shift.error_exponent = 2;
    shift.subsystem = Subsystem::ensemble_drive;
    middle_terms.push_back(std::move(shift));
  } else {
    middle_terms = embed_terms(
        effective_drive_terms(eff, s.vartheta, s.phi,
                              [amp](double) { return amp; },
                              [](double) { return 0.0; }, 0.0),
        dims, 1);
    const int a = ctrl.at("r") * eff.dim() + eff.at("Rbar");
    SparseOp op(dim, dim);
    op.insert(a, a) = 1.0;
    op.makeCompressed();
    Term rri;
    rri.op = std::move(op);
    rri.coeff = [v = s.v](double) { return complexd(v); };
    middle_terms.push_back(std::move(rri));
  }

  auto control_segment = [&](const ControlAtomParams& p,
                             const std::string& label) {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = embed_terms(
        control_drive_terms(ControlEnvelopes::constant(p), ctrl), dims, 0);
    seg.duration = pi / s.omega1;
    seg.label = label;
    return seg;
  };
  c.schedule.segments.push_back(control_segment(up, "control up"));
  {
    Segment seg;
    seg.ham.dim = dim;
    seg.ham.terms = middle_terms;
    seg.duration = duration;
    seg.label = s.dispersive ? "dispersive cycle" : "resonant cycle";
    c.schedule.segments.push_back(std::move(seg));
  }
  c.schedule.segments.push_back(control_segment(down, "control down"));

  c.schedule.jumps = embed_jumps(control_decay_jumps(s.gamma, ctrl), dims, 0);
  if (!s.dispersive) {
    auto ej =
        embed_jumps(effective_decay_jumps(s.gamma, eff, {"Rbar"}), dims, 1);
    c.schedule.jumps.insert(c.schedule.jumps.end(), ej.begin(), ej.end());
    if (s.gamma_phi > 0.0) {
      const JumpOp deph = collective_dephasing_jump(
          s.gamma_phi, basis_vector(eff.dim(), eff.at("Rbar")));
      c.schedule.jumps.push_back({embed_factor(deph.op, dims, 1), deph.label});
    }
  }

  c.embedding = Matrix::Zero(dim, 4);
  auto put = [&](int col, const char* cl, const char* el) {
    c.embedding(ctrl.at(cl) * eff.dim() + eff.at(el), col) = 1.0;
  };
  put(0, "0", "Abar");
  put(1, "0", "Bbar");
  put(2, "1", "Abar");
  put(3, "1", "Bbar");
  c.ideal = controlled_gate(holonomic_single_qubit_gate(s.vartheta, s.phi));
  return c;
}

}  // namespace mrae
