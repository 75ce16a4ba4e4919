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

#include "mrae/pulses.hpp"

#include <cmath>
#include <stdexcept>

namespace mrae {

namespace {

double flip_sign(const InvariantParams& ip, double t) {
  return (ip.half_time_flip && t > 0.5 * ip.tau) ? -1.0 : 1.0;
}

}  // namespace

double InvariantParams::alpha_at(double t) const {
  return flip_sign(*this, t) * alpha(t);
}

double InvariantParams::dalpha_at(double t) const {
  return flip_sign(*this, t) * dalpha(t);
}

double InvariantParams::dgamma_at(double t) const {
  return flip_sign(*this, t) * dgamma(t);
}

InvariantParams lr_invariant_angles(double tau) {
  if (tau <= 0) throw std::invalid_argument("lr_invariant_angles: tau <= 0");
  InvariantParams ip;
  ip.tau = tau;
  const double rate = two_pi / tau;
  ip.theta = [rate](double t) { return rate * t; };
  ip.dtheta = [rate](double) { return rate; };
  ip.gamma = [rate](double t) { return 2.0 * rate * t; };
  ip.dgamma = [rate](double) { return 2.0 * rate; };
  ip.alpha = [rate](double t) { return -2.0 * std::sin(rate * t); };
  ip.dalpha = [rate](double t) { return -2.0 * rate * std::cos(rate * t); };
  return ip;
}

InvariantParams zss_invariant_angles(double n, double tau) {
  if (n < 0) throw std::invalid_argument("zss_invariant_angles: n < 0");
  if (tau <= 0) throw std::invalid_argument("zss_invariant_angles: tau <= 0");
  InvariantParams ip;
  ip.n = n;
  ip.tau = tau;
  const double rate = two_pi / tau;
  ip.theta = [rate](double t) { return rate * t; };
  ip.dtheta = [rate](double) { return rate; };
  ip.gamma = [rate, n](double t) {
    const double th = rate * t;
    return n * (2.0 * th - std::sin(2.0 * th));
  };
  ip.dgamma = [rate, n](double t) {
    const double s = std::sin(rate * t);
    return 4.0 * n * rate * s * s;
  };
  ip.alpha = [rate, n](double t) {
    const double s = std::sin(rate * t);
    return -4.0 * n * s * s * s / 3.0;
  };
  ip.dalpha = [rate, n](double t) {
    const double s = std::sin(rate * t);
    return -4.0 * n * rate * s * s * std::cos(rate * t);
  };
  return ip;
}

double PulseSet::omega_eff(double t) const {
  return std::hypot(omega_R(t), omega_I(t));
}

double PulseSet::phi_B(double t) const {
  const double r = omega_R(t), i = omega_I(t);
  if (r == 0.0 && i == 0.0) return 0.0;
  return std::atan2(-i, r);
}

TimedPulse nhqc_constant_pulse(double omega_eff_max, double area) {
  if (omega_eff_max <= 0)
    throw std::invalid_argument("nhqc_constant_pulse: amplitude must be > 0");
  TimedPulse tp;
  tp.duration = area / omega_eff_max;
  tp.pulse.tau = tp.duration;
  tp.pulse.omega_R = [omega_eff_max](double) { return omega_eff_max; };
  tp.pulse.omega_I = [](double) { return 0.0; };
  return tp;
}

PulseSet lr_pulse_from_angles(const InvariantParams& ip) {
  PulseSet p;
  p.tau = ip.tau;
  p.omega_R = [ip](double t) {
    const double th = ip.theta(t);
    return std::cos(ip.alpha_at(t)) * std::sin(th) * ip.dgamma_at(t) -
           std::sin(ip.alpha_at(t)) * ip.dtheta(t);
  };
  p.omega_I = [ip](double t) {
    const double th = ip.theta(t);
    return std::sin(ip.alpha_at(t)) * std::sin(th) * ip.dgamma_at(t) +
           std::cos(ip.alpha_at(t)) * ip.dtheta(t);
  };
  return p;
}

PulseSet zss_pulse(double n, double tau) {
  return lr_pulse_from_angles(zss_invariant_angles(n, tau));
}

PulseSet inverse_pulse(const PulseSet& p, double duration) {
  PulseSet out;
  out.tau = duration;
  out.omega_R = [p, duration](double s) { return -p.omega_R(duration - s); };
  out.omega_I = [p, duration](double s) { return -p.omega_I(duration - s); };
  return out;
}

PulseSet adiabatic_sine2_pulse(double T) {
  if (T <= 0) throw std::invalid_argument("adiabatic_sine2_pulse: T <= 0");
  PulseSet p;
  p.tau = T;
  p.omega_R = [T](double t) {
    const double s = std::sin(two_pi / 2.0 * t / T);
    return 2.0 * two_pi / T * s * s;
  };
  p.omega_I = [](double) { return 0.0; };
  return p;
}

double pulse_peak(const PulseSet& p, int samples) {
  double peak = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = p.tau * k / (samples - 1);
    peak = std::max(peak, p.omega_eff(t));
  }
  return peak;
}

namespace {

double tau_for_cap(double cap, const std::function<PulseSet(double)>& make) {
  if (cap <= 0) throw std::invalid_argument("tau_for_cap: cap <= 0");
  double lo = 0.1 * two_pi / cap;
  double hi = 16.0 * two_pi / cap;
  while (pulse_peak(make(lo)) < cap) lo *= 0.5;
  while (pulse_peak(make(hi)) > cap) hi *= 2.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (pulse_peak(make(mid)) > cap ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double zss_tau_for_cap(double n, double cap) {
  return tau_for_cap(cap, [n](double tau) { return zss_pulse(n, tau); });
}

double lr_tau_for_cap(double cap) {
  return tau_for_cap(cap, [](double tau) {
    return lr_pulse_from_angles(lr_invariant_angles(tau));
  });
}

double simpson(const RealFn& f, double a, double b, long intervals) {
  if (intervals < 2) intervals = 2;
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (long k = 1; k < intervals; ++k)
    sum += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

complexd simpson_complex(const std::function<complexd(double)>& f, double a,
                         double b, long intervals) {
  if (intervals < 2) intervals = 2;
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  complexd sum = f(a) + f(b);
  for (long k = 1; k < intervals; ++k)
    sum += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double qs_sensitivity(const InvariantParams& ip, long intervals) {
  const double half = 0.5 * ip.tau;
  if (std::abs(ip.theta(0.0)) > 1e-9 ||
      std::abs(ip.theta(half) - two_pi / 2.0) > 1e-9)
    throw std::invalid_argument(
        "qs_sensitivity: requires Theta(0)=0 and Theta(tau/2)=pi");
  const complexd integral = simpson_complex(
      [&](double t) {
        const double th = ip.theta(t);
        const double s = std::sin(th);
        return std::exp(-ii * ip.gamma(t)) * ip.dtheta(t) * s * s;
      },
      0.0, half, intervals);
  return std::norm(integral);
}

double qs_closed_form(double n) {
  if (n == 0.0) return two_pi * two_pi / 16.0;  // pi^2/4 limit
  const double s = std::sin(two_pi / 2.0 * n);
  return s * s / (4.0 * n * n);
}

double dynamical_phase(const InvariantParams& ip, long intervals) {
  return 0.5 * simpson(
                   [&](double t) {
                     const double s = std::sin(ip.theta(t));
                     return s * s * ip.dgamma_at(t);
                   },
                   0.0, ip.tau, intervals);
}

std::vector<std::pair<double, double>> dynamical_phase_trace(
    const InvariantParams& ip, int samples) {
  std::vector<std::pair<double, double>> out;
  out.reserve(samples);
  const long per_slice = 64;
  double acc = 0.0;
  out.emplace_back(0.0, 0.0);
  for (int k = 1; k < samples; ++k) {
    const double t0 = ip.tau * (k - 1) / (samples - 1);
    const double t1 = ip.tau * k / (samples - 1);
    acc += 0.5 * simpson(
                     [&](double t) {
                       const double s = std::sin(ip.theta(t));
                       return s * s * ip.dgamma_at(t);
                     },
                     t0, t1, per_slice);
    out.emplace_back(t1, acc);
  }
  return out;
}

Matrix effective_hamiltonian_2x2(const PulseSet& p, double t) {
  Matrix h(2, 2);
  const double r = p.omega_R(t), i = p.omega_I(t);
  h << 0.0, 0.5 * complexd(r, -i), 0.5 * complexd(r, i), 0.0;
  return h;
}

Matrix invariant_matrix(const InvariantParams& ip, double t) {
  const double th = ip.theta(t);
  const double a = ip.alpha_at(t);
  Matrix m(2, 2);
  m << std::cos(th), std::exp(-ii * a) * std::sin(th),
      std::exp(ii * a) * std::sin(th), -std::cos(th);
  return 0.5 * ip.mu * m;
}

Vector invariant_eigenvector_plus(const InvariantParams& ip, double t) {
  const double th = ip.theta(t);
  const double a = ip.alpha_at(t);
  Vector v(2);
  v << std::cos(0.5 * th) * std::exp(-0.5 * ii * a),
      std::sin(0.5 * th) * std::exp(0.5 * ii * a);
  return v;
}

NhqcPlusReport verify_nhqc_plus_conditions(const InvariantParams& ip,
                                           const PulseSet& pulse, int grid) {
  NhqcPlusReport rep;

  const Vector nu0 = invariant_eigenvector_plus(ip, 0.0);
  const Vector nu1 = invariant_eigenvector_plus(ip, ip.tau);
  rep.cyclic_defect = std::abs(std::abs(nu0.dot(nu1)) - 1.0);
  rep.cyclic_ok = rep.cyclic_defect < 1e-9;

  // d/dt |nu><nu| from the analytic angle derivatives, avoiding the flip
  // discontinuity at tau/2 by a half-grid offset.
  double residual = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double t = ip.tau * (k + 0.5) / grid;
    const double th = ip.theta(t), dth = ip.dtheta(t);
    const double a = ip.alpha_at(t), da = ip.dalpha_at(t);
    const Vector nu = invariant_eigenvector_plus(ip, t);
    Vector dnu(2);
    dnu << (-0.5 * dth * std::sin(0.5 * th) -
            0.5 * ii * da * std::cos(0.5 * th)) *
               std::exp(-0.5 * ii * a),
        (0.5 * dth * std::cos(0.5 * th) + 0.5 * ii * da * std::sin(0.5 * th)) *
            std::exp(0.5 * ii * a);
    const Matrix proj = nu * nu.adjoint();
    const Matrix dproj = dnu * nu.adjoint() + nu * dnu.adjoint();
    const Matrix h = effective_hamiltonian_2x2(pulse, t);
    residual = std::max(residual, max_abs(dproj + ii * commutator(h, proj)));
  }
  rep.von_neumann_residual = residual;
  rep.von_neumann_ok = residual < 1e-6;

  rep.dynamical_phase_total = dynamical_phase(ip);
  rep.dynamical_phase_ok = std::abs(rep.dynamical_phase_total) < 1e-6;
  return rep;
}

TwoQubitPulses two_qubit_schedule(double n, double tau_c, double tau_t) {
  if (tau_c <= 0 || tau_t <= 0)
    throw std::invalid_argument("two_qubit_schedule: non-positive duration");
  TwoQubitPulses s;
  s.n = n;
  s.tau_c = tau_c;
  s.tau_t = tau_t;
  const PulseSet control_cycle = zss_pulse(n, tau_c);
  s.control_first.tau = 0.5 * tau_c;
  s.control_first.omega_R = control_cycle.omega_R;
  s.control_first.omega_I = control_cycle.omega_I;
  s.control_second = inverse_pulse(s.control_first, 0.5 * tau_c);
  s.target = zss_pulse(n, tau_t);
  return s;
}

}  // namespace mrae
