#pragma once

// Test-side oracles, kept deliberately independent of the library's
// implementation paths: a permutation-sign dual, a Laplace-expansion
// determinant, and position-space density evaluators that recover the
// x-independent part of quadratic densities by averaging two spacetime
// points a quarter period apart instead of pairing amplitudes explicitly.

#include <array>
#include <cmath>
#include <complex>

#include "notoph/dynamics.hpp"
#include "notoph/tensor.hpp"

namespace testutil {

using notoph::cplx;
using notoph::FieldStrength;
using notoph::FourVector;
using notoph::kMetric;
using notoph::Matrix4c;
using notoph::PlaneWaveMode;

inline int perm_sign(std::array<int, 4> idx) {
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

// (1/2) eps^{mu nu rho sig} F_{rho sig} written out from scratch
inline FieldStrength naive_dual(const FieldStrength& F) {
  FieldStrength out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      cplx s = 0.0;
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const int e = perm_sign({mu, nu, rho, sig});
          if (e == 0) continue;
          s += 0.5 * double(e) * kMetric[rho] * kMetric[sig] * F(rho, sig);
        }
      out.set(mu, nu, s);
    }
  return out;
}

inline double det4(const notoph::Mat4d& m) {
  auto at = [&](int r, int c) { return m[4 * r + c]; };
  double det = 0.0;
  for (int c0 = 0; c0 < 4; ++c0) {
    int cols[3], n = 0;
    for (int c = 0; c < 4; ++c)
      if (c != c0) cols[n++] = c;
    const double minor =
        at(1, cols[0]) * (at(2, cols[1]) * at(3, cols[2]) - at(2, cols[2]) * at(3, cols[1])) -
        at(1, cols[1]) * (at(2, cols[0]) * at(3, cols[2]) - at(2, cols[2]) * at(3, cols[0])) +
        at(1, cols[2]) * (at(2, cols[0]) * at(3, cols[1]) - at(2, cols[1]) * at(3, cols[0]));
    det += (c0 % 2 == 0 ? 1.0 : -1.0) * at(0, c0) * minor;
  }
  return det;
}

// --- position-space density oracle -----------------------------------------
//
// Everything depends on x through the phase phi = p.x. At a point:
//   F(phi)   = e^{-i phi} F+ + e^{+i phi} F-
//   dF_mu    = p_mu (-i e^{-i phi} F+ + i e^{+i phi} F-)
// Quadratic densities then contain e^{-+2i phi} pieces plus the constant;
// averaging phi and phi + pi/2 cancels both oscillators exactly.

struct FieldAtPoint {
  FieldStrength F;
  std::array<FieldStrength, 4> dF;  // lower derivative index

  cplx val_lower(int mu, int nu) const { return F.lower(mu, nu); }
  // (d_mu F)_{nu a} and (d_mu F)^{nu a}
  cplx d_low(int mu, int nu, int a) const { return dF[mu].lower(nu, a); }
  cplx d_up(int mu, int nu, int a) const { return dF[mu](nu, a); }
};

inline FieldAtPoint field_at_phase(const PlaneWaveMode& mode, double phi) {
  const cplx I{0.0, 1.0};
  const FourVector p4 = mode.p.four_momentum();
  const cplx em = std::exp(-I * phi);
  const cplx ep = std::exp(I * phi);
  FieldAtPoint f;
  f.F = em * mode.F_plus + ep * mode.F_minus;
  const FieldStrength slope = (-I * em) * mode.F_plus + (I * ep) * mode.F_minus;
  for (int mu = 0; mu < 4; ++mu) f.dF[mu] = (kMetric[mu] * p4[mu]) * slope;
  return f;
}

inline cplx lagrangian_at(const PlaneWaveMode& mode, double phi) {
  const FieldAtPoint f = field_at_phase(mode, phi);
  const double m = mode.p.m;
  cplx t1 = 0.0, t3 = 0.0, t4 = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int a = 0; a < 4; ++a) {
        t1 += kMetric[mu] * f.d_low(mu, nu, a) * f.d_up(mu, nu, a);
        t3 += f.d_low(mu, nu, a) * kMetric[nu] * f.d_up(nu, mu, a);
      }
  cplx t2 = 0.0;
  for (int a = 0; a < 4; ++a) {
    cplx div_up = 0.0, div_low = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      div_up += f.d_up(mu, mu, a);
      div_low += kMetric[mu] * f.d_low(mu, mu, a);
    }
    t2 += div_up * div_low;
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) t4 += f.val_lower(mu, nu) * f.F(mu, nu);
  return 0.25 * t1 - 0.5 * t2 - 0.5 * t3 + 0.25 * m * m * t4;
}

inline cplx lagrangian_oracle(const PlaneWaveMode& mode) {
  return 0.5 * (lagrangian_at(mode, 0.0) + lagrangian_at(mode, M_PI / 2.0));
}

inline Matrix4c stress_at(const PlaneWaveMode& mode, double phi) {
  const FieldAtPoint f = field_at_phase(mode, phi);
  const cplx lag = lagrangian_at(mode, phi);
  Matrix4c theta;
  for (int lam = 0; lam < 4; ++lam)
    for (int be = 0; be < 4; ++be) {
      cplx a = 0.0, b = 0.0, c = 0.0;
      for (int mu = 0; mu < 4; ++mu)
        for (int al = 0; al < 4; ++al) {
          a += kMetric[lam] * f.d_low(lam, mu, al) * kMetric[be] * f.d_up(be, mu, al);
          c += kMetric[mu] * f.d_up(mu, lam, al) * kMetric[be] * f.d_low(be, mu, al);
        }
      for (int al = 0; al < 4; ++al) {
        cplx div = 0.0;
        for (int mu = 0; mu < 4; ++mu) div += f.d_up(mu, mu, al);
        b += div * kMetric[be] * kMetric[al] * f.d_up(be, lam, al);
      }
      theta.at(lam, be) = 0.5 * (a - 2.0 * b - 2.0 * c) - lag * notoph::metric(lam, be);
    }
  return theta;
}

inline Matrix4c stress_oracle(const PlaneWaveMode& mode) {
  const Matrix4c a = stress_at(mode, 0.0);
  const Matrix4c b = stress_at(mode, M_PI / 2.0);
  Matrix4c out;
  for (int i = 0; i < 16; ++i) out.a[i] = 0.5 * (a.a[i] + b.a[i]);
  return out;
}

inline Matrix4c angmom_at(const PlaneWaveMode& mode, double phi) {
  const FieldAtPoint f = field_at_phase(mode, phi);
  Matrix4c J;
  FourVector div;  // d_mu F^{mu nu}
  for (int nu = 0; nu < 4; ++nu) {
    cplx s = 0.0;
    for (int mu = 0; mu < 4; ++mu) s += f.d_up(mu, mu, nu);
    div[nu] = s;
  }
  for (int kap = 0; kap < 4; ++kap)
    for (int tau = 0; tau < 4; ++tau) {
      cplx s = 0.0;
      for (int nu = 0; nu < 4; ++nu)
        s += div[nu] * (notoph::metric(0, kap) * f.val_lower(nu, tau) -
                        notoph::metric(0, tau) * f.val_lower(nu, kap));
      s += -kMetric[kap] * div[kap] * f.val_lower(0, tau);
      s += kMetric[tau] * div[tau] * f.val_lower(0, kap);
      for (int mu = 0; mu < 4; ++mu) {
        s += kMetric[kap] * f.F(mu, kap) *
             (f.d_low(0, tau, mu) + f.d_low(mu, 0, tau) + f.d_low(tau, mu, 0));
        s -= kMetric[tau] * f.F(mu, tau) *
             (f.d_low(0, kap, mu) + f.d_low(mu, 0, kap) + f.d_low(kap, mu, 0));
      }
      J.at(kap, tau) = s;
    }
  return J;
}

inline Matrix4c angmom_oracle(const PlaneWaveMode& mode) {
  const Matrix4c a = angmom_at(mode, 0.0);
  const Matrix4c b = angmom_at(mode, M_PI / 2.0);
  Matrix4c out;
  for (int i = 0; i < 16; ++i) out.a[i] = 0.5 * (a.a[i] + b.a[i]);
  return out;
}

}  // namespace testutil
