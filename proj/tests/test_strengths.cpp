#include <doctest.h>

#include <cmath>

#include "notoph/sampling.hpp"
#include "notoph/strengths.hpp"

using namespace notoph;

namespace {
constexpr cplx I{0.0, 1.0};

double eb_diff(const EBFields& a, const EBFields& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    d = std::max({d, std::abs(a.E[i] - b.E[i]), std::abs(a.B[i] - b.B[i])});
  return d;
}
}  // namespace

TEST_CASE("transverse magnetic column along the third axis") {
  // N = m, p_r = 0: B+ = -(i/2 sqrt2)(-i p3, p3, 0)
  const Momentum p{{0, 0, 2}, 1.0};
  const FourVector u = polarization_vector(p, PolarizationState::plus, NormScheme::mass());
  const EBFields f = strengths_from_potential(p, u, EnergySign::positive);
  const double isq2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f.B[0] - cplx(-isq2, 0.0)) < 1e-14);
  CHECK(std::abs(f.B[1] - cplx(0.0, -isq2)) < 1e-14);
  CHECK(std::abs(f.B[2]) < 1e-15);

  const EBFields c =
      closed_form_strengths(p, PolarizationState::plus, NormScheme::mass(), EnergySign::positive);
  CHECK(eb_diff(f, c) < 1e-14);
}

TEST_CASE("longitudinal strengths along the third axis") {
  // B+ vanishes; E+ = (0, 0, iN/2m * (E - p3^2/(E+m))) and the last factor
  // collapses to m exactly
  const Momentum p{{0, 0, 2}, 1.5};
  const EBFields f =
      closed_form_strengths(p, PolarizationState::zero, NormScheme::mass(), EnergySign::positive);
  CHECK(std::abs(f.B[0]) == 0.0);
  CHECK(std::abs(f.B[1]) == 0.0);
  CHECK(std::abs(f.B[2]) == 0.0);
  CHECK(std::abs(f.E[0]) == 0.0);
  CHECK(std::abs(f.E[1]) == 0.0);
  CHECK(std::abs(f.E[2] - I * 0.75) < 1e-14);  // i m / 2
}

TEST_CASE("construction matches the closed forms everywhere") {
  Sampler s(53);
  for (int k = 0; k < 100; ++k) {
    const Momentum p = s.momentum();
    for (const NormScheme& n : {NormScheme::unit(), NormScheme::mass()}) {
      for (PolarizationState sig : kSpatialPolarizations) {
        const FourVector u = polarization_vector(p, sig, n);
        for (EnergySign es : {EnergySign::positive, EnergySign::negative}) {
          const EBFields got = strengths_from_potential(p, u, es);
          const EBFields want = closed_form_strengths(p, sig, n, es);
          CHECK(eb_diff(got, want) / std::max(1.0, want.max_abs()) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("time-like strengths vanish for both energy signs") {
  Sampler s(59);
  for (int k = 0; k < 50; ++k) {
    const Momentum p = s.momentum();
    const FourVector u = polarization_vector(p, PolarizationState::timelike, NormScheme::mass());
    for (EnergySign es : {EnergySign::positive, EnergySign::negative}) {
      CHECK(strengths_from_potential(p, u, es).max_abs() < 1e-12);
      CHECK(closed_form_strengths(p, PolarizationState::timelike, NormScheme::mass(), es)
                .max_abs() == 0.0);
    }
  }
}

TEST_CASE("magnetic amplitudes are transverse to p") {
  Sampler s(61);
  for (int k = 0; k < 50; ++k) {
    const Momentum p = s.momentum();
    for (PolarizationState sig : kSpatialPolarizations) {
      const FourVector u = polarization_vector(p, sig, NormScheme::mass());
      const EBFields f = strengths_from_potential(p, u, EnergySign::positive);
      cplx dot = 0.0;
      double scale = 1.0;
      for (int i = 0; i < 3; ++i) {
        dot += p.p[i] * f.B[i];
        scale = std::max(scale, std::abs(p.p[i] * f.B[i]));
      }
      CHECK(std::abs(dot) / scale < 1e-13);
    }
  }
}

TEST_CASE("pairing relations with zero phases") {
  Sampler s(67);
  for (int k = 0; k < 20; ++k) {
    const Momentum p = s.momentum();
    const StrengthSet set = strength_set(p, NormScheme::mass());
    const int kp = phase_index(PolarizationState::plus);
    const int k0 = phase_index(PolarizationState::zero);
    const int km = phase_index(PolarizationState::minus);
    double scale = 1.0;
    for (int i = 0; i < 3; ++i)
      scale = std::max({scale, std::abs(set.plus[kp].B[i]), std::abs(set.plus[kp].E[i])});
    for (int i = 0; i < 3; ++i) {
      // B+(p,0) + B-(p,0) = 0 carries the extra minus sign
      CHECK(std::abs(set.plus[k0].B[i] + set.minus[k0].B[i]) / scale < 1e-13);
      CHECK(std::abs(set.plus[k0].E[i] + set.minus[k0].E[i]) / scale < 1e-13);
      // E+(p,+1) - E-(p,-1) = 0
      CHECK(std::abs(set.plus[kp].E[i] - set.minus[km].E[i]) / scale < 1e-13);
      CHECK(std::abs(set.plus[kp].B[i] - set.minus[km].B[i]) / scale < 1e-13);
      CHECK(std::abs(set.plus[km].B[i] - set.minus[kp].B[i]) / scale < 1e-13);
    }
    CHECK(set.alpha == set.alpha_prime);
  }
}

TEST_CASE("pairing relations with phase pi flip the negative amplitudes") {
  const Momentum p{{1.1, -0.4, 0.7}, 1.3};
  const ModePhases pi_phases{M_PI, M_PI, M_PI};
  const StrengthSet zero = strength_set(p, NormScheme::mass());
  const StrengthSet flipped = strength_set(p, NormScheme::mass(), pi_phases);
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(flipped.minus[m].B[i] + zero.minus[m].B[i]) < 1e-13);
      CHECK(std::abs(flipped.minus[m].E[i] + zero.minus[m].E[i]) < 1e-13);
    }
  CHECK(phase_relation_check(p, NormScheme::mass(), pi_phases, 1e-12).status ==
        CheckStatus::pass);
}

TEST_CASE("phase relation check passes for arbitrary phases") {
  Sampler s(71);
  for (int k = 0; k < 20; ++k) {
    const ModePhases phases{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3)};
    const CheckReport rep = phase_relation_check(s.momentum(), NormScheme::unit(), phases, 1e-12);
    CHECK(rep.status == CheckStatus::pass);
  }
}

TEST_CASE("rest-frame longitudinal tensor has a single plane") {
  const Momentum p{{0, 0, 0}, 1.7};
  const FieldStrength raw = notoph_raw(p, NormScheme::mass());
  CHECK(raw(1, 2) == cplx(1.7));  // N itself at rest
  CHECK(raw(2, 1) == cplx(-1.7));
  CHECK(raw(0, 1) == cplx(0.0));
  CHECK(raw(0, 2) == cplx(0.0));
  CHECK(raw(0, 3) == cplx(0.0));
  CHECK(raw(1, 3) == cplx(0.0));
  CHECK(raw(2, 3) == cplx(0.0));
}

TEST_CASE("calibrated tensor reproduces the closed form") {
  // the closed-form/raw ratio is iN for every momentum
  CHECK(std::abs(notoph_scale(1.0, NormScheme::mass()) - I) < 1e-13);
  CHECK(std::abs(notoph_scale(2.0, NormScheme::mass()) - 2.0 * I) < 1e-13);
  CHECK(std::abs(notoph_scale(2.0, NormScheme::unit()) - I) < 1e-13);

  const Momentum pz{{0, 0, 2}, 1.0};
  const FieldStrength T = notoph_tensor(pz, NormScheme::mass());
  CHECK(std::abs(T(1, 2) - I) < 1e-13);  // iN^2 with the momentum along z
  CHECK(std::abs(T(0, 3)) < 1e-15);

  Sampler s(73);
  for (double m : {0.6, 1.0, 3.2}) {
    for (int k = 0; k < 40; ++k) {
      const Momentum p{s.momentum3(), m};
      const FieldStrength got = notoph_tensor(p, NormScheme::mass());
      const FieldStrength want = closed_form_notoph(p, NormScheme::mass());
      cplx num = 0.0, den = 0.0;
      for (int i = 0; i < 6; ++i) {
        num += std::conj(got.e[i]) * want.e[i];
        den += std::conj(got.e[i]) * got.e[i];
      }
      CHECK(std::abs(num / den - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("closed-form longitudinal tensor: corners and antisymmetry") {
  Sampler s(79);
  for (int k = 0; k < 20; ++k) {
    const Momentum p = s.momentum();
    const FieldStrength F = closed_form_notoph(p, NormScheme::mass());
    CHECK(F(0, 3) == cplx(0.0));
    CHECK(F(3, 0) == cplx(0.0));
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) CHECK(F(mu, nu) == -F(nu, mu));
  }
}

TEST_CASE("strength builders reject non-positive mass") {
  const Momentum bad{{1, 0, 0}, 0.0};
  FourVector u;
  u.c = {1, 0, 0, 0};
  CHECK_THROWS_AS(strengths_from_potential(bad, u, EnergySign::positive), std::domain_error);
  CHECK_THROWS_AS(
      closed_form_strengths(bad, PolarizationState::zero, NormScheme::unit(),
                            EnergySign::positive),
      std::domain_error);
  CHECK_THROWS_AS(notoph_raw(bad, NormScheme::unit()), std::domain_error);
  CHECK_THROWS_AS(closed_form_notoph(bad, NormScheme::unit()), std::domain_error);
}
