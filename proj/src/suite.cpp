#include "notoph/suite.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "notoph/clifford.hpp"
#include "notoph/dynamics.hpp"
#include "notoph/limits.hpp"
#include "notoph/sampling.hpp"

namespace notoph {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

std::string fmt_cplx(cplx v) {
  std::ostringstream os;
  os << std::setprecision(12) << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag())
     << "i";
  return os.str();
}

Sampler sampler_for(const SuiteConfig& cfg, std::string_view id) {
  return Sampler(cfg.seed ^ hash_id(id));
}

// ---------------------------------------------------------------- tensor --

CheckReport check_boost_metric(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "tensor.boost_metric");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    const LorentzBoost L = boost_matrix(p);
    double dev = 0.0, scale = 1.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double lgl = 0.0;
        for (int a = 0; a < 4; ++a) lgl += L(a, i) * kMetric[a] * L(a, j);
        scale = std::max(scale, L(i, j) * L(i, j));
        dev = std::max(dev, std::abs(lgl - metric(i, j)));
      }
    worst = std::max(worst, dev / scale);
  }
  return make_check("tensor.boost_metric", "boosts preserve the metric, L^T g L = g", worst,
                    cfg.tol);
}

CheckReport check_boost_rest(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "tensor.boost_rest");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    FourVector rest;
    rest.c = {p.m, 0.0, 0.0, 0.0};
    const FourVector v = boost_matrix(p).apply(rest);
    const FourVector want = p.four_momentum();
    worst = std::max(worst, (v - want).max_abs() / std::max(1.0, want.max_abs()));
  }
  return make_check("tensor.boost_rest", "boost takes (m,0,0,0) to (E_p, p)", worst, cfg.tol);
}

CheckReport check_dual_involution(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "tensor.dual_involution");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const FieldStrength F = s.antisymmetric_tensor();
    worst = std::max(worst, (dual(dual(F)) + F).max_abs() / std::max(1.0, F.max_abs()));
  }
  return make_check("tensor.dual_involution", "dual of dual is minus the identity", worst,
                    cfg.tol);
}

CheckReport check_eb_roundtrip(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "tensor.eb_roundtrip");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const FieldStrength F = s.antisymmetric_tensor();
    const EBFields eb = eb_decompose(F);
    worst = std::max(worst, (eb_compose(eb.E, eb.B) - F).max_abs());
  }
  return make_check("tensor.eb_roundtrip", "E/B decomposition round trip is exact", worst, 0.0);
}

// -------------------------------------------------------------- clifford --

CheckReport check_anticommutators(const SuiteConfig&) {
  const GammaBasis& b = gamma_basis();
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const DiracMatrix anti = b.gamma[mu] * b.gamma[nu] + b.gamma[nu] * b.gamma[mu];
      const DiracMatrix want = (2.0 * metric(mu, nu)) * DiracMatrix::identity();
      worst = std::max(worst, (anti - want).max_abs());
    }
  return make_check("clifford.anticommutators", "gamma anticommutators reproduce the metric",
                    worst, 0.0);
}

CheckReport check_dual_identity_sign(const SuiteConfig&) {
  // the calibration must actually discriminate: the flipped sign has to fail
  const double dev = verify_dual_identity(gamma_basis(), -1, 0.0).max_abs_error;
  const double err = dev >= 1.0 ? 0.0 : 1.0;
  return make_check("clifford.dual_identity_sign",
                    "flipped eps sign violates the sigma dual identity", err, 0.0,
                    "deviation with flipped sign " + fmt(dev));
}

CheckReport check_expansion_symmetry(const SuiteConfig& cfg) {
  const GammaBasis& b = gamma_basis();
  double worst = 0.0;
  auto sym = [&](const DiracMatrix& m) { worst = std::max(worst, (m.transpose() - m).max_abs()); };
  auto antisym = [&](const DiracMatrix& m) {
    worst = std::max(worst, (m.transpose() + m).max_abs());
  };
  antisym(b.R);
  antisym(b.gamma5 * b.R);
  for (int mu = 0; mu < 4; ++mu) sym(b.gamma[mu] * b.R);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      sym(b.sigma[mu][nu] * b.R);
      sym(b.gamma5 * b.sigma[mu][nu] * b.R);
    }
  Sampler s = sampler_for(cfg, "clifford.expansion_symmetry");
  for (int k = 0; k < 8; ++k) sym(symmetric_expand(s.four_vector(), s.antisymmetric_tensor()));
  return make_check("clifford.expansion_symmetry",
                    "expansion matrices have the symmetry that makes the spinor symmetric", worst,
                    0.0);
}

// ---------------------------------------------------------- polarization --

CheckReport check_boost_vs_closed(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "polarization.boost_vs_closed_form");
  double worst = 0.0;
  const std::array<NormScheme, 2> norms{NormScheme::unit(), NormScheme::mass()};
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (const NormScheme& n : norms)
      for (PolarizationState sig : kAllPolarizations) {
        const FourVector a = polarization_vector(p, sig, n);
        const FourVector c = closed_form_u(p, sig, n);
        worst = std::max(worst, (a - c).max_abs() / std::max(1.0, c.max_abs()));
      }
  }
  return make_check("polarization.boost_vs_closed_form",
                    "boosted polarization matches the closed momentum-space columns", worst,
                    cfg.tol);
}

CheckReport check_transversality(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "polarization.transversality");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    const FourVector p4 = p.four_momentum();
    for (PolarizationState sig : kSpatialPolarizations) {
      const FourVector eps = polarization_vector(p, sig, NormScheme::unit());
      const double scale = std::max(1.0, p.energy() * eps.max_abs());
      worst = std::max(worst, std::abs(minkowski_dot(p4, eps)) / scale);
    }
    const FourVector et = polarization_vector(p, PolarizationState::timelike, NormScheme::unit());
    const double scale = std::max(1.0, p.energy() * et.max_abs());
    worst = std::max(worst, std::abs(minkowski_dot(p4, et) - p.m) / scale);
  }
  return make_check("polarization.transversality",
                    "p.eps = 0 for spatial modes and p.eps = m for the time-like mode", worst,
                    cfg.tol);
}

CheckReport check_orthonormality(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "polarization.orthonormality");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    const double gamma = p.energy() / p.m;
    const double scale = std::max(1.0, gamma * gamma);
    for (PolarizationState a : kAllPolarizations)
      for (PolarizationState b : kAllPolarizations) {
        cplx want = 0.0;
        if (a == b)
          want = a == PolarizationState::timelike ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(norm_check(p, a, b) - want) / scale);
      }
  }
  return make_check("polarization.orthonormality",
                    "conjugate-first products give -delta (spatial), +1 (time-like), 0 (cross)",
                    worst, cfg.tol);
}

CheckReport check_completeness(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "polarization.completeness");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    Matrix4c sum;
    double scale = 1.0;
    auto accumulate = [&](PolarizationState sig, double sign) {
      const FourVector e = polarization_vector(p, sig, NormScheme::unit());
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const cplx term = sign * e[mu] * std::conj(e[nu]);
          sum.at(mu, nu) += term;
          scale = std::max(scale, std::abs(term));
        }
    };
    accumulate(PolarizationState::timelike, 1.0);
    for (PolarizationState sig : kSpatialPolarizations) accumulate(sig, -1.0);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        worst = std::max(worst, std::abs(sum.at(mu, nu) - metric(mu, nu)) / scale);
  }
  return make_check("polarization.completeness",
                    "time-like dyad minus spatial dyads reproduces the metric", worst, cfg.tol);
}

// -------------------------------------------------------------- strengths --

CheckReport check_strengths_vs_closed(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "strengths.construction_vs_closed_form");
  double worst = 0.0;
  const std::array<NormScheme, 2> norms{NormScheme::unit(), NormScheme::mass()};
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (const NormScheme& n : norms)
      for (PolarizationState sig : kSpatialPolarizations) {
        const FourVector u = polarization_vector(p, sig, n);
        for (EnergySign es : {EnergySign::positive, EnergySign::negative}) {
          const double phase =
              es == EnergySign::negative ? cfg.phases[phase_index(sig)] : 0.0;
          const EBFields got = strengths_from_potential(p, u, es, phase);
          const EBFields want = closed_form_strengths(p, sig, n, es, cfg.phases);
          double diff = 0.0, scale = 1.0;
          for (int i = 0; i < 3; ++i) {
            diff = std::max({diff, std::abs(got.E[i] - want.E[i]), std::abs(got.B[i] - want.B[i])});
            scale = std::max({scale, std::abs(want.E[i]), std::abs(want.B[i])});
          }
          worst = std::max(worst, diff / scale);
        }
      }
  }
  return make_check("strengths.construction_vs_closed_form",
                    "potential-built strengths match the closed-form columns for both energy signs",
                    worst, cfg.tol);
}

CheckReport check_timelike_zero(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "strengths.timelike_zero");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    const FourVector u = polarization_vector(p, PolarizationState::timelike, NormScheme::mass());
    for (EnergySign es : {EnergySign::positive, EnergySign::negative})
      worst = std::max(worst, strengths_from_potential(p, u, es).max_abs());
  }
  return make_check("strengths.timelike_zero",
                    "time-like mode carries identically vanishing E and B", worst, cfg.tol);
}

CheckReport check_strength_transversality(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "strengths.transversality");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (PolarizationState sig : kSpatialPolarizations) {
      const FourVector u = polarization_vector(p, sig, NormScheme::mass());
      for (EnergySign es : {EnergySign::positive, EnergySign::negative}) {
        const EBFields f = strengths_from_potential(p, u, es);
        cplx dot = 0.0;
        double scale = 1.0;
        for (int i = 0; i < 3; ++i) {
          dot += p.p[i] * f.B[i];
          scale = std::max(scale, std::abs(p.p[i] * f.B[i]));
        }
        worst = std::max(worst, std::abs(dot) / scale);
      }
    }
  }
  return make_check("strengths.transversality", "p.B = 0 (B is a momentum-space curl)", worst,
                    cfg.tol);
}

CheckReport check_phase_relations(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "strengths.phase_relations");
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const Momentum p = s.momentum();
    worst = std::max(worst,
                     phase_relation_check(p, NormScheme::mass(), cfg.phases, cfg.tol).max_abs_error);
    const ModePhases random_phases{s.uniform(-3.0, 3.0), s.uniform(-3.0, 3.0),
                                   s.uniform(-3.0, 3.0)};
    worst = std::max(
        worst, phase_relation_check(p, NormScheme::unit(), random_phases, cfg.tol).max_abs_error);
  }
  return make_check("strengths.phase_relations",
                    "six positive/negative pairing relations hold with the fixed sign pattern", worst,
                    cfg.tol);
}

CheckReport check_notoph_ratio(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "strengths.notoph_ratio");
  double worst = 0.0;
  const std::array<NormScheme, 2> norms{NormScheme::unit(), NormScheme::mass()};
  for (double m : {0.6, 1.7}) {
    for (const NormScheme& n : norms) {
      for (int k = 0; k < cfg.samples / 2; ++k) {
        const Momentum p{s.momentum3(), m};
        const FieldStrength T = notoph_tensor(p, n);
        const FieldStrength C = closed_form_notoph(p, n);
        cplx num = 0.0, den = 0.0;
        for (int i = 0; i < 6; ++i) {
          num += std::conj(T.e[i]) * C.e[i];
          den += std::conj(T.e[i]) * T.e[i];
        }
        worst = std::max(worst, std::abs(num / den - 1.0));
      }
    }
  }
  return make_check("strengths.notoph_ratio",
                    "antisymmetrized-product tensor is a fixed multiple of the closed form",
                    worst, 1e-10);
}

CheckReport info_notoph_calibration(const SuiteConfig& cfg) {
  std::ostringstream det;
  det << "closed-form / raw-product ratio: ";
  for (double m : {0.5, 1.0, 2.0})
    det << "m=" << m << ": " << fmt_cplx(notoph_scale(m, cfg.norm)) << "  ";
  det << "(norm " << cfg.norm.name() << ")";
  return make_info("strengths.notoph_calibration", "calibrated longitudinal-tensor scale",
                   det.str());
}

// --------------------------------------------------------------- dynamics --

CheckReport check_proca(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.proca_residuals");
  double worst = 0.0;
  const std::array<NormScheme, 2> norms{NormScheme::unit(), NormScheme::mass()};
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (const NormScheme& n : norms)
      for (PolarizationState sig : kSpatialPolarizations) {
        const PlaneWaveMode mode = plane_wave_mode(p, sig, n);
        for (EnergySign es : {EnergySign::positive, EnergySign::negative}) {
          worst = std::max(worst, proca_residual(mode, ProcaConvention::half_mass, es).max_rel);
          const PlaneWaveMode tb = normalization_map(mode, MapDirection::to_textbook);
          worst = std::max(worst, proca_residual(tb, ProcaConvention::textbook, es).max_rel);
        }
      }
  }
  return make_check("dynamics.proca_residuals",
                    "first-order vector sets close in both conventions, linked by the 2m map",
                    worst, cfg.tol);
}

CheckReport check_normalization_roundtrip(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.normalization_roundtrip");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const PlaneWaveMode mode = plane_wave_mode(s.momentum(), PolarizationState::plus,
                                               NormScheme::mass());
    const PlaneWaveMode back = normalization_map(
        normalization_map(mode, MapDirection::to_textbook), MapDirection::to_half_mass);
    worst = std::max(worst, (back.u - mode.u).max_abs() / std::max(1.0, mode.u.max_abs()));
    worst = std::max(worst, (back.F_plus - mode.F_plus).max_abs());
  }
  return make_check("dynamics.normalization_roundtrip", "convention map round trip is lossless",
                    worst, 1e-14);
}

CheckReport check_kemmer(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.kemmer_scalar");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const cplx phi = (1.0 + s.uniform01()) * s.complex_unit();
    worst = std::max(worst, kemmer_scalar_check(s.momentum(), phi, cfg.tol).max_abs_error);
  }
  return make_check("dynamics.kemmer_scalar", "j=0 first-order set closes on shell", worst,
                    cfg.tol);
}

CheckReport check_dual_set(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.dual_set");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (PolarizationState sig : kSpatialPolarizations) {
      const FourVector B = polarization_vector(p, sig, NormScheme::mass());
      worst = std::max(worst, dual_set_check(p, B, cfg.tol).max_abs_error);
    }
  }
  return make_check("dynamics.dual_set", "dual-tensor first-order set closes on shell", worst,
                    cfg.tol);
}

CheckReport check_bw(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.bw_residuals");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (PolarizationState sig : kSpatialPolarizations)
      worst = std::max(worst, bw_check(p, sig, cfg.tol).max_abs_error);
  }
  return make_check("dynamics.bw_residuals",
                    "Dirac operator annihilates the symmetric spinor on both indices", worst,
                    cfg.tol);
}

CheckReport info_bw_factor(const SuiteConfig&) {
  const cplx c = bw_relative_factor();
  std::ostringstream det;
  det << "tensor-term weight " << fmt_cplx(c) << ", distance from unity " << std::abs(c - 1.0);
  return make_info("dynamics.bw_factor", "calibrated relative weight in the symmetric expansion",
                   det.str());
}

CheckReport check_eom(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.eom_residual");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (PolarizationState sig : kSpatialPolarizations) {
      const PlaneWaveMode mode = plane_wave_mode(p, sig, NormScheme::mass());
      for (EnergySign es : {EnergySign::positive, EnergySign::negative})
        worst = std::max(worst, eom_residual(mode, es).max_abs() / mode.scale());
    }
  }
  return make_check("dynamics.eom_residual", "second-order tensor equation closes on shell",
                    worst, cfg.tol);
}

CheckReport check_variation(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.variation_first_order");
  double worst = 0.0;
  for (int k = 0; k < 12; ++k) {
    const FieldStrength F = s.antisymmetric_tensor();
    Mat4d dir{};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const double w = s.uniform(-1.0, 1.0);
        dir[4 * i + j] = w;
        dir[4 * j + i] = -w;
      }
    auto err_at = [&](double theta) {
      Mat4d omega{};
      for (int i = 0; i < 16; ++i) omega[i] = theta * dir[i];
      const FieldStrength exact = transform_tensor(lorentz_from_omega(omega), F) - F;
      return (infinitesimal_variation(omega, F) - exact).max_abs();
    };
    const double e1 = err_at(1e-3);
    const double e2 = err_at(5e-4);
    // O(theta^2) remainder: halving theta divides the error by four
    worst = std::max(worst, std::abs(e1 / e2 / 4.0 - 1.0));
  }
  return make_check("dynamics.variation_first_order",
                    "generator variation matches the exact transformation to first order", worst,
                    0.05);
}

CheckReport check_density_antisymmetry(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.density_antisymmetry");
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Momentum p = s.momentum();
    for (PolarizationState sig : kSpatialPolarizations) {
      const Matrix4c J = angular_momentum_density(plane_wave_mode(p, sig, NormScheme::mass()));
      worst = std::max(worst, (J + J.transpose()).max_abs());
    }
  }
  return make_check("dynamics.density_antisymmetry",
                    "angular-momentum density is antisymmetric exactly", worst, 0.0);
}

CheckReport check_spin_consistency(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.spin_consistency");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    for (PolarizationState sig : kSpatialPolarizations) {
      const PlaneWaveMode mode = plane_wave_mode(p, sig, NormScheme::mass());
      const auto a = spin_vector(angular_momentum_density(mode));
      const auto b = spin_vector_pl2(mode);
      double scale = 1.0;
      for (int i = 0; i < 3; ++i) scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
    }
  }
  return make_check("dynamics.spin_consistency",
                    "explicit spin integrand agrees with the density tensor", worst, cfg.tol);
}

CheckReport check_helicity_symmetry(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.helicity_symmetry");
  double worst = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const Momentum p = s.momentum();
    auto proj = [&](PolarizationState sig) {
      const PlaneWaveMode mode = plane_wave_mode(p, sig, NormScheme::mass());
      return helicity_projection(pauli_lubanski(angular_momentum_density(mode), p), p);
    };
    const cplx hp = proj(PolarizationState::plus);
    const cplx hm = proj(PolarizationState::minus);
    worst = std::max(worst, std::abs(hp + hm) / std::max({1.0, std::abs(hp), std::abs(hm)}));
  }
  return make_check("dynamics.helicity_symmetry",
                    "sigma = +1 and sigma = -1 projections are equal and opposite", worst,
                    cfg.tol);
}

CheckReport check_timelike_densities(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.timelike_densities");
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const PlaneWaveMode mode =
        plane_wave_mode(s.momentum(), PolarizationState::timelike, NormScheme::mass());
    worst = std::max(worst, std::abs(lagrangian_density(mode)));
    worst = std::max(worst, stress_density(mode).max_abs());
    worst = std::max(worst, angular_momentum_density(mode).max_abs());
  }
  return make_check("dynamics.timelike_densities",
                    "all densities of the time-like mode vanish with its strengths", worst,
                    cfg.tol);
}

CheckReport check_notoph_spin(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.notoph_spin_zero");
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Momentum p = s.momentum();
    const PlaneWaveMode mode = notoph_mode(p, NormScheme::mass());
    const Matrix4c J = angular_momentum_density(mode);
    worst = std::max(worst, J.max_abs());
    worst = std::max(worst, std::abs(helicity_projection(pauli_lubanski(J, p), p)));
  }
  return make_check("dynamics.notoph_spin_zero",
                    "all angular-momentum components of the longitudinal tensor mode vanish",
                    worst, cfg.tol);
}

CheckReport check_phase_invariance(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.phase_invariance");
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Momentum p = s.momentum();
    const FourVector u = polarization_vector(p, PolarizationState::plus, NormScheme::mass());
    const PlaneWaveMode a = mode_from_potential(p, u, NormScheme::mass());
    const PlaneWaveMode b = mode_from_potential(p, s.complex_unit() * u, NormScheme::mass());
    // the on-shell Lagrangian cancels to zero; its scale is the stress one
    const double scale = std::max(1.0, stress_density(a).max_abs());
    worst = std::max(worst,
                     std::abs(lagrangian_density(a) - lagrangian_density(b)) / scale);
    const Matrix4c da = stress_density(a) - stress_density(b);
    worst = std::max(worst, da.max_abs() / scale);
    const Matrix4c ja = angular_momentum_density(a) - angular_momentum_density(b);
    worst =
        std::max(worst, ja.max_abs() / std::max(1.0, angular_momentum_density(a).max_abs()));
  }
  return make_check("dynamics.phase_invariance",
                    "densities are unchanged under a global phase of the potential", worst,
                    cfg.tol);
}

CheckReport check_stress_mode_symmetry(const SuiteConfig& cfg) {
  Sampler s = sampler_for(cfg, "dynamics.stress_mode_symmetry");
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Momentum p = s.momentum();
    const cplx tp =
        stress_density(plane_wave_mode(p, PolarizationState::plus, NormScheme::mass())).at(0, 0);
    const cplx tm =
        stress_density(plane_wave_mode(p, PolarizationState::minus, NormScheme::mass())).at(0, 0);
    worst = std::max(worst, std::abs(tp - tm) / std::max(1.0, std::abs(tp)));
  }
  return make_check("dynamics.stress_mode_symmetry",
                    "transverse modes carry equal energy density", worst, cfg.tol);
}

CheckReport info_helicity_values(const SuiteConfig& cfg) {
  const Momentum p{{1.0, -0.5, 2.0}, 1.0};
  std::ostringstream det;
  for (PolarizationState sig : kSpatialPolarizations) {
    const PlaneWaveMode mode = plane_wave_mode(p, sig, cfg.norm);
    const Matrix4c J = angular_momentum_density(mode);
    const cplx proj = helicity_projection(pauli_lubanski(J, p), p);
    const cplx t00 = stress_density(mode).at(0, 0);
    det << "sigma " << to_string(sig) << ": W.n = " << fmt_cplx(proj)
        << ", per energy density " << fmt_cplx(-proj / t00) << "; ";
  }
  return make_info("dynamics.helicity_values",
                   "spin projections of the transverse and longitudinal modes", det.str());
}

// ----------------------------------------------------------------- limits --

CheckReport check_monomials(const SuiteConfig&) {
  double worst = 0.0;
  for (int k = -2; k <= 2; ++k) {
    const LimitClassification c =
        classify_limit([k](double m) { return cplx(std::pow(m, k)); }, {});
    worst = std::max(worst, std::abs(c.order - k));
    const LimitVerdict want = k > 0 ? LimitVerdict::vanishes
                              : k < 0 ? LimitVerdict::diverges
                                      : LimitVerdict::finite;
    if (c.verdict != want) worst = std::max(worst, 1.0);
  }
  return make_check("limits.monomial_recovery", "slope fit recovers integer power laws", worst,
                    0.01);
}

bool goes_to_zero(const LimitClassification& c) {
  return c.verdict == LimitVerdict::vanishes || c.verdict == LimitVerdict::identically_zero;
}

std::string verdict_table(const MasslessReport& rep) {
  std::ostringstream os;
  os << "u: ";
  for (const auto& c : rep.u) os << to_string(c.verdict) << "(" << fmt(c.order) << ") ";
  os << "E: ";
  for (const auto& c : rep.E) os << to_string(c.verdict) << "(" << fmt(c.order) << ") ";
  os << "B: ";
  for (const auto& c : rep.B) os << to_string(c.verdict) << "(" << fmt(c.order) << ") ";
  return os.str();
}

CheckReport check_mass_norm_finite(const SuiteConfig&) {
  const std::array<double, 3> p{1.3, -0.7, 2.1};
  double err = 0.0;
  std::ostringstream det;
  for (PolarizationState sig : kAllPolarizations) {
    const MasslessReport rep = massless_report(p, sig, NormScheme::mass());
    for (const auto& c : rep.u)
      if (c.verdict == LimitVerdict::diverges) err = 1.0;
    det << to_string(sig) << ": " << verdict_table(rep);
  }
  return make_check("limits.mass_norm_finite",
                    "mass normalization keeps every potential component from diverging", err, 0.0,
                    det.str());
}

CheckReport check_unit_norm_divergence(const SuiteConfig&) {
  const std::array<double, 3> p{1.3, -0.7, 2.1};
  double err = 0.0;
  std::ostringstream det;
  for (PolarizationState sig : kSpatialPolarizations) {
    const MasslessReport rep = massless_report(p, sig, NormScheme::unit());
    bool any_diverges = false;
    for (const auto& c : rep.u) {
      if (c.verdict == LimitVerdict::diverges) any_diverges = true;
      if (c.verdict != LimitVerdict::identically_zero)
        err = std::max(err, std::abs(c.order - std::round(c.order)));
    }
    if (!any_diverges) err = std::max(err, 1.0);
    det << to_string(sig) << ": " << verdict_table(rep);
  }
  return make_check("limits.unit_norm_divergence",
                    "unit normalization sends spatial modes to infinity with integer orders", err,
                    0.1, det.str());
}

CheckReport check_z_axis_transverse(const SuiteConfig&) {
  double err = 0.0;
  std::ostringstream det;
  for (PolarizationState sig : {PolarizationState::plus, PolarizationState::minus}) {
    const MasslessReport rep = massless_report({0.0, 0.0, 2.0}, sig, NormScheme::mass());
    for (const auto& c : rep.u)
      if (!goes_to_zero(c)) err = 1.0;
    det << to_string(sig) << ": " << verdict_table(rep);
  }
  return make_check("limits.z_axis_transverse_vanish",
                    "transverse potentials vanish for motion along the third axis", err, 0.0,
                    det.str());
}

CheckReport check_z_axis_longitudinal(const SuiteConfig&) {
  const double p3 = 2.0;
  const MasslessReport rep = massless_report({0.0, 0.0, p3}, PolarizationState::zero,
                                             NormScheme::mass());
  double err = 0.0;
  if (rep.u[0].verdict != LimitVerdict::finite || rep.u[3].verdict != LimitVerdict::finite)
    err = 1.0;
  if (!goes_to_zero(rep.u[1]) || !goes_to_zero(rep.u[2])) err = 1.0;
  err = std::max(err, std::abs(rep.u[0].value - p3));
  err = std::max(err, std::abs(rep.u[3].value - p3));
  return make_check("limits.z_axis_longitudinal_value",
                    "massless longitudinal potential approaches (E,0,0,E) along the third axis",
                    err, 1e-10, verdict_table(rep));
}

CheckReport check_timelike_limit(const SuiteConfig&) {
  const MasslessReport rep =
      massless_report({0.0, 0.0, 2.0}, PolarizationState::timelike, NormScheme::mass());
  double err = 0.0;
  for (const auto& c : rep.u)
    if (c.verdict == LimitVerdict::diverges) err = 1.0;
  for (const auto& c : rep.E)
    if (c.verdict != LimitVerdict::identically_zero) err = 1.0;
  for (const auto& c : rep.B)
    if (c.verdict != LimitVerdict::identically_zero) err = 1.0;
  return make_check("limits.timelike_mode",
                    "time-like potential stays finite while its strengths vanish identically",
                    err, 0.0, verdict_table(rep));
}

CheckReport check_rest_limit(const SuiteConfig&) {
  double err = 0.0;
  std::ostringstream det;
  for (PolarizationState sig : {PolarizationState::zero, PolarizationState::timelike}) {
    const LimitClassification c = rest_limit_report(sig, NormScheme::mass());
    if (!goes_to_zero(c)) err = 1.0;
    det << to_string(sig) << ": " << to_string(c.verdict) << "(" << fmt(c.order) << ") ";
  }
  return make_check("limits.rest_limit",
                    "massless potentials also vanish in the subsequent momentum limit", err, 0.0,
                    det.str());
}

CheckReport check_notoph_massless(const SuiteConfig&) {
  double err = 0.0;
  std::ostringstream det;
  for (int k = 0; k < 6; ++k) {
    const LimitClassification c = classify_limit(
        [k](double m) {
          return notoph_tensor(Momentum{{0.0, 0.0, 2.0}, m}, NormScheme::mass()).e[k];
        },
        {});
    if (!goes_to_zero(c)) err = 1.0;
    det << to_string(c.verdict) << "(" << fmt(c.order) << ") ";
  }
  return make_check("limits.notoph_massless",
                    "longitudinal tensor entries vanish with the mass along the third axis", err,
                    0.0, det.str());
}

CheckReport check_limit_stability(const SuiteConfig&) {
  double err = 0.0;
  LimitOptions half;
  half.m0 = 0.5;
  for (PolarizationState sig : kAllPolarizations) {
    for (const NormScheme& n : {NormScheme::unit(), NormScheme::mass()}) {
      const MasslessReport a = massless_report({0.0, 0.0, 2.0}, sig, n);
      const MasslessReport b = massless_report({0.0, 0.0, 2.0}, sig, n, half);
      for (int i = 0; i < 4; ++i)
        if (a.u[i].verdict != b.u[i].verdict) err = 1.0;
      for (int i = 0; i < 3; ++i)
        if (a.E[i].verdict != b.E[i].verdict || a.B[i].verdict != b.B[i].verdict) err = 1.0;
    }
  }
  return make_check("limits.stability", "verdicts are unchanged when the mass ladder is halved",
                    err, 0.0);
}

}  // namespace

void SuiteConfig::validate() const {
  if (tol <= 0.0) throw std::invalid_argument("SuiteConfig: tol must be positive");
  if (samples < 1) throw std::invalid_argument("SuiteConfig: samples must be >= 1");
}

SuiteReport run_verify_suite(const SuiteConfig& config) {
  config.validate();
  SuiteReport rep;
  rep.config = config;

  rep.checks.push_back(check_boost_metric(config));
  rep.checks.push_back(check_boost_rest(config));
  rep.checks.push_back(check_dual_involution(config));
  rep.checks.push_back(check_eb_roundtrip(config));

  rep.checks.push_back(check_anticommutators(config));
  rep.checks.push_back(verify_r_properties(gamma_basis()));
  rep.checks.push_back(verify_dual_identity(gamma_basis(), +1));
  rep.checks.push_back(check_dual_identity_sign(config));
  rep.checks.push_back(check_expansion_symmetry(config));

  rep.checks.push_back(check_boost_vs_closed(config));
  rep.checks.push_back(check_transversality(config));
  rep.checks.push_back(check_orthonormality(config));
  rep.checks.push_back(check_completeness(config));

  rep.checks.push_back(check_strengths_vs_closed(config));
  rep.checks.push_back(check_timelike_zero(config));
  rep.checks.push_back(check_strength_transversality(config));
  rep.checks.push_back(check_phase_relations(config));
  rep.checks.push_back(check_notoph_ratio(config));
  rep.checks.push_back(info_notoph_calibration(config));

  rep.checks.push_back(check_proca(config));
  rep.checks.push_back(check_normalization_roundtrip(config));
  rep.checks.push_back(check_kemmer(config));
  rep.checks.push_back(check_dual_set(config));
  rep.checks.push_back(check_bw(config));
  rep.checks.push_back(info_bw_factor(config));
  rep.checks.push_back(check_eom(config));
  rep.checks.push_back(check_variation(config));
  rep.checks.push_back(check_density_antisymmetry(config));
  rep.checks.push_back(check_spin_consistency(config));
  rep.checks.push_back(check_helicity_symmetry(config));
  rep.checks.push_back(check_timelike_densities(config));
  rep.checks.push_back(check_notoph_spin(config));
  rep.checks.push_back(check_phase_invariance(config));
  rep.checks.push_back(check_stress_mode_symmetry(config));
  rep.checks.push_back(info_helicity_values(config));

  rep.checks.push_back(check_monomials(config));
  rep.checks.push_back(check_mass_norm_finite(config));
  rep.checks.push_back(check_unit_norm_divergence(config));
  rep.checks.push_back(check_z_axis_transverse(config));
  rep.checks.push_back(check_z_axis_longitudinal(config));
  rep.checks.push_back(check_timelike_limit(config));
  rep.checks.push_back(check_rest_limit(config));
  rep.checks.push_back(check_notoph_massless(config));
  rep.checks.push_back(check_limit_stability(config));

  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
  for (const CheckReport& c : rep.checks) {
    if (c.status == CheckStatus::pass) ++rep.passed;
    else if (c.status == CheckStatus::fail) ++rep.failed;
    else ++rep.info;
  }
  return rep;
}

std::string report_to_json(const SuiteReport& report) {
  json doc;
  doc["v"] = 1;
  doc["config"] = {{"seed", report.config.seed},
                   {"tol", report.config.tol},
                   {"samples", report.config.samples},
                   {"norm", report.config.norm.name()},
                   {"phases", report.config.phases}};
  json checks = json::array();
  for (const CheckReport& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"status", to_string(c.status)},
                      {"max_abs_error", c.max_abs_error},
                      {"tolerance", c.tolerance},
                      {"details", c.details}});
  }
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"pass", report.passed}, {"fail", report.failed}, {"info", report.info}};
  return doc.dump(2) + "\n";
}

SuiteReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report_from_json: ") + e.what());
  }
  if (!doc.contains("v") || doc["v"] != 1)
    throw std::invalid_argument("report_from_json: unsupported document version");

  SuiteReport rep;
  const json& cfg = doc.at("config");
  rep.config.seed = cfg.at("seed").get<std::uint64_t>();
  rep.config.tol = cfg.at("tol").get<double>();
  rep.config.samples = cfg.at("samples").get<int>();
  const auto norm = parse_norm(cfg.at("norm").get<std::string>());
  if (!norm) throw std::invalid_argument("report_from_json: unknown norm scheme");
  rep.config.norm = *norm;
  rep.config.phases = cfg.at("phases").get<ModePhases>();

  for (const json& c : doc.at("checks")) {
    CheckReport r;
    r.id = c.at("id").get<std::string>();
    r.description = c.at("description").get<std::string>();
    const std::string st = c.at("status").get<std::string>();
    r.status = st == "pass" ? CheckStatus::pass
               : st == "fail" ? CheckStatus::fail
                              : CheckStatus::info;
    r.max_abs_error = c.at("max_abs_error").get<double>();
    r.tolerance = c.at("tolerance").get<double>();
    r.details = c.at("details").get<std::string>();
    rep.checks.push_back(std::move(r));
  }
  rep.passed = doc.at("summary").at("pass").get<int>();
  rep.failed = doc.at("summary").at("fail").get<int>();
  rep.info = doc.at("summary").at("info").get<int>();
  return rep;
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const CheckReport& c : report.checks) {
    os << "[" << (c.status == CheckStatus::pass ? "PASS"
                  : c.status == CheckStatus::fail ? "FAIL"
                                                  : "INFO")
       << "] " << c.id;
    if (c.status != CheckStatus::info)
      os << " (err " << std::setprecision(3) << c.max_abs_error << ", tol " << c.tolerance << ")";
    os << " " << c.description << "\n";
    if (!c.details.empty()) os << "       " << c.details << "\n";
  }
  os << report.passed << " passed, " << report.failed << " failed, " << report.info
     << " informational\n";
  return os.str();
}

}  // namespace notoph
