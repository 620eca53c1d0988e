#pragma once

#include <optional>

#include "notoph/clifford.hpp"
#include "notoph/polarization.hpp"
#include "notoph/report.hpp"
#include "notoph/strengths.hpp"
#include "notoph/tensor.hpp"

// Plane-wave equation checks (Bargmann-Wigner, first-order vector sets in
// both normalization conventions, the j=0 scalar set, the dual set) and the
// Noether chain: Lagrangian, equation of motion, energy-momentum tensor,
// rotation generators, angular-momentum density, Pauli-Lubanski vector.
//
// Quadratic densities are evaluated for F(x) = F+ e^{-ipx} + F- e^{+ipx},
// keeping only the x-independent cross terms (F+ paired with F-); the
// e^{-+2ipx} pieces average to zero over space and are dropped. Derivatives
// act as d_mu -> -i p_mu on positive-energy factors and +i p_mu on
// negative-energy factors before products are formed.

namespace notoph {

enum class ProcaConvention { half_mass, textbook };
enum class MapDirection { to_textbook, to_half_mass };

struct PlaneWaveMode {
  Momentum p;
  std::optional<PolarizationState> sigma;
  NormScheme norm;
  FourVector u;            // positive-energy potential amplitude
  double conj_phase = 0;   // phase of the conjugate (negative-energy) potential
  FieldStrength F_plus;
  FieldStrength F_minus;
  ProcaConvention convention = ProcaConvention::half_mass;

  FourVector u_minus() const;  // e^{i conj_phase} u*
  double scale() const;        // magnitude reference for relative residuals
};

PlaneWaveMode plane_wave_mode(const Momentum& p, PolarizationState sigma, const NormScheme& norm,
                              double conj_phase = 0.0);

/// Mode with a caller-supplied potential amplitude (used e.g. for phase
/// covariance checks); strengths are derived exactly as in plane_wave_mode.
PlaneWaveMode mode_from_potential(const Momentum& p, const FourVector& u, const NormScheme& norm,
                                  double conj_phase = 0.0);

/// Longitudinal-tensor mode: both energy signs carry the calibrated notoph
/// tensor and the potential amplitude is absent.
PlaneWaveMode notoph_mode(const Momentum& p, const NormScheme& norm);

struct ProcaResidual {
  FourVector r1;      // divergence equation
  FieldStrength r2;   // strength-potential relation
  double max_rel = 0;
};

ProcaResidual proca_residual(const PlaneWaveMode& mode, ProcaConvention convention,
                             EnergySign es = EnergySign::positive);

/// A -> 2mA between the half-mass convention (dF + m/2 A = 0, 2mF = dA) and
/// the textbook one (dF + m^2 A = 0, F = dA): u is divided by 2m going to
/// textbook and multiplied going back; F is untouched.
PlaneWaveMode normalization_map(const PlaneWaveMode& mode, MapDirection direction);

struct KemmerResidual {
  FourVector A_tilde;  // -(p^mu/m) phi
  cplx r_divergence;   // m phi + i d_mu A^mu
  FourVector r_gradient;
};

/// Raw residuals at an arbitrary (possibly off-shell) four-momentum.
KemmerResidual kemmer_residuals(const FourVector& p4, double m, cplx phi_tilde);

CheckReport kemmer_scalar_check(const Momentum& p, cplx phi_tilde, double tol);

/// Builds the dual-set tensor from i d_a G^{a mu} + (m/2) B^mu = 0,
/// 2im G^{mu nu} = d^mu B^nu - d^nu B^mu and reports the residual of the
/// first equation. Requires p.B = 0 (throws otherwise).
CheckReport dual_set_check(const Momentum& p, const FourVector& B_pot, double tol);

struct BwResidual {
  DiracMatrix psi;
  DiracMatrix first_index;   // (gamma.p - m) Psi
  DiracMatrix second_index;  // Psi (gamma.p - m)^T
  double max_rel = 0;
};

BwResidual bw_residuals(const FourVector& p4, double m, const FourVector& u,
                        const FieldStrength& F);

CheckReport bw_check(const Momentum& p, PolarizationState sigma, double tol);

/// Relative weight of the tensor term against the vector term in the
/// symmetric expansion, fixed once by least-squares minimization of the
/// first-index residual on a reference mode. Lands on 1 in the half-mass
/// convention; kept as a computed constant rather than an assumption.
cplx bw_relative_factor();

/// (1/2)(box + m^2) F + antisymmetrized divergence gradient, with
/// box = -d_a d^a, under the plane-wave substitution. Vanishes on shell.
FieldStrength eom_residual(const PlaneWaveMode& mode, EnergySign es = EnergySign::positive);
FieldStrength eom_residual_at(const FourVector& p4, double m, const FieldStrength& F);

/// x-independent part of the Lagrangian density
///   (1/4)(dF)(dF) - (1/2)(div F)(div F) - (1/2)(d_mu F_{nu a})(d^nu F^{mu a})
///   + (1/4) m^2 F F.
cplx lagrangian_density(const PlaneWaveMode& mode);

/// Energy-momentum density Theta^{lambda beta}; Theta^{00} is the energy
/// density.
Matrix4c stress_density(const PlaneWaveMode& mode);

/// Generators of infinitesimal rotations acting on antisymmetric rank-2
/// index pairs: T_{kappa tau}^{alpha beta, mu nu}.
struct RotationGenerator {
  std::array<double, 4096> t{};  // [kappa][tau][alpha][beta][mu][nu]

  double operator()(int kappa, int tau, int alpha, int beta, int mu, int nu) const {
    return t[((((kappa * 4 + tau) * 4 + alpha) * 4 + beta) * 4 + mu) * 4 + nu];
  }
};

const RotationGenerator& rotation_generator();

/// delta F^{alpha beta} = (1/2) omega^{kappa tau} T_{kappa tau}^{alpha
/// beta, mu nu} F_{mu nu}; omega must be antisymmetric (throws otherwise).
FieldStrength infinitesimal_variation(const Mat4d& omega_upper, const FieldStrength& F);

/// exp of the mixed-index generator omega^mu_nu = omega^{mu a} g_{a nu};
/// the exact finite transformation the variation is checked against.
Mat4d lorentz_from_omega(const Mat4d& omega_upper);

/// Angular-momentum density J_{kappa tau} (lower indices), antisymmetric.
Matrix4c angular_momentum_density(const PlaneWaveMode& mode);

/// (J^{23}, J^{31}, J^{12}) from the density above.
std::array<cplx, 3> spin_vector(const Matrix4c& J_lower);

/// The expanded spin integrand
///   eps^{ijk} [ F^{0i} (d_mu F^{mu j})
///             + F_mu^j (d^0 F^{mu i} + d^mu F^{i0} + d^i F^{0 mu}) ],
/// evaluated independently of angular_momentum_density.
std::array<cplx, 3> spin_vector_pl2(const PlaneWaveMode& mode);

/// W^mu with W_mu = -(1/2) eps_{mu kappa tau nu} J^{kappa tau} p^nu; takes
/// the lower-index density and raises internally.
FourVector pauli_lubanski(const Matrix4c& J_lower, const Momentum& p);

/// W_mu n^mu with n = (0, phat); equals -(spin . phat) p^0. Throws at
/// |p| = 0 where phat is undefined.
cplx helicity_projection(const FourVector& W, const Momentum& p);

}  // namespace notoph
