#pragma once

#include "notoph/polarization.hpp"
#include "notoph/report.hpp"
#include "notoph/tensor.hpp"

// Momentum-space field strengths of the plane-wave modes, for both energy
// signs, together with the antisymmetrized-product construction of the
// longitudinal (notoph) tensor and its closed form.
//
// Derivative rule: d_mu -> -i p_mu on positive-energy amplitudes and
// +i p_mu on negative-energy ones. The negative-energy potential is the
// conjugate e^{i alpha} u* with a configurable phase per mode.

namespace notoph {

enum class EnergySign { positive, negative };

/// Half-mass-convention strength amplitude built from a potential
/// amplitude: F^{mu nu} = -+ (i/2m)(p^mu u^nu - p^nu u^mu), the sign and
/// the conjugation of u following the energy sign. Throws for m <= 0.
FieldStrength field_strength_from_potential(const Momentum& p, const FourVector& u, EnergySign es,
                                            double conj_phase = 0.0);

/// E and B of the same amplitude: B = (i/2m) p x u, E = (i/2m)(p0 u - p u^0)
/// for positive energy, conjugate-partner expressions for negative.
EBFields strengths_from_potential(const Momentum& p, const FourVector& u, EnergySign es,
                                  double conj_phase = 0.0);

/// Conjugation phases for the three spatial modes, indexed +1, 0, -1.
using ModePhases = std::array<double, 3>;

int phase_index(PolarizationState sigma);

/// Literal closed forms of B and E per mode, e.g.
///   B+(p,+1) = -(iN/2 sqrt(2) m) (-i p3, p3, i p_r)
///   E+(p, 0) =  (iN/2m) (-p1 p3/(E+m), -p2 p3/(E+m), E - p3^2/(E+m))
/// and zero for the time-like mode. The negative-energy columns are
/// produced through the sign/pairing partner relations (sigma <-> -sigma with a
/// minus sign on the longitudinal pair), not through conjugation, so this
/// path stays independent of strengths_from_potential.
EBFields closed_form_strengths(const Momentum& p, PolarizationState sigma, const NormScheme& norm,
                               EnergySign es, const ModePhases& phases = {});

/// All six strength vectors of the spatial modes at one momentum.
struct StrengthSet {
  std::array<EBFields, 3> plus;   // positive-energy (E,B) per mode
  std::array<EBFields, 3> minus;  // negative-energy (E,B) per mode
  ModePhases alpha{};             // conjugation phases (B relations)
  ModePhases alpha_prime{};       // same phases as seen by the E relations
};

StrengthSet strength_set(const Momentum& p, const NormScheme& norm, const ModePhases& phases = {});

/// The six sign-and-pairing relations between positive- and negative-energy
/// strengths: B+(p,+-1) = +e^{-i a} B-(p,-+1), B+(p,0) = -e^{-i a} B-(p,0),
/// and the same pattern for E.
CheckReport phase_relation_check(const Momentum& p, const NormScheme& norm,
                                 const ModePhases& phases, double tol);

/// Antisymmetrized product N (eps1^mu eps2^nu - eps1^nu eps2^mu) of the two
/// boosted Cartesian linear polarizations, uncalibrated.
FieldStrength notoph_raw(const Momentum& p, const NormScheme& norm);

/// Constant ratio closed-form / raw, fitted once at a fixed reference
/// momentum for the given mass and normalization. Momentum independence of
/// this constant is what the verification suite asserts.
cplx notoph_scale(double m, const NormScheme& norm);

/// Calibrated construction: notoph_scale * notoph_raw.
FieldStrength notoph_tensor(const Momentum& p, const NormScheme& norm);

/// Closed form with prefactor iN^2/m:
///   rows (0..3) x cols (0..3):
///   (0, -p2, p1, 0 | p2, 0, m + p_r p_l/(p0+m), p2 p3/(p0+m) | ...)
FieldStrength closed_form_notoph(const Momentum& p, const NormScheme& norm);

}  // namespace notoph
