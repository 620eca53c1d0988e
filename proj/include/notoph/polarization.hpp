#pragma once

#include <optional>
#include <string_view>

#include "notoph/tensor.hpp"

// Spin-1 polarization vectors: the three rest-frame spatial modes plus the
// time-like mode, boosted to momentum p and scaled by a configurable
// normalization factor N. A literal transcription of the closed momentum-
// space forms is kept alongside the boost construction so the two routes
// can be checked against each other.

namespace notoph {

enum class PolarizationState { plus, zero, minus, timelike };

inline constexpr std::array<PolarizationState, 4> kAllPolarizations{
    PolarizationState::plus, PolarizationState::zero, PolarizationState::minus,
    PolarizationState::timelike};

inline constexpr std::array<PolarizationState, 3> kSpatialPolarizations{
    PolarizationState::plus, PolarizationState::zero, PolarizationState::minus};

const char* to_string(PolarizationState s);
std::optional<PolarizationState> parse_polarization(std::string_view s);

/// Overall scale N of the potential: N = 1, N = m, or a fixed positive value.
struct NormScheme {
  enum class Kind { unit, mass, custom };
  Kind kind = Kind::unit;
  double value = 1.0;

  static NormScheme unit() { return {Kind::unit, 1.0}; }
  static NormScheme mass() { return {Kind::mass, 1.0}; }
  static NormScheme custom(double v);

  double scale(double m) const;
  const char* name() const;
};

std::optional<NormScheme> parse_norm(std::string_view s);

/// eps^mu(0, sigma): the rest-frame basis vectors, unit normalized.
FourVector rest_polarization(PolarizationState sigma);

/// N(m) * L(p) * eps(0, sigma). Throws std::domain_error for m <= 0.
FourVector polarization_vector(const Momentum& p, PolarizationState sigma, const NormScheme& norm);

/// Closed momentum-space forms, written out component by component and
/// independent of the boost implementation:
///   u(p,+1) = -(N/sqrt(2) m) (p_r, m + p1 p_r/(E+m), i m + p2 p_r/(E+m), p3 p_r/(E+m))
///   u(p,-1) = +(N/sqrt(2) m) (p_l, m + p1 p_l/(E+m), -i m + p2 p_l/(E+m), p3 p_l/(E+m))
///   u(p, 0) =  (N/m) (p3, p1 p3/(E+m), p2 p3/(E+m), m + p3^2/(E+m))
///   u(p,0t) =  (N/m) (E, p1, p2, p3)
/// with p_{r,l} = p1 +- i p2.
FourVector closed_form_u(const Momentum& p, PolarizationState sigma, const NormScheme& norm);

/// Conjugate-first Minkowski product of unit-normalized modes,
/// eps*_mu(p,sigma) eps^mu(p,sigma'). Contract: -delta for spatial pairs,
/// +1 for the time-like diagonal, 0 across the two sectors.
cplx norm_check(const Momentum& p, PolarizationState sigma, PolarizationState sigma_prime);

}  // namespace notoph
