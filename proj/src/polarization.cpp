#include "notoph/polarization.hpp"

#include <cmath>
#include <stdexcept>

namespace notoph {

namespace {
constexpr cplx I{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

const char* to_string(PolarizationState s) {
  switch (s) {
    case PolarizationState::plus: return "+1";
    case PolarizationState::zero: return "0";
    case PolarizationState::minus: return "-1";
    default: return "0t";
  }
}

std::optional<PolarizationState> parse_polarization(std::string_view s) {
  if (s == "+1" || s == "1") return PolarizationState::plus;
  if (s == "0") return PolarizationState::zero;
  if (s == "-1") return PolarizationState::minus;
  if (s == "0t" || s == "0_t") return PolarizationState::timelike;
  return std::nullopt;
}

NormScheme NormScheme::custom(double v) {
  if (v <= 0.0) throw std::invalid_argument("NormScheme: scale factor must be positive");
  return {Kind::custom, v};
}

double NormScheme::scale(double m) const {
  switch (kind) {
    case Kind::unit: return 1.0;
    case Kind::mass: return m;
    default: return value;
  }
}

const char* NormScheme::name() const {
  switch (kind) {
    case Kind::unit: return "unit";
    case Kind::mass: return "mass";
    default: return "custom";
  }
}

std::optional<NormScheme> parse_norm(std::string_view s) {
  if (s == "unit") return NormScheme::unit();
  if (s == "mass") return NormScheme::mass();
  return std::nullopt;
}

FourVector rest_polarization(PolarizationState sigma) {
  FourVector v;
  switch (sigma) {
    case PolarizationState::plus:
      v.c = {0.0, -kInvSqrt2, -I * kInvSqrt2, 0.0};
      break;
    case PolarizationState::zero:
      v.c = {0.0, 0.0, 0.0, 1.0};
      break;
    case PolarizationState::minus:
      v.c = {0.0, kInvSqrt2, -I * kInvSqrt2, 0.0};
      break;
    case PolarizationState::timelike:
      v.c = {1.0, 0.0, 0.0, 0.0};
      break;
  }
  return v;
}

FourVector polarization_vector(const Momentum& p, PolarizationState sigma,
                               const NormScheme& norm) {
  if (p.m <= 0.0)
    throw std::domain_error("polarization_vector: mass must be positive");
  return cplx(norm.scale(p.m)) * boost_matrix(p).apply(rest_polarization(sigma));
}

FourVector closed_form_u(const Momentum& p, PolarizationState sigma, const NormScheme& norm) {
  if (p.m <= 0.0) throw std::domain_error("closed_form_u: mass must be positive");
  const double m = p.m;
  const double E = p.energy();
  const double N = norm.scale(m);
  const double p1 = p.p[0], p2 = p.p[1], p3 = p.p[2];
  FourVector u;
  switch (sigma) {
    case PolarizationState::plus: {
      const cplx pr = p.p_r();
      const cplx pref = -N / (std::sqrt(2.0) * m);
      u.c = {pref * pr, pref * (m + p1 * pr / (E + m)), pref * (I * m + p2 * pr / (E + m)),
             pref * (p3 * pr / (E + m))};
      break;
    }
    case PolarizationState::minus: {
      const cplx pl = p.p_l();
      const cplx pref = N / (std::sqrt(2.0) * m);
      u.c = {pref * pl, pref * (m + p1 * pl / (E + m)), pref * (-I * m + p2 * pl / (E + m)),
             pref * (p3 * pl / (E + m))};
      break;
    }
    case PolarizationState::zero: {
      const double pref = N / m;
      u.c = {pref * p3, pref * (p1 * p3 / (E + m)), pref * (p2 * p3 / (E + m)),
             pref * (m + p3 * p3 / (E + m))};
      break;
    }
    case PolarizationState::timelike: {
      const double pref = N / m;
      u.c = {pref * E, pref * p1, pref * p2, pref * p3};
      break;
    }
  }
  return u;
}

cplx norm_check(const Momentum& p, PolarizationState sigma, PolarizationState sigma_prime) {
  const NormScheme unit = NormScheme::unit();
  const FourVector a = polarization_vector(p, sigma, unit);
  const FourVector b = polarization_vector(p, sigma_prime, unit);
  return minkowski_dot(a.conj(), b);
}

}  // namespace notoph
