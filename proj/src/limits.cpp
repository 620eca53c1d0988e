#include "notoph/limits.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "notoph/strengths.hpp"

namespace notoph {

const char* to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::vanishes: return "vanishes";
    case LimitVerdict::finite: return "finite";
    case LimitVerdict::diverges: return "diverges";
    default: return "identically_zero";
  }
}

LimitClassification classify_limit(const std::function<cplx(double)>& f,
                                   const LimitOptions& opt) {
  if (opt.m0 <= 0.0 || opt.ratio <= 0.0 || opt.ratio >= 1.0 || opt.steps < 4)
    throw std::invalid_argument("classify_limit: need m0 > 0, ratio in (0,1), steps >= 4");

  std::vector<double> masses(opt.steps);
  std::vector<cplx> samples(opt.steps);
  double mk = opt.m0;
  for (int k = 0; k < opt.steps; ++k) {
    masses[k] = mk;
    samples[k] = f(mk);
    if (!std::isfinite(samples[k].real()) || !std::isfinite(samples[k].imag()))
      throw std::domain_error("classify_limit: non-finite sample");
    mk *= opt.ratio;
  }

  bool all_zero = true;
  for (const cplx& s : samples)
    if (std::abs(s) >= opt.floor) all_zero = false;
  if (all_zero) return {LimitVerdict::identically_zero, 0.0, 0.0};

  // least-squares slope of log|f| vs log m over the tail of the ladder
  const int first = opt.steps / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int k = first; k < opt.steps; ++k) {
    const double mag = std::abs(samples[k]);
    if (mag < opt.floor) continue;  // exact zeros carry no slope information
    const double x = std::log(masses[k]);
    const double y = std::log(mag);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return {LimitVerdict::identically_zero, 0.0, 0.0};
  const double slope = (static_cast<double>(n) * sxy - sx * sy) /
                       (static_cast<double>(n) * sxx - sx * sx);

  LimitClassification out;
  out.order = slope;
  out.value = samples[opt.steps - 1];
  if (slope > opt.slope_tol)
    out.verdict = LimitVerdict::vanishes;
  else if (slope < -opt.slope_tol)
    out.verdict = LimitVerdict::diverges;
  else
    out.verdict = LimitVerdict::finite;
  return out;
}

MasslessReport massless_report(const std::array<double, 3>& p, PolarizationState sigma,
                               const NormScheme& norm, const LimitOptions& opt) {
  if (p[0] == 0.0 && p[1] == 0.0 && p[2] == 0.0)
    throw std::domain_error("massless_report: need |p| > 0");

  MasslessReport rep;
  for (int mu = 0; mu < 4; ++mu) {
    rep.u[mu] = classify_limit(
        [&](double m) { return closed_form_u(Momentum{p, m}, sigma, norm)[mu]; }, opt);
  }
  for (int i = 0; i < 3; ++i) {
    rep.E[i] = classify_limit(
        [&](double m) {
          return closed_form_strengths(Momentum{p, m}, sigma, norm, EnergySign::positive).E[i];
        },
        opt);
    rep.B[i] = classify_limit(
        [&](double m) {
          return closed_form_strengths(Momentum{p, m}, sigma, norm, EnergySign::positive).B[i];
        },
        opt);
  }
  return rep;
}

LimitClassification rest_limit_report(PolarizationState sigma, const NormScheme& norm,
                                      const LimitOptions& opt) {
  // m = eps * p3 keeps the mass limit fully converged at every rung of the
  // momentum ladder, honoring the m -> 0 before p -> 0 ordering.
  constexpr double eps = 1e-6;
  auto massless_sup = [&](double p3) {
    const Momentum pm{{0.0, 0.0, p3}, eps * p3};
    return cplx(closed_form_u(pm, sigma, norm).max_abs());
  };
  return classify_limit(massless_sup, opt);
}

}  // namespace notoph
