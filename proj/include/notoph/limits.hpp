#pragma once

#include <functional>

#include "notoph/polarization.hpp"
#include "notoph/tensor.hpp"

// Empirical limit engine. A quantity is sampled along a geometric ladder of
// masses, the tail of log|f| vs log m is fitted by least squares, and the
// slope decides between vanishing, finite and divergent behaviour. The
// m -> 0 and subsequent |p| -> 0 limits are always taken in that order.

namespace notoph {

enum class LimitVerdict { vanishes, finite, diverges, identically_zero };

const char* to_string(LimitVerdict v);

struct LimitClassification {
  LimitVerdict verdict = LimitVerdict::identically_zero;
  double order = 0.0;  // fitted power-law exponent
  cplx value = 0.0;    // smallest-mass sample, kept for finite verdicts
};

struct LimitOptions {
  double m0 = 1.0;
  double ratio = 0.5;
  int steps = 20;
  double slope_tol = 0.1;
  double floor = 1e-14;  // below this magnitude a sample counts as zero
};

/// Samples f at m_k = m0 ratio^k and classifies the small-m behaviour. The
/// fit uses only the last half of the ladder so subleading terms have died
/// off. Throws std::domain_error when f is non-finite at a sample and
/// std::invalid_argument on a malformed ladder.
LimitClassification classify_limit(const std::function<cplx(double)>& f,
                                   const LimitOptions& opt = {});

/// Per-component massless-limit table for the potential and both strength
/// vectors at fixed spatial momentum.
struct MasslessReport {
  std::array<LimitClassification, 4> u;
  std::array<LimitClassification, 3> E;
  std::array<LimitClassification, 3> B;
};

MasslessReport massless_report(const std::array<double, 3>& p, PolarizationState sigma,
                               const NormScheme& norm, const LimitOptions& opt = {});

/// Classifies the |p| -> 0 behaviour, along the third axis, of the
/// already-massless potential: the inner m -> 0 limit is pinned by
/// evaluating at m = eps * p3 with eps tiny, then p3 runs down the ladder.
LimitClassification rest_limit_report(PolarizationState sigma, const NormScheme& norm,
                                      const LimitOptions& opt = {});

}  // namespace notoph
