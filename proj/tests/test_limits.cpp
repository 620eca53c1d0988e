#include <doctest.h>

#include <cmath>
#include <limits>

#include "notoph/limits.hpp"
#include "notoph/polarization.hpp"

using namespace notoph;

namespace {
bool zeroish(const LimitClassification& c) {
  return c.verdict == LimitVerdict::vanishes || c.verdict == LimitVerdict::identically_zero;
}
}  // namespace

TEST_CASE("monomials classify with their exponents") {
  for (int k = -2; k <= 2; ++k) {
    const LimitClassification c =
        classify_limit([k](double m) { return cplx(std::pow(m, k)); });
    CHECK(std::abs(c.order - k) < 0.01);
    if (k > 0) CHECK(c.verdict == LimitVerdict::vanishes);
    if (k < 0) CHECK(c.verdict == LimitVerdict::diverges);
    if (k == 0) CHECK(c.verdict == LimitVerdict::finite);
  }
}

TEST_CASE("mixed orders classify by the dominant small-m term") {
  const LimitClassification a = classify_limit([](double m) { return cplx(1.0 + m); });
  CHECK(a.verdict == LimitVerdict::finite);
  CHECK(std::abs(a.value - 1.0) < 1e-5);

  const LimitClassification b = classify_limit([](double m) { return cplx(m + m * m * m); });
  CHECK(b.verdict == LimitVerdict::vanishes);
  CHECK(std::abs(b.order - 1.0) < 0.01);

  const LimitClassification c = classify_limit([](double m) { return cplx(0.3 / m + 2.0); });
  CHECK(c.verdict == LimitVerdict::diverges);
  CHECK(std::abs(c.order + 1.0) < 0.01);
}

TEST_CASE("hard zeros and invalid samples") {
  const LimitClassification z = classify_limit([](double) { return cplx(0.0); });
  CHECK(z.verdict == LimitVerdict::identically_zero);

  CHECK_THROWS_AS(
      classify_limit([](double) { return cplx(std::numeric_limits<double>::quiet_NaN()); }),
      std::domain_error);

  LimitOptions bad;
  bad.steps = 2;
  CHECK_THROWS_AS(classify_limit([](double m) { return cplx(m); }, bad), std::invalid_argument);
  bad = {};
  bad.ratio = 1.5;
  CHECK_THROWS_AS(classify_limit([](double m) { return cplx(m); }, bad), std::invalid_argument);
}

TEST_CASE("unit normalization diverges: the longitudinal time component") {
  // u^0(p,0) = p3/m at p along z
  const LimitClassification c = classify_limit([](double m) {
    return closed_form_u(Momentum{{0, 0, 2}, m}, PolarizationState::zero, NormScheme::unit())[0];
  });
  CHECK(c.verdict == LimitVerdict::diverges);
  CHECK(std::abs(c.order + 1.0) < 0.01);
}

TEST_CASE("mass normalization keeps every component finite at generic momentum") {
  for (PolarizationState sig : kAllPolarizations) {
    const MasslessReport rep = massless_report({1.3, -0.7, 2.1}, sig, NormScheme::mass());
    for (const auto& c : rep.u) CHECK(c.verdict != LimitVerdict::diverges);
  }
}

TEST_CASE("transverse modes vanish along the third axis") {
  for (PolarizationState sig : {PolarizationState::plus, PolarizationState::minus}) {
    const MasslessReport rep = massless_report({0, 0, 2}, sig, NormScheme::mass());
    for (const auto& c : rep.u) CHECK(zeroish(c));
  }
}

TEST_CASE("longitudinal massless column approaches (E,0,0,E)") {
  const MasslessReport rep = massless_report({0, 0, 2}, PolarizationState::zero,
                                             NormScheme::mass());
  CHECK(rep.u[0].verdict == LimitVerdict::finite);
  CHECK(rep.u[3].verdict == LimitVerdict::finite);
  CHECK(std::abs(rep.u[0].value - 2.0) < 1e-10);
  CHECK(std::abs(rep.u[3].value - 2.0) < 1e-10);
  CHECK(rep.u[1].verdict == LimitVerdict::identically_zero);
  CHECK(rep.u[2].verdict == LimitVerdict::identically_zero);
  // completely magnetic-free, electric part dies linearly
  for (const auto& c : rep.B) CHECK(c.verdict == LimitVerdict::identically_zero);
  CHECK(rep.E[2].verdict == LimitVerdict::vanishes);
}

TEST_CASE("time-like mode has good massless behaviour") {
  const MasslessReport rep = massless_report({0, 0, 2}, PolarizationState::timelike,
                                             NormScheme::mass());
  for (const auto& c : rep.u) CHECK(c.verdict != LimitVerdict::diverges);
  CHECK(std::abs(rep.u[0].value - 2.0) < 1e-10);
  CHECK(std::abs(rep.u[3].value - 2.0) < 1e-10);
  for (const auto& c : rep.E) CHECK(c.verdict == LimitVerdict::identically_zero);
  for (const auto& c : rep.B) CHECK(c.verdict == LimitVerdict::identically_zero);
}

TEST_CASE("unit normalization blows up somewhere in every spatial mode") {
  for (PolarizationState sig : kSpatialPolarizations) {
    const MasslessReport rep = massless_report({1.3, -0.7, 2.1}, sig, NormScheme::unit());
    bool any = false;
    for (const auto& c : rep.u) any = any || c.verdict == LimitVerdict::diverges;
    CHECK(any);
    for (const auto& c : rep.u)
      if (c.verdict != LimitVerdict::identically_zero)
        CHECK(std::abs(c.order - std::round(c.order)) < 0.1);
  }
}

TEST_CASE("subsequent momentum limit also vanishes") {
  CHECK(zeroish(rest_limit_report(PolarizationState::zero, NormScheme::mass())));
  CHECK(zeroish(rest_limit_report(PolarizationState::timelike, NormScheme::mass())));
}

TEST_CASE("verdicts are stable under halving the ladder start") {
  LimitOptions half;
  half.m0 = 0.5;
  for (PolarizationState sig : kAllPolarizations)
    for (const NormScheme& n : {NormScheme::unit(), NormScheme::mass()}) {
      const MasslessReport a = massless_report({0, 0, 2}, sig, n);
      const MasslessReport b = massless_report({0, 0, 2}, sig, n, half);
      for (int i = 0; i < 4; ++i) CHECK(a.u[i].verdict == b.u[i].verdict);
      for (int i = 0; i < 3; ++i) {
        CHECK(a.E[i].verdict == b.E[i].verdict);
        CHECK(a.B[i].verdict == b.B[i].verdict);
      }
    }
}

TEST_CASE("momentum must be nonzero for the massless table") {
  CHECK_THROWS_AS(massless_report({0, 0, 0}, PolarizationState::zero, NormScheme::mass()),
                  std::domain_error);
}
