#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "notoph/tensor.hpp"

namespace notoph {

/// Deterministic sampler for momenta and tensors. Uniform deviates are
/// produced from raw mt19937_64 words instead of std::uniform_real_distribution
/// so that a seed pins the stream down to the byte on any platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Components uniform in [-range, range].
  std::array<double, 3> momentum3(double range = 5.0) {
    return {uniform(-range, range), uniform(-range, range), uniform(-range, range)};
  }

  /// Mass log-uniform in [mmin, mmax].
  double mass(double mmin = 0.1, double mmax = 10.0) {
    return std::exp(uniform(std::log(mmin), std::log(mmax)));
  }

  Momentum momentum() { return Momentum{momentum3(), mass()}; }

  cplx complex_unit() {
    const double phi = uniform(0.0, 6.283185307179586);
    return {std::cos(phi), std::sin(phi)};
  }

  FieldStrength antisymmetric_tensor(double range = 2.0) {
    FieldStrength F;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu)
        F.set(mu, nu, cplx{uniform(-range, range), uniform(-range, range)});
    return F;
  }

  FourVector four_vector(double range = 2.0) {
    FourVector v;
    for (int mu = 0; mu < 4; ++mu) v[mu] = cplx{uniform(-range, range), uniform(-range, range)};
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

/// FNV-1a; mixes check identifiers into the suite seed so every check owns
/// an independent reproducible stream.
inline std::uint64_t hash_id(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace notoph
