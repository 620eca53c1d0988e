#pragma once

#include "notoph/report.hpp"
#include "notoph/tensor.hpp"

// Dirac algebra in the chiral (Weyl) representation, together with the
// conjugation matrix R whose transposition properties make the expansion of
// a symmetric second-rank spinor into a 4-vector plus an antisymmetric
// tensor well-formed. All entries are exact dyadic complex numbers, so the
// algebraic identities below hold to the last bit in double precision.

namespace notoph {

using DiracMatrix = Matrix4c;

struct GammaBasis {
  std::array<DiracMatrix, 4> gamma;              // gamma^mu
  DiracMatrix gamma5;                            // i g0 g1 g2 g3, diagonal here
  std::array<std::array<DiracMatrix, 4>, 4> sigma;  // (i/2)[gamma^mu, gamma^nu]
  DiracMatrix R;
};

/// The basis is built once; the block signs are fixed so that every R
/// property and the epsilon-dual identity hold simultaneously.
const GammaBasis& gamma_basis();

/// R^T = -R, R&dagger; = R = R^-1, and the gamma5 / gamma^mu / sigma^munu
/// conjugation rules. Deviations are exactly zero.
CheckReport verify_r_properties(const GammaBasis& basis, double tol = 0.0);

/// gamma5 sigma^{mu nu} = (i/2) eps^{mu nu rho sig} sigma_{rho sig}, checked
/// over the six independent index pairs with the supplied sign of
/// eps^{0123}. Only eps_sign = +1 satisfies it in this basis; the flipped
/// sign is kept as an argument so the calibration is testable.
CheckReport verify_dual_identity(const GammaBasis& basis, int eps_sign, double tol = 0.0);

/// Symmetric second-rank spinor gamma^mu R A_mu + sigma^{mu nu} R F_{mu nu}
/// (Lorentz indices lowered with the metric).
DiracMatrix symmetric_expand(const FourVector& A, const FieldStrength& F);

/// gamma^mu p_mu for a (complex) four-vector of coefficients.
DiracMatrix gamma_slash(const GammaBasis& basis, const FourVector& p);

}  // namespace notoph
