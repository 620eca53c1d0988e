#include "notoph/clifford.hpp"

#include <algorithm>
#include <sstream>

namespace notoph {

namespace {

constexpr cplx I{0.0, 1.0};

using Block = std::array<cplx, 4>;  // 2x2 row-major

constexpr Block kId2{1.0, 0.0, 0.0, 1.0};
const Block kSigma1{0.0, 1.0, 1.0, 0.0};
const Block kSigma2{0.0, -I, I, 0.0};
const Block kSigma3{1.0, 0.0, 0.0, -1.0};

Block neg(const Block& b) { return {-b[0], -b[1], -b[2], -b[3]}; }

void put_block(DiracMatrix& m, int r0, int c0, const Block& b) {
  m.at(r0, c0) = b[0];
  m.at(r0, c0 + 1) = b[1];
  m.at(r0 + 1, c0) = b[2];
  m.at(r0 + 1, c0 + 1) = b[3];
}

DiracMatrix off_diag(const Block& tr, const Block& bl) {
  DiracMatrix m;
  put_block(m, 0, 2, tr);
  put_block(m, 2, 0, bl);
  return m;
}

DiracMatrix block_diag(const Block& tl, const Block& br) {
  DiracMatrix m;
  put_block(m, 0, 0, tl);
  put_block(m, 2, 2, br);
  return m;
}

GammaBasis build_basis() {
  GammaBasis b;
  b.gamma[0] = off_diag(kId2, kId2);
  b.gamma[1] = off_diag(kSigma1, neg(kSigma1));
  b.gamma[2] = off_diag(kSigma2, neg(kSigma2));
  b.gamma[3] = off_diag(kSigma3, neg(kSigma3));
  b.gamma5 = I * (b.gamma[0] * b.gamma[1] * b.gamma[2] * b.gamma[3]);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      b.sigma[mu][nu] = (0.5 * I) * (b.gamma[mu] * b.gamma[nu] - b.gamma[nu] * b.gamma[mu]);
  // R = CP in block form: diag(i Theta, -i Theta) with Theta = -i sigma_2,
  // i.e. diag(sigma_2, -sigma_2).
  b.R = block_diag(kSigma2, neg(kSigma2));
  return b;
}

}  // namespace

const GammaBasis& gamma_basis() {
  static const GammaBasis basis = build_basis();
  return basis;
}

CheckReport verify_r_properties(const GammaBasis& b, double tol) {
  const DiracMatrix& R = b.R;
  const DiracMatrix id = DiracMatrix::identity();

  const double d_antisym = (R.transpose() + R).max_abs();
  const double d_hermitian = (R.adjoint() - R).max_abs();
  const double d_involutive = (R * R - id).max_abs();
  const double d_g5 = (R * b.gamma5 * R - b.gamma5.transpose()).max_abs();  // R^-1 = R
  double d_gmu = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    d_gmu = std::max(d_gmu, (R * b.gamma[mu] * R + b.gamma[mu].transpose()).max_abs());
  double d_sig = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      d_sig = std::max(d_sig, (R * b.sigma[mu][nu] * R + b.sigma[mu][nu].transpose()).max_abs());

  std::ostringstream det;
  det << "R^T+R=" << d_antisym << "; R^dag-R=" << d_hermitian << "; RR-1=" << d_involutive
      << "; g5 conj=" << d_g5 << "; gmu conj=" << d_gmu << "; sigma conj=" << d_sig;
  const double worst =
      std::max({d_antisym, std::max(d_hermitian, d_involutive), d_g5, d_gmu, d_sig});
  return make_check("clifford.r_properties", "conjugation-matrix transposition properties", worst,
                    tol, det.str());
}

CheckReport verify_dual_identity(const GammaBasis& b, int eps_sign, double tol) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      DiracMatrix rhs;
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const int eps = eps_sign * levi_civita(mu, nu, rho, sig);
          if (eps == 0) continue;
          // sigma_{rho sig} = g_rho g_sig sigma^{rho sig}
          const double g = kMetric[rho] * kMetric[sig] * static_cast<double>(eps);
          rhs = rhs + (0.5 * I * g) * b.sigma[rho][sig];
        }
      worst = std::max(worst, (b.gamma5 * b.sigma[mu][nu] - rhs).max_abs());
    }
  }
  std::ostringstream det;
  det << "eps^{0123} sign " << (eps_sign > 0 ? "+1" : "-1") << ", max deviation " << worst;
  return make_check("clifford.dual_identity",
                    "gamma5 sigma^{mu nu} = (i/2) eps^{mu nu rho sig} sigma_{rho sig}", worst, tol,
                    det.str());
}

DiracMatrix symmetric_expand(const FourVector& A, const FieldStrength& F) {
  const GammaBasis& b = gamma_basis();
  DiracMatrix psi;
  for (int mu = 0; mu < 4; ++mu) psi = psi + A.lower(mu) * (b.gamma[mu] * b.R);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (mu != nu) psi = psi + F.lower(mu, nu) * (b.sigma[mu][nu] * b.R);
  return psi;
}

DiracMatrix gamma_slash(const GammaBasis& b, const FourVector& p) {
  DiracMatrix m;
  for (int mu = 0; mu < 4; ++mu) m = m + p.lower(mu) * b.gamma[mu];
  return m;
}

}  // namespace notoph
