#include "notoph/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace notoph {

namespace {

constexpr cplx I{0.0, 1.0};

// p_mu X^{mu alpha} (divergence contraction, free index up)
FourVector divergence(const FourVector& p4, const FieldStrength& X) {
  FourVector d;
  for (int a = 0; a < 4; ++a) {
    cplx s = 0.0;
    for (int mu = 0; mu < 4; ++mu) s += kMetric[mu] * p4[mu] * X(mu, a);
    d[a] = s;
  }
  return d;
}

// X_{mu nu} Y^{mu nu}
cplx double_contract(const FieldStrength& X, const FieldStrength& Y) {
  cplx s = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) s += X.lower(mu, nu) * Y(mu, nu);
  return s;
}

// antisymmetrized dyad (a^mu b^nu - a^nu b^mu)
FieldStrength wedge(const FourVector& a, const FourVector& b) {
  FieldStrength F;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) F.set(mu, nu, a[mu] * b[nu] - a[nu] * b[mu]);
  return F;
}

struct CrossSlot {
  const FieldStrength* F;
  cplx d;  // derivative factor: d_mu -> d * p_mu on this slot
};

// the two x-independent pairings of a quadratic density
std::array<std::array<CrossSlot, 2>, 2> cross_pairings(const PlaneWaveMode& m) {
  std::array<std::array<CrossSlot, 2>, 2> r;
  r[0][0] = {&m.F_plus, -I};
  r[0][1] = {&m.F_minus, I};
  r[1][0] = {&m.F_minus, I};
  r[1][1] = {&m.F_plus, -I};
  return r;
}

cplx frobenius(const DiracMatrix& a, const DiracMatrix& b) {
  cplx s = 0.0;
  for (int i = 0; i < 16; ++i) s += std::conj(a.a[i]) * b.a[i];
  return s;
}

}  // namespace

FourVector PlaneWaveMode::u_minus() const { return std::exp(I * conj_phase) * u.conj(); }

double PlaneWaveMode::scale() const {
  return std::max({1.0, u.max_abs(), F_plus.max_abs(), F_minus.max_abs()});
}

PlaneWaveMode plane_wave_mode(const Momentum& p, PolarizationState sigma, const NormScheme& norm,
                              double conj_phase) {
  PlaneWaveMode m = mode_from_potential(p, polarization_vector(p, sigma, norm), norm, conj_phase);
  m.sigma = sigma;
  return m;
}

PlaneWaveMode mode_from_potential(const Momentum& p, const FourVector& u, const NormScheme& norm,
                                  double conj_phase) {
  PlaneWaveMode m;
  m.p = p;
  m.norm = norm;
  m.u = u;
  m.conj_phase = conj_phase;
  m.F_plus = field_strength_from_potential(p, u, EnergySign::positive);
  m.F_minus = field_strength_from_potential(p, u, EnergySign::negative, conj_phase);
  return m;
}

PlaneWaveMode notoph_mode(const Momentum& p, const NormScheme& norm) {
  PlaneWaveMode m;
  m.p = p;
  m.norm = norm;
  m.F_plus = notoph_tensor(p, norm);
  m.F_minus = m.F_plus;
  return m;
}

ProcaResidual proca_residual(const PlaneWaveMode& mode, ProcaConvention convention,
                             EnergySign es) {
  const FourVector p4 = mode.p.four_momentum();
  const double m = mode.p.m;
  const bool pos = es == EnergySign::positive;
  const FieldStrength& F = pos ? mode.F_plus : mode.F_minus;
  const FourVector A = pos ? mode.u : mode.u_minus();
  const cplx d = pos ? -I : I;

  ProcaResidual r;
  const FourVector divF = divergence(p4, F);
  const double mass_coef = convention == ProcaConvention::half_mass ? m / 2.0 : m * m;
  for (int mu = 0; mu < 4; ++mu) r.r1[mu] = d * divF[mu] + mass_coef * A[mu];

  const double f_coef = convention == ProcaConvention::half_mass ? 2.0 * m : 1.0;
  r.r2 = cplx(f_coef) * F - d * wedge(p4, A);
  r.max_rel = std::max(r.r1.max_abs(), r.r2.max_abs()) / mode.scale();
  return r;
}

PlaneWaveMode normalization_map(const PlaneWaveMode& mode, MapDirection direction) {
  if (mode.p.m <= 0.0) throw std::domain_error("normalization_map: mass must be positive");
  const bool to_tb = direction == MapDirection::to_textbook;
  if (to_tb && mode.convention != ProcaConvention::half_mass)
    throw std::invalid_argument("normalization_map: mode is already in the textbook convention");
  if (!to_tb && mode.convention != ProcaConvention::textbook)
    throw std::invalid_argument("normalization_map: mode is already in the half-mass convention");

  PlaneWaveMode out = mode;
  const double f = 2.0 * mode.p.m;
  out.u = cplx(to_tb ? 1.0 / f : f) * mode.u;
  out.convention = to_tb ? ProcaConvention::textbook : ProcaConvention::half_mass;
  return out;
}

KemmerResidual kemmer_residuals(const FourVector& p4, double m, cplx phi_tilde) {
  KemmerResidual r;
  for (int mu = 0; mu < 4; ++mu) r.A_tilde[mu] = -(p4[mu] / m) * phi_tilde;
  // m phi + i d_mu A^mu, with d_mu -> -i p_mu
  r.r_divergence = m * phi_tilde + minkowski_dot(p4, r.A_tilde);
  // m A^mu + i d^mu phi
  for (int mu = 0; mu < 4; ++mu) r.r_gradient[mu] = m * r.A_tilde[mu] + p4[mu] * phi_tilde;
  return r;
}

CheckReport kemmer_scalar_check(const Momentum& p, cplx phi_tilde, double tol) {
  if (p.m <= 0.0) throw std::domain_error("kemmer_scalar_check: mass must be positive");
  const KemmerResidual r = kemmer_residuals(p.four_momentum(), p.m, phi_tilde);
  const double scale = std::max(1.0, std::abs(phi_tilde));
  const double worst = std::max(std::abs(r.r_divergence), r.r_gradient.max_abs()) / scale;
  std::ostringstream det;
  det << "divergence residual " << std::abs(r.r_divergence) << ", gradient residual "
      << r.r_gradient.max_abs() << "; scalar companion forced to zero by m > 0";
  return make_check("dynamics.kemmer_scalar", "j=0 first-order set closes on shell", worst, tol,
                    det.str());
}

CheckReport dual_set_check(const Momentum& p, const FourVector& B_pot, double tol) {
  if (p.m <= 0.0) throw std::domain_error("dual_set_check: mass must be positive");
  const FourVector p4 = p.four_momentum();
  const cplx pB = minkowski_dot(p4, B_pot);
  const double scale = std::max(1.0, B_pot.max_abs());
  if (std::abs(pB) > 1e-10 * scale * p.energy())
    throw std::domain_error("dual_set_check: potential must be transverse, p.B = 0");

  // 2im G^{mu nu} = d^mu B^nu - d^nu B^mu  =>  G = -(1/2m)(p ^ B)
  const FieldStrength G = cplx(-1.0 / (2.0 * p.m)) * wedge(p4, B_pot);
  // i d_a G^{a mu} + (m/2) B^mu with d_a -> -i p_a
  const FourVector divG = divergence(p4, G);
  FourVector r1;
  for (int mu = 0; mu < 4; ++mu) r1[mu] = divG[mu] + (p.m / 2.0) * B_pot[mu];

  const double worst = r1.max_abs() / std::max(scale, G.max_abs());
  return make_check("dynamics.dual_set", "dual-tensor first-order set closes on shell", worst, tol,
                    "divergence-equation residual " + std::to_string(worst));
}

BwResidual bw_residuals(const FourVector& p4, double m, const FourVector& u,
                        const FieldStrength& F) {
  const GammaBasis& basis = gamma_basis();
  BwResidual r;
  DiracMatrix psi_vec;
  for (int mu = 0; mu < 4; ++mu) psi_vec = psi_vec + u.lower(mu) * (basis.gamma[mu] * basis.R);
  DiracMatrix psi_ten;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (mu != nu) psi_ten = psi_ten + F.lower(mu, nu) * (basis.sigma[mu][nu] * basis.R);
  r.psi = psi_vec + bw_relative_factor() * psi_ten;

  const DiracMatrix dirac = gamma_slash(basis, p4) - cplx(m) * DiracMatrix::identity();
  r.first_index = dirac * r.psi;
  r.second_index = r.psi * dirac.transpose();
  r.max_rel = std::max(r.first_index.max_abs(), r.second_index.max_abs()) /
              std::max(1.0, r.psi.max_abs());
  return r;
}

CheckReport bw_check(const Momentum& p, PolarizationState sigma, double tol) {
  if (p.m <= 0.0) throw std::domain_error("bw_check: mass must be positive");
  const PlaneWaveMode mode = plane_wave_mode(p, sigma, NormScheme::unit());
  const BwResidual r = bw_residuals(p.four_momentum(), p.m, mode.u, mode.F_plus);
  std::ostringstream det;
  det << "first-index " << r.first_index.max_abs() << ", second-index "
      << r.second_index.max_abs() << ", |Psi| " << r.psi.max_abs();
  return make_check("dynamics.bw_residuals", "Dirac operator annihilates the symmetric spinor",
                    r.max_rel, tol, det.str());
}

cplx bw_relative_factor() {
  static const cplx factor = [] {
    const GammaBasis& basis = gamma_basis();
    const Momentum p{{0.7, -1.3, 0.4}, 1.9};
    const FourVector p4 = p.four_momentum();
    const FourVector u = polarization_vector(p, PolarizationState::zero, NormScheme::unit());
    const FieldStrength F = field_strength_from_potential(p, u, EnergySign::positive);

    DiracMatrix psi_vec;
    for (int mu = 0; mu < 4; ++mu) psi_vec = psi_vec + u.lower(mu) * (basis.gamma[mu] * basis.R);
    DiracMatrix psi_ten;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        if (mu != nu) psi_ten = psi_ten + F.lower(mu, nu) * (basis.sigma[mu][nu] * basis.R);

    const DiracMatrix dirac = gamma_slash(basis, p4) - cplx(p.m) * DiracMatrix::identity();
    const DiracMatrix a = dirac * psi_vec;
    const DiracMatrix b = dirac * psi_ten;
    // minimize |a + c b| over the complex weight c
    return -frobenius(b, a) / frobenius(b, b);
  }();
  return factor;
}

FieldStrength eom_residual(const PlaneWaveMode& mode, EnergySign es) {
  const FieldStrength& F = es == EnergySign::positive ? mode.F_plus : mode.F_minus;
  return eom_residual_at(mode.p.four_momentum(), mode.p.m, F);
}

FieldStrength eom_residual_at(const FourVector& p4, double m, const FieldStrength& F) {
  // box -> +p^2 under either energy sign (box = -d_a d^a); the divergence
  // gradient is likewise quadratic in the derivative rule.
  const cplx p2 = minkowski_dot(p4, p4);
  const FourVector divF = divergence(p4, F);
  return (0.5 * (p2 + m * m)) * F - wedge(p4, divF);
}

cplx lagrangian_density(const PlaneWaveMode& mode) {
  const FourVector p4 = mode.p.four_momentum();
  const double m = mode.p.m;
  const cplx p2 = minkowski_dot(p4, p4);

  cplx total = 0.0;
  for (const auto& pairing : cross_pairings(mode)) {
    const FieldStrength& X = *pairing[0].F;
    const FieldStrength& Y = *pairing[1].F;
    const cplx dd = pairing[0].d * pairing[1].d;  // contracted derivative pair

    const cplx xy = double_contract(X, Y);
    const FourVector divX = divergence(p4, X);
    const FourVector divY = divergence(p4, Y);

    // (1/4)(d_mu F_{nu a})(d^mu F^{nu a})
    total += 0.25 * dd * p2 * xy;
    // -(1/2)(d_mu F^{mu a})(d^nu F_{nu a})
    cplx div2 = 0.0;
    for (int a = 0; a < 4; ++a) div2 += kMetric[a] * divX[a] * divY[a];
    total += -0.5 * dd * div2;
    // -(1/2)(d_mu F_{nu a})(d^nu F^{mu a}): a is contracted down-up
    cplx t3 = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int a = 0; a < 4; ++a)
          t3 += kMetric[mu] * p4[mu] * p4[nu] * X.lower(nu, a) * Y(mu, a);
    total += -0.5 * dd * t3;
    // (1/4) m^2 F_{mu nu} F^{mu nu}
    total += 0.25 * m * m * xy;
  }
  return total;
}

Matrix4c stress_density(const PlaneWaveMode& mode) {
  const FourVector p4 = mode.p.four_momentum();
  const cplx lag = lagrangian_density(mode);

  Matrix4c theta;
  for (const auto& pairing : cross_pairings(mode)) {
    const FieldStrength& X = *pairing[0].F;
    const FieldStrength& Y = *pairing[1].F;
    const cplx dd = pairing[0].d * pairing[1].d;
    const cplx xy = double_contract(X, Y);
    const FourVector divX = divergence(p4, X);
    const FourVector divY = divergence(p4, Y);

    for (int lam = 0; lam < 4; ++lam) {
      for (int beta = 0; beta < 4; ++beta) {
        // (d^lam F_{mu a})(d^beta F^{mu a})
        cplx t = dd * p4[lam] * p4[beta] * xy;
        // -2 (d_mu F^{mu a})(d^beta F^lam_a)
        cplx t2 = 0.0;
        for (int a = 0; a < 4; ++a) t2 += kMetric[a] * divX[a] * Y(lam, a);
        t -= 2.0 * dd * p4[beta] * t2;
        // -2 (d^mu F^{lam a})(d^beta F_{mu a})
        cplx t3 = 0.0;
        for (int a = 0; a < 4; ++a) t3 += kMetric[a] * X(lam, a) * divY[a];
        t -= 2.0 * dd * p4[beta] * t3;
        theta.at(lam, beta) += 0.5 * t;
      }
    }
  }
  for (int lam = 0; lam < 4; ++lam)
    for (int beta = 0; beta < 4; ++beta) theta.at(lam, beta) -= lag * metric(lam, beta);
  return theta;
}

const RotationGenerator& rotation_generator() {
  static const RotationGenerator gen = [] {
    RotationGenerator g;
    auto kd = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    std::size_t idx = 0;
    for (int kap = 0; kap < 4; ++kap)
      for (int tau = 0; tau < 4; ++tau)
        for (int al = 0; al < 4; ++al)
          for (int be = 0; be < 4; ++be)
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = 0; nu < 4; ++nu) {
                g.t[idx++] =
                    0.5 * metric(al, mu) * (kd(kap, be) * kd(tau, nu) - kd(tau, be) * kd(kap, nu)) +
                    0.5 * metric(be, mu) * (kd(kap, nu) * kd(tau, al) - kd(tau, nu) * kd(kap, al)) +
                    0.5 * metric(al, nu) * (kd(kap, mu) * kd(tau, be) - kd(tau, mu) * kd(kap, be)) +
                    0.5 * metric(be, nu) * (kd(kap, al) * kd(tau, mu) - kd(tau, al) * kd(kap, mu));
              }
    return g;
  }();
  return gen;
}

FieldStrength infinitesimal_variation(const Mat4d& omega_upper, const FieldStrength& F) {
  for (int k = 0; k < 4; ++k)
    for (int t = 0; t < 4; ++t)
      if (omega_upper[4 * k + t] != -omega_upper[4 * t + k])
        throw std::domain_error("infinitesimal_variation: omega must be antisymmetric");

  const RotationGenerator& gen = rotation_generator();
  FieldStrength out;
  for (int al = 0; al < 4; ++al) {
    for (int be = al + 1; be < 4; ++be) {
      cplx s = 0.0;
      for (int kap = 0; kap < 4; ++kap)
        for (int tau = 0; tau < 4; ++tau) {
          const double w = omega_upper[4 * kap + tau];
          if (w == 0.0) continue;
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              if (mu != nu) s += 0.5 * w * gen(kap, tau, al, be, mu, nu) * F.lower(mu, nu);
        }
      out.set(al, be, s);
    }
  }
  return out;
}

Mat4d lorentz_from_omega(const Mat4d& omega_upper) {
  Mat4d mixed{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) mixed[4 * mu + nu] = omega_upper[4 * mu + nu] * kMetric[nu];
  return mat4_exp(mixed);
}

Matrix4c angular_momentum_density(const PlaneWaveMode& mode) {
  const FourVector p4 = mode.p.four_momentum();

  Matrix4c J;
  for (const auto& pairing : cross_pairings(mode)) {
    const FieldStrength& X = *pairing[0].F;
    const FieldStrength& Y = *pairing[1].F;
    const cplx dX = pairing[0].d;
    const cplx dY = pairing[1].d;
    const FourVector divX = divergence(p4, X);

    // kap < tau only; the lower triangle is mirrored afterwards so the
    // output is antisymmetric by construction
    for (int kap = 0; kap < 4; ++kap) {
      for (int tau = kap + 1; tau < 4; ++tau) {
        cplx s = 0.0;
        // (d_mu F^{mu nu})(g_{0 kap} F_{nu tau} - g_{0 tau} F_{nu kap})
        for (int nu = 0; nu < 4; ++nu)
          s += dX * divX[nu] *
               (metric(0, kap) * Y.lower(nu, tau) - metric(0, tau) * Y.lower(nu, kap));
        // -(d_mu F^mu_kap) F_{0 tau} + (d_mu F^mu_tau) F_{0 kap}
        s += -dX * kMetric[kap] * divX[kap] * Y.lower(0, tau);
        s += dX * kMetric[tau] * divX[tau] * Y.lower(0, kap);
        // +F^mu_kap (d_0 F_{tau mu} + d_mu F_{0 tau} + d_tau F_{mu 0})
        for (int mu = 0; mu < 4; ++mu) {
          const cplx xk = kMetric[kap] * X(mu, kap);
          s += xk * dY *
               (p4[0] * Y.lower(tau, mu) + kMetric[mu] * p4[mu] * Y.lower(0, tau) +
                kMetric[tau] * p4[tau] * Y.lower(mu, 0));
        }
        // -F^mu_tau (d_0 F_{kap mu} + d_mu F_{0 kap} + d_kap F_{mu 0})
        for (int mu = 0; mu < 4; ++mu) {
          const cplx xt = kMetric[tau] * X(mu, tau);
          s -= xt * dY *
               (p4[0] * Y.lower(kap, mu) + kMetric[mu] * p4[mu] * Y.lower(0, kap) +
                kMetric[kap] * p4[kap] * Y.lower(mu, 0));
        }
        J.at(kap, tau) += s;
      }
    }
  }
  for (int kap = 0; kap < 4; ++kap)
    for (int tau = kap + 1; tau < 4; ++tau) J.at(tau, kap) = -J.at(kap, tau);
  return J;
}

std::array<cplx, 3> spin_vector(const Matrix4c& J_lower) {
  // spatial J^{ij} equals J_{ij} numerically (two sign flips cancel)
  return {J_lower.at(2, 3), J_lower.at(3, 1), J_lower.at(1, 2)};
}

std::array<cplx, 3> spin_vector_pl2(const PlaneWaveMode& mode) {
  const FourVector p4 = mode.p.four_momentum();
  std::array<cplx, 3> spin{};
  for (const auto& pairing : cross_pairings(mode)) {
    const FieldStrength& X = *pairing[0].F;
    const FieldStrength& Y = *pairing[1].F;
    const cplx dY = pairing[1].d;
    const FourVector divY = divergence(p4, Y);

    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
          const int eps = levi_civita(0, i, j, k);  // 3d symbol via eps^{0ijk}
          if (eps == 0) continue;
          cplx s = X(0, i) * dY * divY[j];
          for (int mu = 0; mu < 4; ++mu) {
            // F_mu^j (d^0 F^{mu i} + d^mu F^{i 0} + d^i F^{0 mu})
            s += kMetric[mu] * X(mu, j) * dY *
                 (p4[0] * Y(mu, i) + p4[mu] * Y(i, 0) + p4[i] * Y(0, mu));
          }
          spin[k - 1] += static_cast<double>(eps) * s;
        }
      }
    }
  }
  return spin;
}

FourVector pauli_lubanski(const Matrix4c& J_lower, const Momentum& p) {
  const FourVector p4 = p.four_momentum();
  FourVector W;
  for (int mu = 0; mu < 4; ++mu) {
    cplx w = 0.0;
    for (int kap = 0; kap < 4; ++kap)
      for (int tau = 0; tau < 4; ++tau)
        for (int nu = 0; nu < 4; ++nu) {
          const int eps_lower = -levi_civita(mu, kap, tau, nu);
          if (eps_lower == 0) continue;
          const cplx j_upper = kMetric[kap] * kMetric[tau] * J_lower.at(kap, tau);
          w += -0.5 * static_cast<double>(eps_lower) * j_upper * p4[nu];
        }
    W[mu] = kMetric[mu] * w;  // return contravariant components
  }
  return W;
}

cplx helicity_projection(const FourVector& W, const Momentum& p) {
  const double pa = p.p_abs();
  if (pa == 0.0) throw std::domain_error("helicity_projection: undefined at |p| = 0");
  FourVector n;
  n.c = {0.0, p.p[0] / pa, p.p[1] / pa, p.p[2] / pa};
  return minkowski_dot(W, n);
}

}  // namespace notoph
