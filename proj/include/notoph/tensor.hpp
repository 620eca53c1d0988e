#pragma once

#include <array>
#include <complex>

// Minkowski-space primitives: complex 4-vectors, antisymmetric rank-2
// tensors with E/B accessors, pure boosts, and the Levi-Civita symbol.
//
// Conventions used throughout the library:
//   metric      g = diag(1,-1,-1,-1), index 0 is time
//   Levi-Civita eps^{0123} = +1 (all indices up); lowering all four
//               indices flips the sign, eps_{0123} = -1
//   E^i = F^{i0},  B^i = -(1/2) eps^{ijk} F^{jk}

namespace notoph {

using cplx = std::complex<double>;

inline constexpr std::array<double, 4> kMetric{1.0, -1.0, -1.0, -1.0};

inline double metric(int mu, int nu) { return mu == nu ? kMetric[mu] : 0.0; }

/// eps^{mu nu rho sig}, zero on repeated indices.
int levi_civita(int mu, int nu, int rho, int sig);

struct FourVector {
  std::array<cplx, 4> c{};  // contravariant components, c[0] = time

  cplx& operator[](int mu) { return c[mu]; }
  const cplx& operator[](int mu) const { return c[mu]; }

  /// Covariant component a_mu = g_{mu mu} a^mu.
  cplx lower(int mu) const { return kMetric[mu] * c[mu]; }

  FourVector operator+(const FourVector& o) const;
  FourVector operator-(const FourVector& o) const;
  FourVector operator-() const;
  FourVector conj() const;
  double max_abs() const;
};

FourVector operator*(cplx s, const FourVector& v);

/// a^0 b^0 - a^1 b^1 - a^2 b^2 - a^3 b^3. Neither argument is conjugated.
cplx minkowski_dot(const FourVector& a, const FourVector& b);

/// On-shell momentum: spatial 3-vector plus mass, energy always derived
/// so that E^2 - |p|^2 = m^2 holds by construction.
struct Momentum {
  std::array<double, 3> p{};
  double m = 0.0;

  double p2() const { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }
  double p_abs() const;
  double energy() const;  // sqrt(|p|^2 + m^2)
  cplx p_r() const { return {p[0], p[1]}; }   // p1 + i p2
  cplx p_l() const { return {p[0], -p[1]}; }  // p1 - i p2
  FourVector four_momentum() const;
};

using Mat4d = std::array<double, 16>;  // row-major real 4x4

/// Pure boost L^mu_nu taking (m,0,0,0) to (E_p, p).
struct LorentzBoost {
  Mat4d a{};

  double operator()(int r, int c) const { return a[4 * r + c]; }
  double& at(int r, int c) { return a[4 * r + c]; }
  FourVector apply(const FourVector& v) const;
};

/// L^0_0 = gamma, L^i_0 = L^0_i = p_i/m, L^i_k = delta_ik + p_i p_k / (m(E+m)).
/// The |p| = 0 case degenerates to the identity. Throws std::domain_error
/// for m <= 0.
LorentzBoost boost_matrix(const Momentum& p);

/// Antisymmetric rank-2 tensor, contravariant indices. Storage holds the
/// six independent upper-triangle entries, so F^{mu nu} = -F^{nu mu} is
/// structural rather than numerical.
struct FieldStrength {
  // order: (01) (02) (03) (12) (13) (23)
  std::array<cplx, 6> e{};

  cplx operator()(int mu, int nu) const;
  /// F_{mu nu} = g_{mu mu} g_{nu nu} F^{mu nu}.
  cplx lower(int mu, int nu) const { return kMetric[mu] * kMetric[nu] * (*this)(mu, nu); }
  /// Writes F^{mu nu} = v (and implicitly F^{nu mu} = -v). Throws on a
  /// diagonal index pair with nonzero value.
  void set(int mu, int nu, cplx v);

  FieldStrength operator+(const FieldStrength& o) const;
  FieldStrength operator-(const FieldStrength& o) const;
  FieldStrength operator-() const;
  double max_abs() const;
};

FieldStrength operator*(cplx s, const FieldStrength& F);

/// Hodge dual (1/2) eps^{mu nu rho sig} F_{rho sig}; applying it twice
/// gives -F.
FieldStrength dual(const FieldStrength& F);

struct EBFields {
  std::array<cplx, 3> E{}, B{};
  double max_abs() const;
};

EBFields eb_decompose(const FieldStrength& F);
FieldStrength eb_compose(const std::array<cplx, 3>& E, const std::array<cplx, 3>& B);

/// F'^{ab} = L^a_mu L^b_nu F^{mu nu} for an arbitrary transformation matrix.
FieldStrength transform_tensor(const Mat4d& L, const FieldStrength& F);

/// Matrix exponential by scaling and squaring; used for building exact
/// finite Lorentz transformations out of generator parameters.
Mat4d mat4_exp(const Mat4d& a);

Mat4d mat4_mul(const Mat4d& a, const Mat4d& b);

/// Complex 4x4 matrix; serves both spinor-space (Dirac) and Lorentz-index
/// (density tensor) roles.
struct Matrix4c {
  std::array<cplx, 16> a{};

  cplx& at(int r, int c) { return a[4 * r + c]; }
  const cplx& at(int r, int c) const { return a[4 * r + c]; }

  Matrix4c operator+(const Matrix4c& o) const;
  Matrix4c operator-(const Matrix4c& o) const;
  Matrix4c operator*(const Matrix4c& o) const;
  Matrix4c transpose() const;
  Matrix4c adjoint() const;
  double max_abs() const;

  static Matrix4c identity();
};

Matrix4c operator*(cplx s, const Matrix4c& m);

}  // namespace notoph
