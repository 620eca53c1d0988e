#include "notoph/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace notoph {

int levi_civita(int mu, int nu, int rho, int sig) {
  const int idx[4] = {mu, nu, rho, sig};
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  }
  return sign;
}

FourVector FourVector::operator+(const FourVector& o) const {
  FourVector r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

FourVector FourVector::operator-(const FourVector& o) const {
  FourVector r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

FourVector FourVector::operator-() const {
  FourVector r;
  for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
  return r;
}

FourVector FourVector::conj() const {
  FourVector r;
  for (int i = 0; i < 4; ++i) r.c[i] = std::conj(c[i]);
  return r;
}

double FourVector::max_abs() const {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

FourVector operator*(cplx s, const FourVector& v) {
  FourVector r;
  for (int i = 0; i < 4; ++i) r.c[i] = s * v.c[i];
  return r;
}

cplx minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3];
}

double Momentum::p_abs() const { return std::sqrt(p2()); }

double Momentum::energy() const { return std::sqrt(p2() + m * m); }

FourVector Momentum::four_momentum() const {
  FourVector v;
  v.c[0] = energy();
  for (int i = 0; i < 3; ++i) v.c[i + 1] = p[i];
  return v;
}

FourVector LorentzBoost::apply(const FourVector& v) const {
  FourVector r;
  for (int mu = 0; mu < 4; ++mu) {
    cplx s = 0.0;
    for (int nu = 0; nu < 4; ++nu) s += (*this)(mu, nu) * v.c[nu];
    r.c[mu] = s;
  }
  return r;
}

LorentzBoost boost_matrix(const Momentum& p) {
  if (p.m <= 0.0) throw std::domain_error("boost_matrix: mass must be positive");
  const double E = p.energy();
  const double m = p.m;
  LorentzBoost L;
  L.at(0, 0) = E / m;
  for (int i = 0; i < 3; ++i) {
    // p_i/m equals phat_i sqrt(gamma^2-1); finite and correct at |p| = 0.
    L.at(0, i + 1) = p.p[i] / m;
    L.at(i + 1, 0) = p.p[i] / m;
    for (int k = 0; k < 3; ++k) {
      // (gamma-1) phat_i phat_k = p_i p_k / (m (E+m))
      L.at(i + 1, k + 1) = (i == k ? 1.0 : 0.0) + p.p[i] * p.p[k] / (m * (E + m));
    }
  }
  return L;
}

namespace {

// pair index for mu < nu in the storage order (01)(02)(03)(12)(13)(23)
constexpr int kPair[4][4] = {
    {-1, 0, 1, 2},
    {-1, -1, 3, 4},
    {-1, -1, -1, 5},
    {-1, -1, -1, -1},
};

}  // namespace

cplx FieldStrength::operator()(int mu, int nu) const {
  if (mu == nu) return 0.0;
  return mu < nu ? e[kPair[mu][nu]] : -e[kPair[nu][mu]];
}

void FieldStrength::set(int mu, int nu, cplx v) {
  if (mu == nu) {
    if (v != 0.0) throw std::invalid_argument("FieldStrength::set: diagonal entry must vanish");
    return;
  }
  if (mu < nu)
    e[kPair[mu][nu]] = v;
  else
    e[kPair[nu][mu]] = -v;
}

FieldStrength FieldStrength::operator+(const FieldStrength& o) const {
  FieldStrength r;
  for (int k = 0; k < 6; ++k) r.e[k] = e[k] + o.e[k];
  return r;
}

FieldStrength FieldStrength::operator-(const FieldStrength& o) const {
  FieldStrength r;
  for (int k = 0; k < 6; ++k) r.e[k] = e[k] - o.e[k];
  return r;
}

FieldStrength FieldStrength::operator-() const {
  FieldStrength r;
  for (int k = 0; k < 6; ++k) r.e[k] = -e[k];
  return r;
}

double FieldStrength::max_abs() const {
  double m = 0.0;
  for (const auto& v : e) m = std::max(m, std::abs(v));
  return m;
}

FieldStrength operator*(cplx s, const FieldStrength& F) {
  FieldStrength r;
  for (int k = 0; k < 6; ++k) r.e[k] = s * F.e[k];
  return r;
}

FieldStrength dual(const FieldStrength& F) {
  FieldStrength D;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      cplx s = 0.0;
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const int eps = levi_civita(mu, nu, rho, sig);
          if (eps != 0) s += 0.5 * static_cast<double>(eps) * F.lower(rho, sig);
        }
      D.set(mu, nu, s);
    }
  }
  return D;
}

double EBFields::max_abs() const {
  double m = 0.0;
  for (const auto& v : E) m = std::max(m, std::abs(v));
  for (const auto& v : B) m = std::max(m, std::abs(v));
  return m;
}

EBFields eb_decompose(const FieldStrength& F) {
  EBFields r;
  for (int i = 0; i < 3; ++i) r.E[i] = F(i + 1, 0);
  r.B[0] = -F(2, 3);
  r.B[1] = F(1, 3);
  r.B[2] = -F(1, 2);
  return r;
}

FieldStrength eb_compose(const std::array<cplx, 3>& E, const std::array<cplx, 3>& B) {
  FieldStrength F;
  for (int i = 0; i < 3; ++i) F.set(i + 1, 0, E[i]);
  F.set(2, 3, -B[0]);
  F.set(1, 3, B[1]);
  F.set(1, 2, -B[2]);
  return F;
}

FieldStrength transform_tensor(const Mat4d& L, const FieldStrength& F) {
  FieldStrength r;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      cplx s = 0.0;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) s += L[4 * a + mu] * L[4 * b + nu] * F(mu, nu);
      r.set(a, b, s);
    }
  }
  return r;
}

Mat4d mat4_mul(const Mat4d& a, const Mat4d& b) {
  Mat4d r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[4 * i + k] * b[4 * k + j];
      r[4 * i + j] = s;
    }
  return r;
}

Mat4d mat4_exp(const Mat4d& a) {
  double norm = 0.0;
  for (double v : a) norm += std::abs(v);
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  Mat4d x{};
  for (int i = 0; i < 16; ++i) x[i] = a[i] * scale;

  Mat4d result{};
  for (int i = 0; i < 4; ++i) result[4 * i + i] = 1.0;
  Mat4d term = result;
  for (int k = 1; k <= 24; ++k) {
    term = mat4_mul(term, x);
    for (int i = 0; i < 16; ++i) term[i] /= static_cast<double>(k);
    double tn = 0.0;
    for (int i = 0; i < 16; ++i) {
      result[i] += term[i];
      tn += std::abs(term[i]);
    }
    if (tn < 1e-300) break;
  }
  for (int s = 0; s < squarings; ++s) result = mat4_mul(result, result);
  return result;
}

Matrix4c Matrix4c::operator+(const Matrix4c& o) const {
  Matrix4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

Matrix4c Matrix4c::operator-(const Matrix4c& o) const {
  Matrix4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

Matrix4c Matrix4c::operator*(const Matrix4c& o) const {
  Matrix4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Matrix4c Matrix4c::transpose() const {
  Matrix4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
  return r;
}

Matrix4c Matrix4c::adjoint() const {
  Matrix4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

double Matrix4c::max_abs() const {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

Matrix4c Matrix4c::identity() {
  Matrix4c r;
  for (int i = 0; i < 4; ++i) r.at(i, i) = 1.0;
  return r;
}

Matrix4c operator*(cplx s, const Matrix4c& m) {
  Matrix4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = s * m.a[i];
  return r;
}

}  // namespace notoph
