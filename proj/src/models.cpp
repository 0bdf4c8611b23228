#include "qdmaps/models.hpp"

#include <cmath>
#include <string>

namespace qdmaps {

namespace {

void require_nonnegative_time(double t, const char* who) {
  if (!(t >= 0.0)) throw DomainError(std::string(who) + ": time must be >= 0");
}

double checked_p(double p) {
  if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
    throw DomainError("p(t) left [0,1]: " + std::to_string(p));
  return std::min(1.0, std::max(0.0, p));
}

// (1-q)/2 I4 + 2q |psi_ME><psi_ME|, valid for any real mixing ratio q.
ComplexMatrix isotropic_bmatrix(double q) {
  ComplexMatrix b = 0.5 * (1.0 - q) * ComplexMatrix::identity(4);
  b += 2.0 * q * max_entangled_projector(2);
  return b;
}

// (1-x)/2 sigma_z (x) sigma_z + (1+x)/2 I4: dephasing A-map with coherence
// factor x.
AMap dephasing_amap(double x) {
  ComplexMatrix m = 0.5 * (1.0 - x) * kron(pauli_z(), pauli_z());
  m += 0.5 * (1.0 + x) * ComplexMatrix::identity(4);
  return AMap(2, std::move(m));
}

// (I4 + sigma_z (x) sigma_z)/2 + r/2 (sigma_x (x) sigma_x - sigma_y (x) sigma_y)
BMap dephasing_intermediate_bmap(double ratio) {
  ComplexMatrix m = 0.5 * (ComplexMatrix::identity(4) + kron(pauli_z(), pauli_z()));
  m += 0.5 * ratio * (kron(pauli_x(), pauli_x()) - kron(pauli_y(), pauli_y()));
  return BMap(2, std::move(m));
}

// A-map assembled column by column from Tr_E[U (E_ij (x) rho_env) U^dag].
AMap amap_from_dilation(const ComplexMatrix& u, const ComplexMatrix& rho_env, std::size_t d) {
  const std::size_t d_env = rho_env.nrows();
  const ComplexMatrix u_dag = dagger(u);
  ComplexMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d, d);
      unit(i, j) = 1.0;
      const ComplexMatrix joint = kron(unit, rho_env);
      const ComplexMatrix evolved = matmul(matmul(u, joint), u_dag);
      const ComplexMatrix reduced = partial_trace(evolved, d, d_env, Subsystem::second);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r * d + c, i * d + j) = reduced(r, c);
    }
  return AMap(d, std::move(m));
}

}  // namespace

PFunction PFunction::exponential(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("PFunction::exponential: alpha must be > 0");
  PFunction f;
  f.kind = Kind::exponential;
  f.alpha = alpha;
  return f;
}

PFunction PFunction::stretched(double alpha, double beta) {
  if (!(alpha > 0.0)) throw DomainError("PFunction::stretched: alpha must be > 0");
  if (!(beta > 0.0)) throw DomainError("PFunction::stretched: beta must be > 0");
  PFunction f;
  f.kind = Kind::stretched;
  f.alpha = alpha;
  f.beta = beta;
  return f;
}

PFunction PFunction::cospower(double a, int n) {
  if (!(a > 0.0)) throw DomainError("PFunction::cospower: a must be > 0");
  if (n < 1) throw DomainError("PFunction::cospower: N must be >= 1");
  PFunction f;
  f.kind = Kind::cospower;
  f.a = a;
  f.n = n;
  return f;
}

double p_eval(const PFunction& f, double t) {
  require_nonnegative_time(t, "p_eval");
  switch (f.kind) {
    case PFunction::Kind::exponential:
      return checked_p(std::exp(-f.alpha * t));
    case PFunction::Kind::stretched:
      return checked_p(std::exp(-f.alpha * std::pow(t, f.beta)));
    case PFunction::Kind::cospower:
      return checked_p(std::pow(std::cos(f.a * t), 2 * f.n));
  }
  throw DomainError("p_eval: unknown kind");
}

BMap werner_bmap(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("werner_bmap: p must lie in [0,1]");
  return BMap(2, isotropic_bmatrix(p));
}

AMap werner_amap(double p) { return b_to_a(werner_bmap(p)); }

BMap werner_intermediate_bmap(double p1, double p2, double singular_tol) {
  if (std::abs(p1) <= singular_tol)
    throw SingularIntermediateMap("werner_intermediate_bmap: p(t1) = " + std::to_string(p1) +
                                  " is singular");
  return BMap(2, isotropic_bmatrix(p2 / p1));
}

double SpinStarModel::x(double t) const {
  const double root_n = std::sqrt(static_cast<double>(n_bath));
  return std::pow(std::cos(2.0 * g * t / root_n), n_bath);
}

AMap spinstar_amap(const SpinStarModel& m, double t) {
  require_nonnegative_time(t, "spinstar_amap");
  if (m.n_bath < 1) throw DomainError("spinstar_amap: N must be >= 1");
  return dephasing_amap(m.x(t));
}

AMap spinstar_amap_dilation(const SpinStarModel& m, double t) {
  require_nonnegative_time(t, "spinstar_amap_dilation");
  if (m.n_bath < 1) throw DomainError("spinstar_amap_dilation: N must be >= 1");
  if (m.n_bath > 10)
    throw DimensionGuard("spinstar_amap_dilation: N = " + std::to_string(m.n_bath) +
                         " exceeds the N <= 10 dilation guard");
  const std::size_t env_dim = std::size_t{1} << m.n_bath;

  // H = (g/sqrt(N)) sigma_z (x) sum_k sigma_kz
  ComplexMatrix bath_sum(env_dim, env_dim);
  for (std::size_t s = 0; s < env_dim; ++s) {
    int total = 0;
    for (int k = 0; k < m.n_bath; ++k) total += ((s >> k) & 1u) ? -1 : 1;
    bath_sum(s, s) = static_cast<double>(total);
  }
  const double scale = m.g / std::sqrt(static_cast<double>(m.n_bath));
  const ComplexMatrix h = scale * kron(pauli_z(), bath_sum);

  const ComplexMatrix u = expm_hermitian_generator(h, t);
  const ComplexMatrix rho_env =
      (1.0 / static_cast<double>(env_dim)) * ComplexMatrix::identity(env_dim);
  return amap_from_dilation(u, rho_env, 2);
}

BMap spinstar_intermediate_bmap(const SpinStarModel& m, double t1, double t2,
                                double singular_tol) {
  require_nonnegative_time(t1, "spinstar_intermediate_bmap");
  require_nonnegative_time(t2, "spinstar_intermediate_bmap");
  const double x1 = m.x(t1);
  if (std::abs(x1) <= singular_tol)
    throw SingularIntermediateMap("spinstar_intermediate_bmap: x(t1) = " +
                                  std::to_string(x1) + " is singular");
  return dephasing_intermediate_bmap(m.x(t2) / x1);
}

AMap sigmazx_amap(const SigmaZXModel& m, double t) {
  require_nonnegative_time(t, "sigmazx_amap");
  return dephasing_amap(std::cos(m.omega * t));
}

AMap sigmazx_amap_dilation(const SigmaZXModel& m, double t) {
  require_nonnegative_time(t, "sigmazx_amap_dilation");
  // Generator (w/2) sigma_z (x) sigma_x, so that
  // U = cos(wt/2) I - i sin(wt/2) sigma_z (x) sigma_x.
  const ComplexMatrix h = (0.5 * m.omega) * kron(pauli_z(), pauli_x());
  const ComplexMatrix u = expm_hermitian_generator(h, t);
  const ComplexMatrix rho_env = 0.5 * (ComplexMatrix::identity(2) + pauli_z());
  return amap_from_dilation(u, rho_env, 2);
}

BMap sigmazx_intermediate_bmap(const SigmaZXModel& m, double t1, double t2,
                               double singular_tol) {
  require_nonnegative_time(t1, "sigmazx_intermediate_bmap");
  require_nonnegative_time(t2, "sigmazx_intermediate_bmap");
  const double c1 = std::cos(m.omega * t1);
  if (std::abs(c1) <= singular_tol)
    throw SingularIntermediateMap("sigmazx_intermediate_bmap: cos(w t1) = " +
                                  std::to_string(c1) + " is singular");
  return dephasing_intermediate_bmap(std::cos(m.omega * t2) / c1);
}

ModelFamily ModelFamily::werner(PFunction f) {
  ModelFamily fam;
  fam.kind = Kind::werner;
  fam.p = f;
  return fam;
}

ModelFamily ModelFamily::spinstar(SpinStarModel m) {
  ModelFamily fam;
  fam.kind = Kind::spinstar;
  fam.spin = m;
  return fam;
}

ModelFamily ModelFamily::sigmazx(SigmaZXModel m) {
  ModelFamily fam;
  fam.kind = Kind::sigmazx;
  fam.zx = m;
  return fam;
}

AMap ModelFamily::amap_at(double t) const {
  switch (kind) {
    case Kind::werner:
      return werner_amap(p_eval(p, t));
    case Kind::spinstar:
      return spinstar_amap(spin, t);
    case Kind::sigmazx:
      return sigmazx_amap(zx, t);
  }
  throw DomainError("ModelFamily::amap_at: unknown kind");
}

BMap ModelFamily::intermediate_bmap_at(double t1, double t2, double singular_tol) const {
  switch (kind) {
    case Kind::werner:
      return werner_intermediate_bmap(p_eval(p, t1), p_eval(p, t2), singular_tol);
    case Kind::spinstar:
      return spinstar_intermediate_bmap(spin, t1, t2, singular_tol);
    case Kind::sigmazx:
      return sigmazx_intermediate_bmap(zx, t1, t2, singular_tol);
  }
  throw DomainError("ModelFamily::intermediate_bmap_at: unknown kind");
}

}  // namespace qdmaps
