#pragma once

#include "qdmaps/dynmaps.hpp"

namespace qdmaps {

// The mixing parameter p(t) of the isotropic-state map family. All three
// kinds start at p(0) = 1 and stay inside [0, 1]:
//   exponential    p(t) = e^{-alpha t}
//   stretched      p(t) = e^{-alpha t^beta}
//   cospower       p(t) = cos^{2N}(a t)
struct PFunction {
  enum class Kind { exponential, stretched, cospower };

  Kind kind = Kind::exponential;
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  int n = 0;

  static PFunction exponential(double alpha);
  static PFunction stretched(double alpha, double beta);
  static PFunction cospower(double a, int n);
};

double p_eval(const PFunction& f, double t);

// B map of the isotropic (Werner-type) family:
// B = 2 rho_ab(p) with rho_ab = (1-p)/4 I4 + p |psi_ME><psi_ME|.
// Eigenvalues (1-p)/2 three times and (1+3p)/2 once; trace 2.
BMap werner_bmap(double p);

// The matching A map: the depolarizing action rho -> p rho + (1-p) Tr(rho) I/2.
AMap werner_amap(double p);

// Closed-form intermediate B(t2,t1) of the family, parametrized by the two
// endpoint values p1 = p(t1), p2 = p(t2):
// B = (p1-p2)/(2 p1) I4 + (2 p2/p1) |psi_ME><psi_ME|.
// Equals the generic A(t2,0) A(t1,0)^{-1} pipeline wherever p1 is nonzero.
BMap werner_intermediate_bmap(double p1, double p2, double singular_tol = 1e-12);

// Central spin coupled to N bath spins through a z-z hyperfine interaction,
// H = (g/sqrt(N)) sigma_z (x) sum_k sigma_kz, bath prepared maximally mixed.
// The reduced dynamics is pure dephasing with coherence factor
// x(t) = cos^N(2 g t / sqrt(N)).
struct SpinStarModel {
  double g = 1.0;
  int n_bath = 1;

  double x(double t) const;
};

// Closed-form A(t,0) = (1-x)/2 sigma_z (x) sigma_z + (1+x)/2 I (x) I:
// diagonals preserved, coherences scaled by x(t).
AMap spinstar_amap(const SpinStarModel& m, double t);

// Brute-force oracle: builds the 2^{N+1}-dimensional joint unitary and traces
// out the bath, no closed form used. Guarded to N <= 10 (joint dimension
// 2048).
AMap spinstar_amap_dilation(const SpinStarModel& m, double t);

// Closed-form intermediate B(t2,t1) with ratio r = x(t2)/x(t1):
// B = (I (x) I + sigma_z (x) sigma_z)/2 + r/2 (sigma_x (x) sigma_x - sigma_y (x) sigma_y).
// Spectrum {0, 0, 1-r, 1+r}; NCP whenever |r| > 1.
BMap spinstar_intermediate_bmap(const SpinStarModel& m, double t1, double t2,
                                double singular_tol = 1e-12);

// Single environment qubit driven by sigma_z (x) sigma_x:
// U(t,0) = cos(wt/2) I - i sin(wt/2) sigma_z (x) sigma_x on
// rho_S (x) (I+sigma_z)/2, giving dephasing with coherence factor cos(w t).
struct SigmaZXModel {
  double omega = 1.0;
};

AMap sigmazx_amap(const SigmaZXModel& m, double t);
AMap sigmazx_amap_dilation(const SigmaZXModel& m, double t);

// Intermediate B(t2,t1) with r = cos(w t2)/cos(w t1); spectrum {0, 0, 1±r}.
BMap sigmazx_intermediate_bmap(const SigmaZXModel& m, double t1, double t2,
                               double singular_tol = 1e-12);

// One handle over the dynamical families: hands out A(t,0) for any t >= 0.
// Grid scans and the CLI front end are written against this.
struct ModelFamily {
  enum class Kind { werner, spinstar, sigmazx };

  Kind kind = Kind::werner;
  PFunction p;
  SpinStarModel spin;
  SigmaZXModel zx;

  static ModelFamily werner(PFunction f);
  static ModelFamily spinstar(SpinStarModel m);
  static ModelFamily sigmazx(SigmaZXModel m);

  AMap amap_at(double t) const;
  // The family's closed-form B(t2,t1); throws SingularIntermediateMap at
  // singular t1 like the generic pipeline does.
  BMap intermediate_bmap_at(double t1, double t2, double singular_tol = 1e-12) const;
};

}  // namespace qdmaps
