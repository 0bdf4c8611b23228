#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qdmaps/dynmaps.hpp"
#include "qdmaps/random.hpp"

namespace qdmaps::testing {

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(a - b);
}

// Random CP+TP map on a d-level system: partial trace of a random joint
// unitary over a d_env environment started in |0><0|.
inline AMap random_tp_amap(Rng& rng, std::size_t d, std::size_t d_env) {
  const ComplexMatrix h = rng.hermitian(d * d_env);
  const ComplexMatrix u = expm_hermitian_generator(h, 1.0);
  const ComplexMatrix u_dag = dagger(u);
  ComplexMatrix rho_env(d_env, d_env);
  rho_env(0, 0) = 1.0;

  ComplexMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d, d);
      unit(i, j) = 1.0;
      const ComplexMatrix evolved = matmul(matmul(u, kron(unit, rho_env)), u_dag);
      const ComplexMatrix reduced = partial_trace(evolved, d, d_env, Subsystem::second);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r * d + c, i * d + j) = reduced(r, c);
    }
  return AMap(d, m);
}

// Random density matrix: normalized G G^dag with Gaussian G.
inline ComplexMatrix random_state(Rng& rng, std::size_t d) {
  const ComplexMatrix g = rng.matrix(d, d);
  ComplexMatrix rho = matmul(g, dagger(g));
  const double tr = trace(rho).real();
  rho *= Complex(1.0 / tr, 0.0);
  return rho;
}

inline double max_eig_diff(const std::vector<double>& got, std::vector<double> want) {
  std::sort(want.begin(), want.end());
  double m = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) m = std::max(m, std::abs(got[i] - want[i]));
  return m;
}

}  // namespace qdmaps::testing
