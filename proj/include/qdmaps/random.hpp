#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qdmaps/matcore.hpp"

namespace qdmaps {

// Deterministic random source. std::mt19937_64 produces a bit-exact sequence
// by the standard, and the uniform/gaussian mappings below are spelled out
// explicitly instead of going through the implementation-defined
// distributions, so identical seeds give identical samples everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in (0, 1]
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  ComplexMatrix matrix(std::size_t nrows, std::size_t ncols) {
    ComplexMatrix out(nrows, ncols);
    for (auto& e : out.entries()) e = complex_gaussian();
    return out;
  }

  ComplexMatrix hermitian(std::size_t n) {
    ComplexMatrix g = matrix(n, n);
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return out;
  }

  std::vector<Complex> unit_vector(std::size_t n) {
    std::vector<Complex> v(n);
    double norm2 = 0.0;
    for (auto& e : v) {
      e = complex_gaussian();
      norm2 += std::norm(e);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& e : v) e *= inv;
    return v;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qdmaps
