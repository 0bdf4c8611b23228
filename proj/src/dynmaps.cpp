#include "qdmaps/dynmaps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdmaps/random.hpp"

namespace qdmaps {

namespace {

void check_map_shape(std::size_t d, const ComplexMatrix& m, const char* who) {
  if (d < 2) throw DomainError(std::string(who) + ": system dimension must be >= 2");
  const std::size_t dim = d * d;
  if (m.nrows() != dim || m.ncols() != dim)
    throw DimensionMismatch(std::string(who) + ": matrix is " + std::to_string(m.nrows()) +
                            "x" + std::to_string(m.ncols()) + ", expected " +
                            std::to_string(dim) + "x" + std::to_string(dim));
  if (!m.all_finite()) throw DomainError(std::string(who) + ": non-finite entries");
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out(m.nrows(), m.ncols());
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

}  // namespace

AMap::AMap(std::size_t d_, ComplexMatrix m_) : d(d_), m(std::move(m_)) {
  check_map_shape(d, m, "AMap");
}

BMap::BMap(std::size_t d_, ComplexMatrix m_) : d(d_), m(std::move(m_)) {
  check_map_shape(d, m, "BMap");
}

AMap identity_amap(std::size_t d) {
  if (d < 2) throw DomainError("identity_amap: d must be >= 2");
  return AMap(d, ComplexMatrix::identity(d * d));
}

ComplexMatrix apply_amap(const AMap& a, const ComplexMatrix& rho) {
  const std::size_t d = a.d;
  if (rho.nrows() != d || rho.ncols() != d)
    throw DimensionMismatch("apply_amap: state is " + std::to_string(rho.nrows()) + "x" +
                            std::to_string(rho.ncols()) + ", map expects " +
                            std::to_string(d) + "x" + std::to_string(d));
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d * d; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < d * d; ++c) {
      const Complex arc = a.m(r, c);
      if (arc == Complex(0.0, 0.0)) continue;
      s += arc * rho(c / d, c % d);
    }
    out(r / d, r % d) = s;
  }
  return out;
}

BMap a_to_b(const AMap& a) { return BMap(a.d, realign(a.m, a.d)); }

AMap b_to_a(const BMap& b) { return AMap(b.d, realign(b.m, b.d)); }

AMap compose(const AMap& a2, const AMap& a1) {
  if (a2.d != a1.d) throw DimensionMismatch("compose: system dimensions differ");
  return AMap(a2.d, matmul(a2.m, a1.m));
}

AMap intermediate_amap(const AMap& a_t2, const AMap& a_t1, double singular_tol) {
  if (a_t2.d != a_t1.d) throw DimensionMismatch("intermediate_amap: system dimensions differ");
  try {
    return AMap(a_t2.d, matmul(a_t2.m, inverse(a_t1.m, singular_tol)));
  } catch (const SingularMatrix& e) {
    throw SingularIntermediateMap(std::string("intermediate map undefined: ") + e.what());
  }
}

BMap choi_from_action(const MapAction& action, std::size_t d, double linearity_tol) {
  if (d < 2) throw DomainError("choi_from_action: d must be >= 2");

  const auto apply_checked = [&](const ComplexMatrix& x) {
    ComplexMatrix y = action(x);
    if (y.nrows() != d || y.ncols() != d)
      throw DimensionMismatch("choi_from_action: action returned " +
                              std::to_string(y.nrows()) + "x" + std::to_string(y.ncols()) +
                              ", expected " + std::to_string(d) + "x" + std::to_string(d));
    return y;
  };

  // Linearity spot-check on a fixed random combination.
  {
    Rng rng(0x51ab2e6f);
    const ComplexMatrix x = rng.matrix(d, d);
    const ComplexMatrix y = rng.matrix(d, d);
    const Complex alpha = rng.complex_gaussian();
    const Complex beta = rng.complex_gaussian();
    const ComplexMatrix combined = apply_checked(alpha * x + beta * y);
    const ComplexMatrix separate = alpha * apply_checked(x) + beta * apply_checked(y);
    const double dev = max_abs(combined - separate);
    if (dev > linearity_tol)
      throw NonLinearAction("choi_from_action: linearity deviation " + std::to_string(dev));
  }

  // B = sum_ij action(E_ij) (x) E_ij, i.e. d * (Id (x) action)|psi_ME><psi_ME|
  // brought to this library's realignment convention.
  ComplexMatrix b(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d, d);
      unit(i, j) = 1.0;
      const ComplexMatrix mapped = apply_checked(unit);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) b(r * d + i, c * d + j) = mapped(r, c);
    }
  return BMap(d, b);
}

double min_choi_eigenvalue(const AMap& a) {
  const ComplexMatrix b = hermitian_part(realign(a.m, a.d));
  return hermitian_eigs(b).eigenvalues.front();
}

MapDiagnostics diagnose(const AMap& a, double cp_tol, int n_samples, std::uint64_t seed) {
  const std::size_t d = a.d;
  MapDiagnostics out;

  // Trace preservation: sum_a1 A[(a1,a1),(a1',a2')] = delta_(a1',a2').
  for (std::size_t a1p = 0; a1p < d; ++a1p)
    for (std::size_t a2p = 0; a2p < d; ++a2p) {
      Complex s = 0.0;
      for (std::size_t a1 = 0; a1 < d; ++a1) s += a.m(a1 * d + a1, a1p * d + a2p);
      if (a1p == a2p) s -= 1.0;
      out.tp_defect = std::max(out.tp_defect, std::abs(s));
    }

  const ComplexMatrix b_raw = realign(a.m, d);
  out.herm_defect = hermiticity_defect(b_raw);

  // CP witness and block-positivity sample run on the Hermitian part so the
  // diagnostics always complete; the asymmetry is already in herm_defect.
  const ComplexMatrix b = hermitian_part(b_raw);
  out.min_choi_eig = hermitian_eigs(b).eigenvalues.front();

  Rng rng(seed);
  double block_min = 0.0;
  bool first = true;
  for (int sample = 0; sample < n_samples; ++sample) {
    const std::vector<Complex> x = rng.unit_vector(d);
    const std::vector<Complex> y = rng.unit_vector(d);
    // w = x (x) conj(y); value = w^dag B w, the product-vector form.
    Complex value = 0.0;
    for (std::size_t a1 = 0; a1 < d; ++a1)
      for (std::size_t a1p = 0; a1p < d; ++a1p) {
        const Complex wl = std::conj(x[a1]) * y[a1p];
        for (std::size_t a2 = 0; a2 < d; ++a2)
          for (std::size_t a2p = 0; a2p < d; ++a2p)
            value += wl * b(a1 * d + a1p, a2 * d + a2p) * x[a2] * std::conj(y[a2p]);
      }
    const double v = value.real();
    if (first || v < block_min) block_min = v;
    first = false;
  }
  out.block_pos_min = block_min;

  out.is_cp = out.min_choi_eig >= -cp_tol;
  out.is_tp = out.tp_defect <= cp_tol;
  return out;
}

std::vector<ComplexMatrix> kraus_from_bmap(const BMap& b, double cp_tol) {
  const std::size_t d = b.d;
  const HermitianEigenResult eig = hermitian_eigs(b.m);
  if (eig.eigenvalues.front() < -cp_tol)
    throw NotCP("kraus_from_bmap: min eigenvalue " + std::to_string(eig.eigenvalues.front()) +
                " is negative, the map has no Kraus form");

  std::vector<ComplexMatrix> ops;
  for (std::size_t k = eig.eigenvalues.size(); k-- > 0;) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= cp_tol) continue;
    const double w = std::sqrt(lambda);
    ComplexMatrix op(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) op(i, j) = w * eig.eigenvectors(i * d + j, k);
    // Fix the overall phase: largest-magnitude entry real positive.
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t e = 0; e < op.entries().size(); ++e) {
      const double v = std::abs(op.entries()[e]);
      if (v > best) {
        best = v;
        arg = e;
      }
    }
    if (best > 0.0) {
      const Complex phase = std::conj(op.entries()[arg]) / best;
      op *= phase;
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

}  // namespace qdmaps
