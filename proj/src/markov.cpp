#include "qdmaps/markov.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qdmaps/dynmaps.hpp"

namespace qdmaps {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// PSD square root through the eigendecomposition, tiny negative eigenvalues
// clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& herm) {
  const HermitianEigenResult eig = hermitian_eigs(herm);
  const std::size_t n = herm.nrows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = std::max(0.0, eig.eigenvalues[k]);
    const double root = std::sqrt(lam);
    if (root == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = eig.eigenvectors(r, k);
      if (vr == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += root * vr * std::conj(eig.eigenvectors(c, k));
    }
  }
  return out;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Markov:
      return "Markov";
    case Verdict::NonMarkov:
      return "NonMarkov";
    case Verdict::NonMarkovInitialCorrelations:
      return "NonMarkovInitialCorrelations";
  }
  return "?";
}

ClassificationRecord classify(bool cp_t1, bool cp_t2, std::optional<bool> cp_intermediate) {
  if (cp_t1 != cp_t2)
    throw InconsistentFlags(
        "classify: B(t1,0) and B(t2,0) disagree on CP; no classification row covers this");
  ClassificationRecord rec;
  rec.cp_t1 = cp_t1;
  rec.cp_t2 = cp_t2;
  if (!cp_t1) {
    // NCP maps from t0 can only arise from initial correlations; the
    // intermediate map is not evaluated for this row.
    rec.cp_intermediate = std::nullopt;
    rec.verdict = Verdict::NonMarkovInitialCorrelations;
    return rec;
  }
  if (!cp_intermediate.has_value())
    throw InconsistentFlags(
        "classify: both endpoint maps are CP but the intermediate flag is absent");
  rec.cp_intermediate = cp_intermediate;
  rec.verdict = *cp_intermediate ? Verdict::Markov : Verdict::NonMarkov;
  return rec;
}

ScanResult scan_divisibility(const ModelFamily& family, const std::vector<double>& grid,
                             double cp_tol, double singular_tol) {
  if (grid.empty()) throw EmptyGrid("scan_divisibility: empty time grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0))
      throw DomainError("scan_divisibility: grid times must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError("scan_divisibility: grid must be strictly increasing");
  }

  std::vector<AMap> at;
  at.reserve(grid.size());
  for (double t : grid) at.push_back(family.amap_at(t));

  ScanResult out;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      ScanRow row;
      row.t1 = grid[i];
      row.t2 = grid[j];
      try {
        const AMap inter = intermediate_amap(at[j], at[i], singular_tol);
        row.min_choi_eig = min_choi_eigenvalue(inter);
        row.cp = row.min_choi_eig >= -cp_tol;
        const AMap homog = family.amap_at(grid[j] - grid[i]);
        row.semigroup_defect = frobenius_norm(inter.m - homog.m);
      } catch (const SingularIntermediateMap&) {
        row.min_choi_eig = kNan;
        row.cp = std::nullopt;
        row.semigroup_defect = kNan;
      }
      out.rows.push_back(row);
    }
  return out;
}

double concurrence(const ComplexMatrix& rho, double state_tol) {
  if (rho.nrows() != 4 || rho.ncols() != 4)
    throw InvalidState("concurrence: state must be 4x4");
  if (!rho.all_finite()) throw InvalidState("concurrence: state has non-finite entries");
  if (hermiticity_defect(rho) > state_tol)
    throw InvalidState("concurrence: state is not Hermitian");
  if (std::abs(trace(rho) - Complex(1.0, 0.0)) > state_tol)
    throw InvalidState("concurrence: state trace differs from 1");

  ComplexMatrix herm = 0.5 * (rho + dagger(rho));
  const HermitianEigenResult eig = hermitian_eigs(herm);
  if (eig.eigenvalues.front() < -state_tol)
    throw InvalidState("concurrence: state has eigenvalue " +
                       std::to_string(eig.eigenvalues.front()));

  const ComplexMatrix flip = kron(pauli_y(), pauli_y());
  const ComplexMatrix rho_tilde = matmul(matmul(flip, conjugate(herm)), flip);
  const ComplexMatrix s = psd_sqrt(herm);
  // Hermitian and PSD, with the same spectrum as rho * rho_tilde.
  const ComplexMatrix mprod = matmul(matmul(s, rho_tilde), s);
  const HermitianEigenResult mu = hermitian_eigs(mprod);

  double lams[4];
  for (int k = 0; k < 4; ++k) lams[k] = std::sqrt(std::max(0.0, mu.eigenvalues[3 - k]));
  return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

ConcurrenceTrajectory concurrence_trajectory(const PFunction& f,
                                             const std::vector<double>& times) {
  if (times.empty()) throw EmptyGrid("concurrence_trajectory: empty time grid");
  ConcurrenceTrajectory out;
  out.rows.reserve(times.size());
  for (double t : times) {
    ConcurrencePoint pt;
    pt.t = t;
    pt.p = p_eval(f, t);
    const BMap b = werner_bmap(pt.p);
    pt.concurrence = concurrence(0.5 * b.m);
    out.rows.push_back(pt);
  }
  return out;
}

}  // namespace qdmaps
