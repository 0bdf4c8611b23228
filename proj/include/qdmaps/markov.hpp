#pragma once

#include <optional>
#include <vector>

#include "qdmaps/models.hpp"

namespace qdmaps {

enum class Verdict { Markov, NonMarkov, NonMarkovInitialCorrelations };

const char* verdict_name(Verdict v);

// One classification row: CP flags of B(t1,0), B(t2,0) and of the intermediate
// B(t2,t1) (absent when the intermediate is undefined), plus the verdict.
struct ClassificationRecord {
  bool cp_t1 = false;
  bool cp_t2 = false;
  std::optional<bool> cp_intermediate;
  Verdict verdict = Verdict::Markov;
};

// Maps CP flags onto a verdict:
//   (CP,  CP,  CP ) -> Markov
//   (CP,  CP,  NCP) -> NonMarkov
//   (NCP, NCP, any) -> NonMarkovInitialCorrelations, intermediate not evaluated
// Everything else is outside the scheme and throws InconsistentFlags rather
// than guessing: mixed cp_t1 != cp_t2, or both CP with the intermediate flag
// absent.
ClassificationRecord classify(bool cp_t1, bool cp_t2, std::optional<bool> cp_intermediate);

// One ordered grid pair. A singular A(t1,0) leaves cp absent and the two
// numeric columns NaN.
struct ScanRow {
  double t1 = 0.0;
  double t2 = 0.0;
  double min_choi_eig = 0.0;
  std::optional<bool> cp;
  double semigroup_defect = 0.0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
};

// Sweeps every ordered pair (t1,t2), t1 < t2, of the grid: intermediate map,
// its smallest Choi eigenvalue, the CP flag at cp_tol, and the semigroup
// defect ||A(t2,t1) - A(t2-t1,0)||_F. Rows are ordered by (t1,t2). Throws
// EmptyGrid on an empty grid and DomainError unless the grid is strictly
// increasing and positive.
ScanResult scan_divisibility(const ModelFamily& family, const std::vector<double>& grid,
                             double cp_tol = 1e-10, double singular_tol = 1e-12);

// Two-qubit concurrence via the spin-flip spectrum: with
// rho~ = (sy (x) sy) conj(rho) (sy (x) sy) and li the descending square roots
// of the eigenvalues of rho rho~, C = max(0, l1 - l2 - l3 - l4). Computed on
// the Hermitian product sqrt(rho) rho~ sqrt(rho), which shares those
// eigenvalues. Throws InvalidState unless rho is 4x4, Hermitian, unit trace
// and PSD within state_tol.
double concurrence(const ComplexMatrix& rho, double state_tol = 1e-8);

struct ConcurrencePoint {
  double t = 0.0;
  double p = 0.0;
  double concurrence = 0.0;
};

struct ConcurrenceTrajectory {
  std::vector<ConcurrencePoint> rows;
};

// Concurrence of the isotropic system-ancilla state rho_ab(p(t)) along a time
// grid; equals max(0, (3p-1)/2). Throws EmptyGrid on an empty grid; negative
// times surface as DomainError from p_eval.
ConcurrenceTrajectory concurrence_trajectory(const PFunction& f, const std::vector<double>& times);

}  // namespace qdmaps
