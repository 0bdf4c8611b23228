#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qdmaps/matcore.hpp"

namespace qdmaps {

// A-form of a dynamical map: a d^2 x d^2 matrix acting on the row-major
// vectorization of the density matrix, vec(rho)[a1*d + a2] = rho(a1,a2).
// Composition of processes is plain matrix multiplication in this form.
struct AMap {
  std::size_t d = 0;
  ComplexMatrix m;

  AMap(std::size_t d, ComplexMatrix m);
};

// B-form of a map, the index realignment of the A-form. For a physical map
// (trace preserving, Hermiticity preserving) this matrix is Hermitian with
// trace d and B/d is the Choi state of the channel. Those are diagnostic
// expectations checked by diagnose(), not constructor constraints, so any
// A-map can be realigned and back without loss.
struct BMap {
  std::size_t d = 0;
  ComplexMatrix m;

  BMap(std::size_t d, ComplexMatrix m);
};

// Admissibility diagnostics of a map.
//
// tp_defect      max_(a1',a2') |sum_a1 A[(a1,a1),(a1',a2')] - delta_(a1',a2')|
// herm_defect    max entrywise |B - B^dag|, the Hermiticity-preservation defect
// min_choi_eig   smallest eigenvalue of the (Hermitian part of the) B matrix;
//                the complete-positivity witness
// block_pos_min  smallest sampled value of the product-vector quadratic form
//                Re[(x (x) conj(y))^dag B (x (x) conj(y))]; witnesses block
//                positivity, which is strictly weaker than CP
struct MapDiagnostics {
  double tp_defect = 0.0;
  double herm_defect = 0.0;
  double min_choi_eig = 0.0;
  double block_pos_min = 0.0;
  bool is_cp = false;
  bool is_tp = false;
};

using MapAction = std::function<ComplexMatrix(const ComplexMatrix&)>;

// The A-map with entries delta_(a1,a1') delta_(a2,a2'), i.e. the d^2 identity.
AMap identity_amap(std::size_t d);

ComplexMatrix apply_amap(const AMap& a, const ComplexMatrix& rho);

// Pure index permutations; exact inverses of each other.
BMap a_to_b(const AMap& a);
AMap b_to_a(const BMap& b);

// compose(a2, a1) acts as "a1 first, then a2".
AMap compose(const AMap& a2, const AMap& a1);

// A(t2,t1) = A(t2,t0) A(t1,t0)^{-1}. Throws SingularIntermediateMap when
// A(t1,t0) is singular at singular_tol: the intermediate map is genuinely
// undefined there and is never regularized.
AMap intermediate_amap(const AMap& a_t2, const AMap& a_t1, double singular_tol = 1e-12);

// Builds the B matrix of a linear map given only its action, by sending each
// matrix unit through the action (equivalently, d times the action of
// Id (x) map on the maximally entangled state). Spot-checks linearity on a
// random combination first and throws NonLinearAction when the deviation
// exceeds linearity_tol.
BMap choi_from_action(const MapAction& action, std::size_t d, double linearity_tol = 1e-8);

// Smallest eigenvalue of the Hermitian part of a_to_b(a).
double min_choi_eigenvalue(const AMap& a);

// Always completes; never throws. The block-positivity sample is drawn from a
// deterministic generator, so identical (n_samples, seed) give identical
// results.
MapDiagnostics diagnose(const AMap& a, double cp_tol = 1e-10, int n_samples = 10000,
                        std::uint64_t seed = 12345);

// Kraus operators K_i = sqrt(lambda_i) unvec(v_i) from the spectral
// decomposition of B, largest eigenvalue first. Eigenvalues below cp_tol are
// dropped; an eigenvalue below -cp_tol means the map has no Kraus form and
// throws NotCP. Each operator's phase is fixed by making its
// largest-magnitude entry real positive. When the map is also trace
// preserving, sum_i K_i^dag K_i = I.
std::vector<ComplexMatrix> kraus_from_bmap(const BMap& b, double cp_tol = 1e-10);

}  // namespace qdmaps
