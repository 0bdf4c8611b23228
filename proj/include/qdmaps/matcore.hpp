#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qdmaps/errors.hpp"

namespace qdmaps {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. The substrate for states, unitaries and
// dynamical maps. Composite indices follow one convention throughout the
// library: the pair (i,j) on a d x d' tensor grid flattens to i*d' + j, so
// kron(), realign(), partial_trace() and the map vectorization all agree.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows), ncols_(ncols), entries_(nrows * ncols) {}
  ComplexMatrix(std::size_t nrows, std::size_t ncols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }
  bool is_square() const { return nrows_ == ncols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * ncols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * ncols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  bool operator==(const ComplexMatrix& o) const = default;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product with row-major block layout:
// out(i*p + k, j*q + l) = a(i,j) * b(k,l) for b of shape p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
// max entrywise |a - a^dag|
double hermiticity_defect(const ComplexMatrix& a);

// Inverse by Gaussian elimination with partial pivoting. Throws SingularMatrix
// when any pivot magnitude falls below singular_tol: for dynamical maps this
// signals the intermediate map is undefined at that t1 (p(t1)=0 etc.), so the
// breakdown must surface as an error rather than be regularized away.
ComplexMatrix inverse(const ComplexMatrix& a, double singular_tol = 1e-12);

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

// Full spectrum of a Hermitian matrix via cyclic Jacobi rotations, iterated
// until the off-diagonal Frobenius norm drops below off_tol. The matrices in
// this library are small (at most a few hundred), so the rotation scheme's
// robustness wins over speed. Throws NotHermitian when max|a - a^dag| exceeds
// herm_tol, NoConvergence after max_sweeps sweeps.
HermitianEigenResult hermitian_eigs(const ComplexMatrix& a, double herm_tol = 1e-9,
                                    double off_tol = 1e-12, int max_sweeps = 50);

enum class Subsystem { first, second };

// Trace over one tensor factor of an (d1*d2) x (d1*d2) matrix laid out in the
// kron() convention above.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d1, std::size_t d2,
                            Subsystem which);

// Index realignment connecting the A and B forms of a map:
// out(a1*d + a1', a2*d + a2') = in(a1*d + a2, a1'*d + a2'). Involutive.
ComplexMatrix realign(const ComplexMatrix& m, std::size_t d);

// U = exp(-i h t) for Hermitian h, computed through hermitian_eigs.
ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double t,
                                       double herm_tol = 1e-9);

// Qubit building blocks.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// |psi_ME><psi_ME| with |psi_ME> = (1/sqrt(d)) sum_i |i,i>.
ComplexMatrix max_entangled_projector(std::size_t d);

}  // namespace qdmaps
