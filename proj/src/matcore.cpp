#include "qdmaps/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qdmaps {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
  if (!a.is_square())
    throw DimensionMismatch(std::string(who) + ": matrix must be square, got " +
                            std::to_string(a.nrows()) + "x" + std::to_string(a.ncols()));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t nrows, std::size_t ncols,
                             std::vector<Complex> entries)
    : nrows_(nrows), ncols_(ncols), entries_(std::move(entries)) {
  if (entries_.size() != nrows_ * ncols_)
    throw DimensionMismatch("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                            " does not match shape " + std::to_string(nrows_) + "x" +
                            std::to_string(ncols_));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& e : entries_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
    throw DimensionMismatch("matrix sum: shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
    throw DimensionMismatch("matrix difference: shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.ncols() != b.nrows())
    throw DimensionMismatch("matmul: inner dimensions differ, " + std::to_string(a.ncols()) +
                            " vs " + std::to_string(b.nrows()));
  ComplexMatrix out(a.nrows(), b.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.nrows(), q = b.ncols();
  ComplexMatrix out(a.nrows() * p, a.ncols() * q);
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.ncols(), a.nrows());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out(a.nrows(), a.ncols());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    out.entries()[i] = std::conj(a.entries()[i]);
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.nrows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
  require_square(a, "hermiticity_defect");
  double m = 0.0;
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

ComplexMatrix inverse(const ComplexMatrix& a, double singular_tol) {
  require_square(a, "inverse");
  const std::size_t n = a.nrows();
  // Gauss-Jordan on the augmented system [a | I].
  ComplexMatrix w = a;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(w(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(w(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < singular_tol)
      throw SingularMatrix("inverse: pivot magnitude " + std::to_string(best) +
                           " below threshold at column " + std::to_string(col));
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Complex scale = 1.0 / w(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = w(r, col);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w(r, j) -= f * w(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& w) {
  double s = 0.0;
  const std::size_t n = w.nrows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(w(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigenResult hermitian_eigs(const ComplexMatrix& a, double herm_tol, double off_tol,
                                    int max_sweeps) {
  require_square(a, "hermitian_eigs");
  const std::size_t n = a.nrows();
  const double defect = hermiticity_defect(a);
  if (defect > herm_tol)
    throw NotHermitian("hermitian_eigs: Hermiticity defect " + std::to_string(defect) +
                       " exceeds tolerance");

  // Work on the exact Hermitian part so the rotations see a(i,j)=conj(a(j,i))
  // to the last bit.
  ComplexMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      w(i, j) = h;
      w(j, i) = std::conj(h);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Entries smaller than this can all be skipped in a sweep without pushing
  // the off-diagonal norm back above off_tol.
  const double skip_below = off_tol / (2.0 * static_cast<double>(std::max<std::size_t>(n, 2)));

  int sweep = 0;
  while (off_diagonal_norm(w) >= off_tol) {
    if (sweep++ >= max_sweeps)
      throw NoConvergence("hermitian_eigs: no convergence after " +
                          std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = w(p, q);
        const double r = std::abs(apq);
        if (r <= skip_below) continue;
        const double app = w(p, p).real();
        const double aqq = w(q, q).real();
        // Unitary rotation V with V(p,p)=c, V(p,q)=s, V(q,p)=-conj(s),
        // V(q,q)=c and s = sigma*e^{i arg(apq)} chosen so (V^dag w V)(p,q)=0.
        const double tau = (app - aqq) / (2.0 * r);
        double t;
        if (tau >= 0.0)
          t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        if (tau == 0.0) t = 1.0;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sigma = t * c;
        const Complex phase = apq / r;
        const Complex s = sigma * phase;
        const Complex sbar = std::conj(s);

        const double bpp = c * c * app - 2.0 * c * sigma * r + sigma * sigma * aqq;
        const double bqq = sigma * sigma * app + 2.0 * c * sigma * r + c * c * aqq;
        w(p, p) = bpp;
        w(q, q) = bqq;
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex wkp = w(k, p);
          const Complex wkq = w(k, q);
          w(k, p) = c * wkp - sbar * wkq;
          w(k, q) = s * wkp + c * wkq;
          w(p, k) = std::conj(w(k, p));
          w(q, k) = std::conj(w(k, q));
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - sbar * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

  HermitianEigenResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d1, std::size_t d2,
                            Subsystem which) {
  const std::size_t dim = d1 * d2;
  if (m.nrows() != dim || m.ncols() != dim)
    throw DimensionMismatch("partial_trace: matrix is " + std::to_string(m.nrows()) + "x" +
                            std::to_string(m.ncols()) + ", expected " + std::to_string(dim) +
                            "x" + std::to_string(dim));
  if (which == Subsystem::second) {
    ComplexMatrix out(d1, d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < d2; ++k) s += m(i * d2 + k, j * d2 + k);
        out(i, j) = s;
      }
    return out;
  }
  ComplexMatrix out(d2, d2);
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t l = 0; l < d2; ++l) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < d1; ++i) s += m(i * d2 + k, i * d2 + l);
      out(k, l) = s;
    }
  return out;
}

ComplexMatrix realign(const ComplexMatrix& m, std::size_t d) {
  const std::size_t dim = d * d;
  if (m.nrows() != dim || m.ncols() != dim)
    throw DimensionMismatch("realign: matrix is " + std::to_string(m.nrows()) + "x" +
                            std::to_string(m.ncols()) + ", expected " + std::to_string(dim) +
                            "x" + std::to_string(dim) + " for d=" + std::to_string(d));
  ComplexMatrix out(dim, dim);
  for (std::size_t a1 = 0; a1 < d; ++a1)
    for (std::size_t a1p = 0; a1p < d; ++a1p)
      for (std::size_t a2 = 0; a2 < d; ++a2)
        for (std::size_t a2p = 0; a2p < d; ++a2p)
          out(a1 * d + a1p, a2 * d + a2p) = m(a1 * d + a2, a1p * d + a2p);
  return out;
}

ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double t, double herm_tol) {
  const HermitianEigenResult eig = hermitian_eigs(h, herm_tol);
  const std::size_t n = h.nrows();
  const ComplexMatrix& v = eig.eigenvectors;
  // U = V diag(e^{-i lambda t}) V^dag
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ph = std::exp(Complex(0.0, -eig.eigenvalues[k] * t));
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = v(i, k) * ph;
      if (vik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(v(j, k));
    }
  }
  return out;
}

ComplexMatrix pauli_x() {
  return ComplexMatrix(2, 2, {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix(2, 2, {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix(2, 2, {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)});
}

ComplexMatrix max_entangled_projector(std::size_t d) {
  ComplexMatrix out(d * d, d * d);
  const double w = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i * d + i, j * d + j) = w;
  return out;
}

}  // namespace qdmaps
