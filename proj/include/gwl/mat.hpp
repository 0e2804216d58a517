#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gwl {

using cplx = std::complex<double>;

/// Dense row-major NxN complex matrix. Everything is by value; there is no
/// shared state, so instances are freely copyable across threads.
template <std::size_t N>
class Mat {
 public:
  Mat() : e_{} {}

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }

  Mat operator+(const Mat& o) const {
    Mat m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    Mat m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
  }
  Mat operator*(const Mat& o) const {
    Mat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * o(k, j);
      }
    return m;
  }
  Mat operator*(cplx s) const {
    Mat m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = e_[i] * s;
    return m;
  }
  friend Mat operator*(cplx s, const Mat& m) { return m * s; }

  Mat adjoint() const {
    Mat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }
  Mat transpose() const {
    Mat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }
  Mat conjugate() const {
    Mat m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = std::conj(e_[i]);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry magnitude (max-norm).
  double max_abs() const {
    double m = 0.0;
    for (const cplx& z : e_) m = std::max(m, std::abs(z));
    return m;
  }

  /// max_ij |a(i,j) - conj(a(j,i))|
  double hermiticity_error() const {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

  bool all_finite() const {
    for (const cplx& z : e_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

 private:
  std::array<cplx, N * N> e_;
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

inline Mat2 pauli_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}
inline Mat2 pauli_y() {
  Mat2 m;
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}
inline Mat2 pauli_z() {
  Mat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
inline Mat2 pauli(int i) {
  switch (i) {
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
  }
}

/// Kronecker product in the fixed computational ordering {00,01,10,11}:
/// (A (x) B)(2i+j, 2k+l) = A(i,k) B(j,l).
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          m(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
  return m;
}

/// Exchange (swap) operator: |ij><ji| summed over the computational basis.
inline Mat4 exchange_operator() {
  Mat4 m;
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

template <std::size_t N>
struct HermEig {
  std::array<double, N> values;  // descending
  Mat<N> vectors;                // columns, same order as values
};

namespace detail {

template <std::size_t N>
inline void require_hermitian(const Mat<N>& h, double tol) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      const double dev = std::abs(h(i, j) - std::conj(h(j, i)));
      if (dev > tol)
        throw std::invalid_argument("matrix is not Hermitian at entry (" + std::to_string(i) +
                                    "," + std::to_string(j) + "): deviation " +
                                    std::to_string(dev) + " exceeds tol");
    }
}

template <std::size_t N>
inline double off_diagonal_norm(const Mat<N>& a) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) s += 2.0 * std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace detail

/// Full eigensystem of a Hermitian matrix by cyclic Jacobi sweeps with complex
/// plane rotations. Converges when the off-diagonal Frobenius norm drops
/// below 1e-13; at N = 4 this takes a handful of sweeps.
template <std::size_t N>
HermEig<N> herm_eig(const Mat<N>& h, double tol = 1e-9) {
  if (!h.all_finite()) throw std::invalid_argument("herm_eig: non-finite entry");
  detail::require_hermitian(h, tol);

  // Symmetrize round-off so the iteration sees an exactly Hermitian matrix.
  Mat<N> a = (h + h.adjoint()) * 0.5;
  Mat<N> v = Mat<N>::identity();

  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) < 1e-13) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx w = a(p, q);
        const double r = std::abs(w);
        if (r < 1e-300) continue;
        const cplx phase = w / r;
        // small-magnitude root of t^2 - 2 tau t - 1 = 0 (rotation <= pi/4)
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- U^dag A U with U the identity outside the (p,q) plane,
        // U(p,p)=U(q,q)=c, U(p,q)=-s*phase, U(q,p)=s*conj(phase).
        for (std::size_t j = 0; j < N; ++j) {
          const cplx ap = a(j, p), aq = a(j, q);
          a(j, p) = c * ap + s * std::conj(phase) * aq;
          a(j, q) = -s * phase * ap + c * aq;
        }
        for (std::size_t j = 0; j < N; ++j) {
          const cplx ap = a(p, j), aq = a(q, j);
          a(p, j) = c * ap + s * phase * aq;
          a(q, j) = -s * std::conj(phase) * ap + c * aq;
        }
        for (std::size_t j = 0; j < N; ++j) {
          const cplx vp = v(j, p), vq = v(j, q);
          v(j, p) = c * vp + s * std::conj(phase) * vq;
          v(j, q) = -s * phase * vp + c * vq;
        }
      }
    }
  }

  std::array<std::size_t, N> idx{};
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermEig<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(idx[k], idx[k]).real();
    for (std::size_t j = 0; j < N; ++j) out.vectors(j, k) = v(j, idx[k]);
  }
  return out;
}

/// Eigenvalues only, sorted descending.
template <std::size_t N>
std::array<double, N> herm_eigvals(const Mat<N>& h, double tol = 1e-9) {
  return herm_eig(h, tol).values;
}

/// Hermitian PSD square root: R with R*R = H. Eigenvalues in [-tol, 0) are
/// treated as round-off and clamped to zero; anything below -tol is rejected.
template <std::size_t N>
Mat<N> psd_sqrt(const Mat<N>& h, double tol = 1e-10) {
  const HermEig<N> eig = herm_eig(h);
  std::array<double, N> root{};
  for (std::size_t k = 0; k < N; ++k) {
    if (eig.values[k] < -tol)
      throw std::domain_error("psd_sqrt: eigenvalue " + std::to_string(eig.values[k]) +
                              " below -tol, matrix is not PSD");
    root[k] = std::sqrt(std::max(0.0, eig.values[k]));
  }
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < N; ++k)
        s += eig.vectors(i, k) * root[k] * std::conj(eig.vectors(j, k));
      r(i, j) = s;
    }
  return r;
}

}  // namespace gwl
