#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "natmap/errors.hpp"
#include "natmap/scalar.hpp"

namespace natmap {

template <class S>
using KVec = std::vector<S>;

/// Dense matrix over the base algebra, row major.  Acts on column vectors
/// from the left; right scalar multiples of vectors commute with the action.
template <class S>
struct KMat {
  int rows = 0;
  int cols = 0;
  std::vector<S> a;

  KMat() = default;
  KMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, ScalarOps<S>::zero()) {}

  S& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static KMat identity(int n) {
    KMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<S>::one();
    return m;
  }
};

// ---- vector operations -----------------------------------------------------

template <class S>
KVec<S> kvec_zero(int n) {
  return KVec<S>(static_cast<size_t>(n), ScalarOps<S>::zero());
}

template <class S>
KVec<S> kadd(const KVec<S>& x, const KVec<S>& y) {
  KVec<S> r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

template <class S>
KVec<S> ksub(const KVec<S>& x, const KVec<S>& y) {
  KVec<S> r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

/// Right scalar multiple x * s (component-wise, scalar on the right).
template <class S>
KVec<S> scale_right(const KVec<S>& x, const S& s) {
  KVec<S> r = x;
  for (auto& c : r) c = c * s;
  return r;
}

template <class S>
KVec<S> scale_real(const KVec<S>& x, double s) {
  KVec<S> r = x;
  for (auto& c : r) c = c * ScalarOps<S>::from_real(s);
  return r;
}

/// Indefinite Hermitian form of signature (n-1, 1), conjugate linear in the
/// first argument:  <a,b> = sum_{i<n-1} conj(a_i) b_i  -  conj(a_{n-1}) b_{n-1}.
template <class S>
S herm(const KVec<S>& a, const KVec<S>& b) {
  using Ops = ScalarOps<S>;
  const size_t n = a.size();
  S acc = Ops::zero();
  for (size_t i = 0; i + 1 < n; ++i) acc += Ops::conj(a[i]) * b[i];
  acc -= Ops::conj(a[n - 1]) * b[n - 1];
  return acc;
}

/// Positive definite Euclidean Hermitian product, conjugate linear first.
template <class S>
S eip(const KVec<S>& a, const KVec<S>& b) {
  using Ops = ScalarOps<S>;
  S acc = Ops::zero();
  for (size_t i = 0; i < a.size(); ++i) acc += Ops::conj(a[i]) * b[i];
  return acc;
}

template <class S>
double enorm2(const KVec<S>& a) {
  double acc = 0.0;
  for (const auto& c : a) acc += ScalarOps<S>::abs2(c);
  return acc;
}

template <class S>
double enorm(const KVec<S>& a) {
  return std::sqrt(enorm2(a));
}

// ---- matrix operations -----------------------------------------------------

template <class S>
KVec<S> matvec(const KMat<S>& m, const KVec<S>& x) {
  using Ops = ScalarOps<S>;
  KVec<S> r(static_cast<size_t>(m.rows), Ops::zero());
  for (int i = 0; i < m.rows; ++i) {
    S acc = Ops::zero();
    for (int j = 0; j < m.cols; ++j) acc += m(i, j) * x[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = acc;
  }
  return r;
}

template <class S>
KMat<S> matmul(const KMat<S>& a, const KMat<S>& b) {
  using Ops = ScalarOps<S>;
  KMat<S> r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const S aik = a(i, k);
      for (int j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

/// Conjugate transpose.
template <class S>
KMat<S> adjoint(const KMat<S>& m) {
  KMat<S> r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(j, i) = ScalarOps<S>::conj(m(i, j));
  return r;
}

template <class S>
KMat<S> operator-(const KMat<S>& a, const KMat<S>& b) {
  KMat<S> r = a;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= b.a[i];
  return r;
}

template <class S>
double max_abs(const KMat<S>& m) {
  double r = 0.0;
  for (const auto& c : m.a) r = std::max(r, ScalarOps<S>::abs(c));
  return r;
}

template <class S>
double frob_norm(const KMat<S>& m) {
  double acc = 0.0;
  for (const auto& c : m.a) acc += ScalarOps<S>::abs2(c);
  return std::sqrt(acc);
}

/// Signature matrix diag(1,...,1,-1) applied on the left.
template <class S>
KVec<S> apply_signature(KVec<S> v) {
  v.back() = -v.back();
  return v;
}

/// Right multiply every entry of the matrix by a scalar.  For the complex
/// algebra this stays inside the isometry group; over the quaternions it is
/// only used with +-1.
template <class S>
KMat<S> mat_scale_right(const KMat<S>& m, const S& s) {
  KMat<S> r = m;
  for (auto& c : r.a) c = c * s;
  return r;
}

/// Gram-Schmidt on columns with the Euclidean Hermitian product; right-module
/// convention keeps the triangular coefficients on the right.
template <class S>
KMat<S> gram_schmidt_unitary(KMat<S> m) {
  using Ops = ScalarOps<S>;
  const int n = m.rows;
  for (int j = 0; j < m.cols; ++j) {
    KVec<S> col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = m(i, j);
    for (int l = 0; l < j; ++l) {
      KVec<S> prev(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) prev[static_cast<size_t>(i)] = m(i, l);
      const S c = eip(prev, col);
      for (int i = 0; i < n; ++i)
        col[static_cast<size_t>(i)] -= prev[static_cast<size_t>(i)] * c;
    }
    const double nn = enorm(col);
    if (nn < 1e-12) throw Error("gram_schmidt_unitary: rank deficient input");
    for (int i = 0; i < n; ++i) m(i, j) = col[static_cast<size_t>(i)] * (1.0 / nn);
  }
  return m;
}

}  // namespace natmap
