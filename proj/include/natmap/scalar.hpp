#pragma once

#include <cmath>
#include <complex>

#include "natmap/quaternion.hpp"

namespace natmap {

/// Uniform interface over the two base algebras.  Vectors are right modules:
/// scalars multiply components on the right, matrices act on the left.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<std::complex<double>> {
  using Scalar = std::complex<double>;
  static constexpr int kRealDim = 2;
  static constexpr const char* kKindName = "complex";

  static Scalar conj(const Scalar& s) { return std::conj(s); }
  static double re(const Scalar& s) { return s.real(); }
  static double abs2(const Scalar& s) { return std::norm(s); }
  static double abs(const Scalar& s) { return std::abs(s); }
  static Scalar from_real(double r) { return {r, 0.0}; }
  static Scalar inverse(const Scalar& s) { return std::conj(s) / std::norm(s); }
  static Scalar zero() { return {0.0, 0.0}; }
  static Scalar one() { return {1.0, 0.0}; }
  /// Imaginary units; index in [0, kRealDim - 2].
  static Scalar unit(int) { return {0.0, 1.0}; }
  static void components(const Scalar& s, double* out) {
    out[0] = s.real();
    out[1] = s.imag();
  }
  static Scalar from_components(const double* c) { return {c[0], c[1]}; }
};

template <>
struct ScalarOps<Quaternion> {
  using Scalar = Quaternion;
  static constexpr int kRealDim = 4;
  static constexpr const char* kKindName = "quaternionic";

  static Scalar conj(const Scalar& s) { return s.conj(); }
  static double re(const Scalar& s) { return s.w; }
  static double abs2(const Scalar& s) { return s.norm_sq(); }
  static double abs(const Scalar& s) { return s.norm(); }
  static Scalar from_real(double r) { return Scalar(r); }
  static Scalar inverse(const Scalar& s) { return s.inverse(); }
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1.0); }
  static Scalar unit(int i) {
    switch (i) {
      case 0:
        return {0.0, 1.0, 0.0, 0.0};
      case 1:
        return {0.0, 0.0, 1.0, 0.0};
      default:
        return {0.0, 0.0, 0.0, 1.0};
    }
  }
  static void components(const Scalar& s, double* out) {
    out[0] = s.w;
    out[1] = s.x;
    out[2] = s.y;
    out[3] = s.z;
  }
  static Scalar from_components(const double* c) { return {c[0], c[1], c[2], c[3]}; }
};

using Complexd = std::complex<double>;

/// Unit scalar aligning c to the positive real axis: c * phase_align(c) = |c|.
template <class S>
S phase_align(const S& c) {
  using Ops = ScalarOps<S>;
  const double a = Ops::abs(c);
  if (a < 1e-300) return Ops::one();
  return Ops::conj(c) / a;
}

}  // namespace natmap
