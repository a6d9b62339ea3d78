#pragma once

// Uniform access to the two arithmetic paths: exact (ComplexD, IBetaPoly)
// and double-precision complex.

#include "bezier_ifs/dyadic.hpp"
#include "bezier_ifs/ibeta_poly.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <type_traits>

namespace bezier_ifs {

using Complex = std::complex<double>;

template <class S>
inline constexpr bool is_exact_v =
    std::is_same_v<S, ComplexD> || std::is_same_v<S, IBetaPoly> || std::is_same_v<S, Dyadic> ||
    std::is_same_v<S, BigInt> || std::is_integral_v<S>;

template <class S>
S from_int(std::int64_t v) {
  if constexpr (std::is_same_v<S, Complex>) {
    return Complex(static_cast<double>(v), 0.0);
  } else {
    return S(v);
  }
}

/// Exact equality for exact scalars, |a - b| <= tol otherwise.
template <class S>
bool scalar_close(const S& a, const S& b, double tol) {
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    return std::abs(a - b) <= tol;
  }
}

inline bool scalar_is_zero(const Complex& z) { return z == 0.0; }
inline bool scalar_is_zero(const ComplexD& z) { return z.is_zero(); }

inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(const ComplexD& z) { return std::abs(z.to_complex()); }

/// Pivot threshold for the double path.
inline constexpr double kPivotTolerance = 1e-12;

inline bool invertible(const Complex& z) { return std::abs(z) > kPivotTolerance; }
inline bool invertible(const ComplexD& z) { return z.is_unit(); }

inline Complex reciprocal(const Complex& z) { return 1.0 / z; }
inline ComplexD reciprocal(const ComplexD& z) { return z.inverse(); }

}  // namespace bezier_ifs
