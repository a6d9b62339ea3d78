#pragma once

#include "bezier_ifs/digits.hpp"
#include "bezier_ifs/dyadic.hpp"

#include <cstddef>

namespace bezier_ifs {

/// Truncation depth for the double path; the tail is below 2^-52.
inline constexpr int kTakagiDepth = 52;

/// Distance to the nearest integer.
double sigma(double x);
Dyadic sigma(const Dyadic& x);

/// T(x) = sum_{n>=0} sigma(2^n x) / 2^n on [0, 1], truncated after `depth`
/// terms (error <= 2^-depth).
double takagi(double x, int depth = kTakagiDepth);
/// Exact: for x = k / 2^e the series stops after e terms.
Dyadic takagi(const Dyadic& x);

/// T(x) rebuilt digit by digit from T(r_{k-1} + 2^-k) - T(r_{k-1}) = (k - 2u_{k-1}) / 2^k.
Dyadic takagi_by_increments(const Dyadic& x);

/// Both sides of T(r_n + 2^-m) - T(r_n) = (m - 2u_n) / 2^m, computed
/// independently.
struct IncrementIdentity {
  Dyadic lhs;  ///< from exact Takagi values
  Dyadic rhs;  ///< from r_n, u_n
};

/// Throws DomainError for m < n and IdentityViolation when the sides differ.
IncrementIdentity tak1_increment(const DigitSeq& d, std::size_t n, std::size_t m);

}  // namespace bezier_ifs
