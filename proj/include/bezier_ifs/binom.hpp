#pragma once

#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/scalar.hpp"

#include <cstdint>
#include <string>

namespace bezier_ifs {

/// Generalized binomial coefficient on all of Z x Z: zero for k < 0, the
/// falling-factorial formula n(n-1)...(n-k+1)/k! otherwise. For n >= 0 this
/// is the usual coefficient (zero when k > n), and binom(0, i-j) is the
/// Kronecker delta. Results must fit in 64 bits.
std::int64_t binom(std::int64_t n, std::int64_t k);

/// Integer power of a ring element by repeated squaring.
template <class S>
S ipow(S base, unsigned e) {
  S acc = from_int<S>(1);
  while (e != 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return acc;
}

/// Bernstein basis polynomial B^n_j(t) = binom(n,j) t^j (1-t)^(n-j).
template <class S>
S bernstein(int n, int j, const S& t) {
  if (n < 0 || j < 0 || j > n) {
    throw DomainError("bernstein: need 0 <= j <= n, got n=" + std::to_string(n) +
                      " j=" + std::to_string(j));
  }
  const S one_minus_t = from_int<S>(1) - t;
  return from_int<S>(binom(n, j)) * ipow(t, static_cast<unsigned>(j)) *
         ipow(one_minus_t, static_cast<unsigned>(n - j));
}

}  // namespace bezier_ifs
