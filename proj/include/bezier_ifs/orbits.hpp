#pragma once

// Symbolic addresses and the exact orbit polynomials Z_n^(d)(beta) of the
// two-point system f0(z) = t z, f1(z) = (1-t) z + t with t = 1/2 + i beta.

#include "bezier_ifs/digits.hpp"
#include "bezier_ifs/dyadic.hpp"
#include "bezier_ifs/ibeta_poly.hpp"
#include "bezier_ifs/ifs.hpp"
#include "bezier_ifs/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace bezier_ifs {

/// x = sum d_k / 2^k; 1^inf maps to 1. Throws CanonicalizationError for a
/// non-canonical (trailing ones) address.
Dyadic pi(const DigitSeq& d);

/// First n digits of x in [0, 1] under the eventually-zeros convention,
/// followed by 0^inf. x = 1 gives n ones (the truncation of 1^inf).
DigitSeq pi_inverse(double x, std::size_t n);
DigitSeq pi_inverse(const Dyadic& x, std::size_t n);

/// (d_n, d_{n-1}, ..., d_1, 0^inf).
DigitSeq reverse_prefix(const DigitSeq& d, std::size_t n);

struct OrbitState {
  std::vector<std::uint8_t> digits;  ///< d_1..d_n consumed so far
  std::size_t n = 0;
  IBetaPoly Z;   ///< Z_n^(d)
  int u = 0;     ///< number of ones among d_1..d_n
  Dyadic r;      ///< r_n = sum_{k<=n} d_k / 2^k
};

/// W_n = (1-t)^u t^(n+1-u) written in powers of (i beta): the coefficient of
/// (i beta)^m is 2^(m-n-1) sum_k (-1)^k C(u,k) C(n+1-u,m-k).
IBetaPoly w_poly(std::size_t n, int u);

/// Z_{n+1} = Z_n for digit 0, Z_n + W_n for digit 1.
OrbitState z_step(const OrbitState& state, int next_digit);

/// Z_n^(d) by n applications of z_step from Z_0 = 0.
IBetaPoly z_poly(const DigitSeq& d, std::size_t n);

/// f0(z) = t z, f1(z) = (1-t) z + t over IBetaPoly, as type I matrices.
IfsPair<IBetaPoly> two_point_ifs_symbolic();

/// First component of M^(d_1) ... M^(d_n) (0, 1)^T, the word product formed
/// explicitly; an independent route to z_poly.
IBetaPoly z_word_product(const DigitSeq& d, std::size_t n);

/// Coefficient a_{k,n} of (i beta)^k in Z_n^(d).
Dyadic a_coeff(const DigitSeq& d, std::size_t k, std::size_t n);

/// Bound on |a_{k,n+p} - a_{k,n}| for every p: 2^k sum_{j>=n} C(j+1,k) / 2^(j+1).
double a_coeff_tail_bound(std::size_t k, std::size_t n);

/// Order-n approximation of v(alpha) = i a_1(alpha); equals 2 i T(alpha) for
/// dyadic alpha with at most n digits. At alpha = 1 the address 1^inf is the
/// fixed point of f1 (Z = 1 identically) and v(1) = 0.
Complex vector_field_v(double alpha, std::size_t n);
/// Exact imaginary part of vector_field_v.
Dyadic vector_field_v_exact(const Dyadic& alpha, std::size_t n);

/// (alpha_j, a_{k,n}(alpha_j)) on alpha_j = j / 2^grid, j = 0..2^grid.
std::vector<std::pair<Dyadic, Dyadic>> a_k_samples(std::size_t k, int grid, std::size_t n);

/// The scalar pair x -> t x, x -> (1-t) x + m t applied along d(n) to 0.
IBetaPoly degree_m_scalar_orbit(int m, const DigitSeq& d, std::size_t n);

/// Order-n approximation of v_m(x) = 2 m i T(x / m) on [0, m], computed from
/// the scalar maps above at the address of x / m.
Complex vector_field_vm(double x, int m, std::size_t n);
/// Exact imaginary part of v_m at x = m * alpha for dyadic alpha in [0, 1].
Dyadic vector_field_vm_exact(const Dyadic& alpha, int m, std::size_t n);

}  // namespace bezier_ifs
