#pragma once

// Identity checks shared by the `verify` command and the acceptance suite.
// Each check returns a named pass/fail record instead of throwing.

#include "bezier_ifs/dyadic.hpp"
#include "bezier_ifs/scalar.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace bezier_ifs {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Negative control: corrupt one matrix entry (or orbit coefficient) before
/// the corresponding identity is checked.
enum class Perturb { None, L, R, M0, M1, Z };
Perturb parse_perturb(const std::string& name);
std::string to_string(Perturb p);

/// Random Gaussian dyadic k / 2^e + i l / 2^e with e in [1, 8], |k|, |l| <= 2^(e+1).
ComplexD random_dyadic_t(std::mt19937_64& rng);
/// Uniform on the hyperbolic lens |t| < 1, |1 - t| < 1 (rejection sampling).
Complex random_complex_t(std::mt19937_64& rng);

/// Sinv L(t) S = diag(t^i) and Sinv R(t) S = closed-form T, for 1 <= n <= n_max.
/// The double path also checks the double-sum form; tol is ignored on the
/// exact path.
CheckResult check_triangular_forms(int n_max, std::span<const ComplexD> ts, Perturb perturb = Perturb::None);
CheckResult check_triangular_forms(int n_max, std::span<const Complex> ts, double tol,
                                   Perturb perturb = Perturb::None);

/// Row recurrence, degree step and Pascal step of T(n) for 1 <= n <= n_max.
CheckResult check_t_recurrences(int n_max, std::span<const ComplexD> ts);
CheckResult check_t_recurrences(int n_max, std::span<const Complex> ts, double tol);

/// Type IV fixed points (1, 0, ..., 0), (C(n, i))_i and the common point
/// M0 z1* = M1 z0* = (C(n, i) t^i)_i for 1 <= n <= n_max.
CheckResult check_type_iv_witnesses(int n_max, std::span<const ComplexD> ts, Perturb perturb = Perturb::None);
CheckResult check_type_iv_witnesses(int n_max, std::span<const Complex> ts, double tol,
                                    Perturb perturb = Perturb::None);

/// z_poly(d, n) equals the explicit word product orbit for all 2^n words.
CheckResult check_orbit_word_product(int n, Perturb perturb = Perturb::None);

/// |a_{k,n}| < 2^(k+1) for every k, exhaustively over words of length <= n_max
/// and over `random_words` random words of length `random_length`.
CheckResult check_coefficient_bound(int n_max, int random_words, int random_length, std::mt19937_64& rng);

/// T(r_n + 2^-m) - T(r_n) = (m - 2 u_n) / 2^m for n <= m <= m_max, all words of length n.
CheckResult check_takagi_increments(int m_max);

/// a_{1,n} = 2 T(a_{0,n}) exhaustively for word length <= n_max, and for
/// `random_words` random words of length `random_length`.
CheckResult check_a1_takagi(int n_max, int random_words, int random_length, std::mt19937_64& rng);

/// degree_m_first_component = m z_poly for m <= m_max, words of length <= len_max.
CheckResult check_degree_m_component(int m_max, int len_max);

/// Order-n samples of v_m at x = m j / 2^grid equal 2 m T(x / m), for m <= m_max.
CheckResult check_vm_samples(int m_max, int grid, int n);

/// Fixed points of the maps built from a control polygon are the first and
/// last rows of P, within tol.
CheckResult check_control_fixed_points(std::span<const Complex> controls, Complex t, double tol);

struct VerifyOptions {
  int n = 6;             ///< matrix degree bound
  int word_length = 10;  ///< orbit word length
  bool exact = true;     ///< exact Z[1/2][i] path; otherwise double with tolerance
  double tol = 1e-11;
  int samples = 20;      ///< random parameters per matrix identity
  std::uint64_t seed = 1;
  Perturb perturb = Perturb::None;
};

std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// `PASS <id>: <detail>` or `FAIL <id>: <detail>`.
std::string format_check(const CheckResult& r);

}  // namespace bezier_ifs
