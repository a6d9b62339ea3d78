#pragma once

// Two-map affine IFS: hyperbolicity, spectral radii, fixed points, the
// connectedness witness, and attractor approximation by set iteration.

#include "bezier_ifs/affine.hpp"
#include "bezier_ifs/binom.hpp"
#include "bezier_ifs/decasteljau.hpp"
#include "bezier_ifs/digits.hpp"
#include "bezier_ifs/point_cloud.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bezier_ifs {

template <class S>
struct IfsPair {
  AffineMapH<S> f0;
  AffineMapH<S> f1;
  S t{};

  IfsPair() = default;
  IfsPair(AffineMapH<S> a, AffineMapH<S> b, S param) : f0(std::move(a)), f1(std::move(b)), t(std::move(param)) {
    if (f0.dim() != f1.dim()) throw ConstructionError("IFS maps differ in dimension");
    if (f0.rep() != f1.rep()) throw ConstructionError("IFS maps differ in representation type");
  }

  std::size_t dim() const { return f0.dim(); }
  Rep rep() const { return f0.rep(); }
  const AffineMapH<S>& map(int digit) const { return digit == 0 ? f0 : f1; }
};

/// |t| < 1 and |1 - t| < 1, both strict.
bool is_hyperbolic(Complex t);
/// Names the violated disc, or an empty string when t is hyperbolic.
std::string hyperbolicity_violation(Complex t);

/// max(|t|, |1 - t|): the joint spectral radius of the de Casteljau pair.
double joint_spectral_radius(Complex t);

/// Largest eigenvalue modulus of a square complex matrix.
double spectral_radius(const Matrix<Complex>& m);

/// Upper cap on the number of words jsr_empirical may enumerate.
inline constexpr std::uint64_t kDefaultWordBudget = std::uint64_t{1} << 22;

/// max over words w with |w| <= maxlen of rho(A_w)^(1/|w|) on the linear parts.
double jsr_empirical(const AffineMapH<Complex>& m0, const AffineMapH<Complex>& m1, int maxlen,
                     std::uint64_t word_budget = kDefaultWordBudget);

/// Unique fixed point in the map's homogeneous coordinates. Throws
/// DomainError when the linear part has spectral radius >= 1.
std::vector<Complex> fixed_point(const AffineMapH<Complex>& f);

template <class S>
bool is_fixed_point(const AffineMapH<S>& f, std::span<const S> z, double tol = 1e-12) {
  const auto image = f.apply(z);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!scalar_close(image[i], z[i], tol)) return false;
  return true;
}

/// (1, 0, ..., 0): fixed point of the type IV map M0.
template <class S>
std::vector<S> type_iv_fixed_point0(int n) {
  std::vector<S> z(static_cast<std::size_t>(n) + 1, from_int<S>(0));
  z[0] = from_int<S>(1);
  return z;
}

/// (binom(n,0), ..., binom(n,n)): fixed point of the type IV map M1.
template <class S>
std::vector<S> type_iv_fixed_point1(int n) {
  std::vector<S> z;
  for (int i = 0; i <= n; ++i) z.push_back(from_int<S>(binom(n, i)));
  return z;
}

/// The common point M0 z1* = M1 z0* = (binom(n,i) t^i)_i of f0(A) and f1(A).
/// Both products are evaluated and compared against the closed form;
/// IdentityViolation is thrown if they disagree (exactly, or beyond tol on
/// the double path).
template <class S>
std::vector<S> overlap_point(int n, const S& t, double tol = 1e-12) {
  const auto maps = type_iv_ifs(n, t);
  std::vector<S> expected;
  for (int i = 0; i <= n; ++i)
    expected.push_back(from_int<S>(binom(n, i)) * ipow(t, static_cast<unsigned>(i)));
  const auto z0 = type_iv_fixed_point0<S>(n);
  const auto z1 = type_iv_fixed_point1<S>(n);
  const auto a = maps.M0.apply(std::span<const S>(z1));
  const auto b = maps.M1.apply(std::span<const S>(z0));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!scalar_close(a[i], expected[i], tol) || !scalar_close(b[i], expected[i], tol)) {
      throw IdentityViolation("overlap point M0 z1* = M1 z0* = (binom(n,i) t^i) fails at i=" +
                              std::to_string(i) + " (n=" + std::to_string(n) + ")");
    }
  }
  return expected;
}

/// M^(d_1) M^(d_2) ... M^(d_n) for the given digits.
template <class S>
AffineMapH<S> word_map(const IfsPair<S>& ifs, std::span<const std::uint8_t> word) {
  if (word.empty()) throw DomainError("word_map: empty word");
  Matrix<S> m = ifs.map(word[0]).matrix();
  for (std::size_t k = 1; k < word.size(); ++k) m = m * ifs.map(word[k]).matrix();
  return AffineMapH<S>(std::move(m), ifs.rep(), 0.0);
}

template <class S>
AffineMapH<S> word_map(const IfsPair<S>& ifs, const DigitSeq& word, std::size_t n) {
  const auto digits = word.prefix(n);
  return word_map(ifs, std::span<const std::uint8_t>(digits));
}

/// Default deduplication grid 2^-40.
inline constexpr int kSnapBits = 40;
/// Default point budget 2^22.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 22;

struct IterateOptions {
  std::size_t budget = kDefaultBudget;
  int snap_bits = kSnapBits;
  unsigned threads = 0;  ///< 0 means hardware concurrency
};

struct AttractorResult {
  HomogeneousCloud states;  ///< full homogeneous vectors
  PointCloud projected;     ///< first affine coordinate of each state
  bool subsampled = false;  ///< the budget cap was hit in some generation
  std::size_t peak_points = 0;  ///< largest deduplicated generation before capping
};

/// Index of the first affine (non-homogeneous) coordinate for a layout.
inline std::size_t projection_index(Rep rep) { return homogeneous_first(rep) ? 1 : 0; }

PointCloud project(const HomogeneousCloud& states, Rep rep);

/// F^depth(seed), F(A) = f0(A) u f1(A). Each generation is sorted on the
/// snap grid, deduplicated, and, above the budget, thinned by a uniform
/// stride. Output is identical for any thread count.
AttractorResult iterate_attractor(const IfsPair<Complex>& ifs, const HomogeneousCloud& seed, int depth,
                                  const IterateOptions& options = {});

/// Attractor of the maps P^-1 L(t) P, P^-1 R(t) P built from a control
/// polygon, iterated from the first and last rows of P (the fixed points of
/// f0 and f1). Throws DomainError for non-hyperbolic t.
AttractorResult control_attractor(std::span<const Complex> controls, Complex t, int depth,
                                  const IterateOptions& options = {});

/// Random-order iteration (chaos game) from `start`; cross-check only.
PointCloud chaos_game(const IfsPair<Complex>& ifs, std::span<const Complex> start, std::size_t iterations,
                      std::uint64_t rng_seed, std::size_t burn_in = 64);

}  // namespace bezier_ifs
