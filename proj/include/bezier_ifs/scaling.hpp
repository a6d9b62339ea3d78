#pragma once

// Scaled attractors of the two-point system and their distance to the graph
// of the Takagi function.

#include "bezier_ifs/digits.hpp"
#include "bezier_ifs/ibeta_poly.hpp"
#include "bezier_ifs/ifs.hpp"
#include "bezier_ifs/point_cloud.hpp"

#include <cstddef>
#include <vector>

namespace bezier_ifs {

/// Re z + i beta Im z.
Complex scale_g(Complex z, double beta);
/// alpha Re z + i beta Im z.
Complex scale_g(Complex z, double alpha, double beta);

/// t = 1/2 + i beta.
inline Complex t_of_beta(double beta) { return {0.5, beta}; }

/// f0(z) = t z and f1(z) = (1 - t) z + t as type I maps on (z, 1).
IfsPair<Complex> two_point_ifs(double beta);

/// The unit interval sampled at k / 64, as homogeneous points (x, 1).
HomogeneousCloud unit_interval_seed();

struct AttractorCloud {
  PointCloud cloud;
  bool subsampled = false;
  std::size_t peak_points = 0;
};

/// g(F^depth(seed), 1 / (2 beta)) for the two-point system. Throws DomainError
/// for beta = 0 and for non-hyperbolic t.
AttractorCloud scaled_attractor(double beta, int depth, std::size_t budget = kDefaultBudget, unsigned threads = 0);

/// x + i T(x) at x = k / 2^grid, k = 0..2^grid.
PointCloud takagi_graph(int grid);

/// 4 beta / (1 - 4 beta^2); NaN unless |beta| < 1/2.
double takagi_envelope(double beta);

struct ConvergenceRow {
  double beta = 0.0;
  int m = 1;
  int depth = 0;
  int grid = 0;
  double d_H = 0.0;        ///< NaN when the attractor could not be formed
  double envelope = 0.0;   ///< NaN when undefined
  double allowance = 0.0;  ///< diam * rho^depth + 2 * 2^-grid
  bool envelope_defined = false;
  bool pass = false;       ///< d_H <= envelope + allowance
  std::size_t points = 0;
  bool subsampled = false;
};

struct SweepOptions {
  int depth = 15;
  int grid = 12;
  std::size_t budget = kDefaultBudget;
  unsigned threads = 0;
};

/// One row per beta, sorted ascending. Betas outside (0, 1/2) produce rows
/// with envelope_defined = false and pass = false.
std::vector<ConvergenceRow> convergence_sweep(std::vector<double> betas, const SweepOptions& options = {});

/// Image of (1, 0, ..., 0) under M^(d_1) ... M^(d_n) of the degree-m type IV
/// system with t = 1/2 + i beta; returns the first affine component. It
/// evolves under x -> t x and x -> (1 - t) x + m t.
IBetaPoly degree_m_first_component(int m, const DigitSeq& word, std::size_t n);

/// The degree-m type IV pair at t = 1/2 + i beta.
IfsPair<Complex> degree_m_ifs(int m, double beta);

/// g(first components of F^depth(seed), 1/m, 1/(2 m beta)), seeded with 65
/// points on the segment from (1, 0, ..., 0) to (1, C(m,1), ..., C(m,m)).
AttractorCloud degree_m_scaled_attractor(int m, double beta, int depth, std::size_t budget = kDefaultBudget,
                                         unsigned threads = 0);

/// convergence_sweep for the degree-m system; m = 1 is convergence_sweep.
std::vector<ConvergenceRow> degree_m_sweep(int m, std::vector<double> betas, const SweepOptions& options = {});

}  // namespace bezier_ifs
