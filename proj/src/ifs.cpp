#include "bezier_ifs/ifs.hpp"

#include "bezier_ifs/parallel.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

namespace bezier_ifs {

bool is_hyperbolic(Complex t) { return hyperbolicity_violation(t).empty(); }

std::string hyperbolicity_violation(Complex t) {
  if (!(std::abs(t) < 1.0)) return "|t| < 1 violated (open disc around 0)";
  if (!(std::abs(1.0 - t) < 1.0)) return "|1 - t| < 1 violated (open disc around 1)";
  return {};
}

double joint_spectral_radius(Complex t) { return std::max(std::abs(t), std::abs(1.0 - t)); }

double spectral_radius(const Matrix<Complex>& m) {
  if (m.rows() != m.cols()) throw DomainError("spectral_radius: non-square matrix");
  if (m.rows() == 0) return 0.0;
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(e, false);
  if (solver.info() != Eigen::Success) throw DomainError("spectral_radius: eigenvalue iteration failed");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

void jsr_descend(const Matrix<Complex>& prefix, int len, int maxlen, const Matrix<Complex>* letters,
                 double& best) {
  best = std::max(best, std::pow(spectral_radius(prefix), 1.0 / len));
  if (len == maxlen) return;
  for (int d = 0; d < 2; ++d) jsr_descend(prefix * letters[d], len + 1, maxlen, letters, best);
}

}  // namespace

double jsr_empirical(const AffineMapH<Complex>& m0, const AffineMapH<Complex>& m1, int maxlen,
                     std::uint64_t word_budget) {
  if (m0.dim() != m1.dim()) throw DomainError("jsr_empirical: maps differ in dimension");
  if (maxlen < 1) throw DomainError("jsr_empirical: maxlen must be >= 1");
  if (maxlen >= 62 || (std::uint64_t{1} << (maxlen + 1)) - 2 > word_budget) {
    throw ResourceError("jsr_empirical: 2^" + std::to_string(maxlen + 1) + " - 2 words exceed the budget of " +
                        std::to_string(word_budget));
  }
  const Matrix<Complex> letters[2] = {m0.linear_part(), m1.linear_part()};
  double best = 0.0;
  for (int d = 0; d < 2; ++d) jsr_descend(letters[d], 1, maxlen, letters, best);
  return best;
}

std::vector<Complex> fixed_point(const AffineMapH<Complex>& f) {
  const Matrix<Complex> a = f.linear_part();
  if (spectral_radius(a) >= 1.0) throw DomainError("fixed_point: linear part is not contractive");
  const std::size_t n = f.dim();
  Matrix<Complex> system = Matrix<Complex>::identity(n) - a;
  const auto b = f.translation();
  const auto y = mul_column(inverse(system), std::span<const Complex>(b));
  std::vector<Complex> z;
  z.reserve(n + 1);
  const std::size_t h = f.homogeneous_index();
  for (std::size_t i = 0, k = 0; i <= n; ++i) z.push_back(i == h ? Complex(1.0) : y[k++]);
  return z;
}

PointCloud project(const HomogeneousCloud& states, Rep rep) {
  PointCloud out;
  const std::size_t idx = projection_index(rep);
  out.points.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) out.points.push_back(states[i][idx]);
  return out;
}

namespace {

std::int64_t snap(double v, int bits) {
  const double scaled = std::ldexp(v, bits);
  if (!(std::abs(scaled) < 9.0e18)) throw ResourceError("point coordinate too large for the snap grid");
  return std::llround(scaled);
}

// Sorts by snapped coordinates, drops snap-duplicates, thins to the budget.
HomogeneousCloud dedup_and_cap(const HomogeneousCloud& in, const IterateOptions& opt, bool& subsampled,
                               std::size_t& peak) {
  const std::size_t n = in.size();
  const std::size_t w = in.width();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto compare = [&](std::size_t a, std::size_t b) {
    const auto pa = in[a];
    const auto pb = in[b];
    for (std::size_t k = 0; k < w; ++k) {
      const std::int64_t ra = snap(pa[k].real(), opt.snap_bits);
      const std::int64_t rb = snap(pb[k].real(), opt.snap_bits);
      if (ra != rb) return ra < rb;
      const std::int64_t ia = snap(pa[k].imag(), opt.snap_bits);
      const std::int64_t ib = snap(pb[k].imag(), opt.snap_bits);
      if (ia != ib) return ia < ib;
    }
    return a < b;
  };
  auto same = [&](std::size_t a, std::size_t b) {
    const auto pa = in[a];
    const auto pb = in[b];
    for (std::size_t k = 0; k < w; ++k) {
      if (snap(pa[k].real(), opt.snap_bits) != snap(pb[k].real(), opt.snap_bits)) return false;
      if (snap(pa[k].imag(), opt.snap_bits) != snap(pb[k].imag(), opt.snap_bits)) return false;
    }
    return true;
  };
  std::sort(order.begin(), order.end(), compare);
  order.erase(std::unique(order.begin(), order.end(), same), order.end());
  peak = std::max(peak, order.size());
  std::size_t stride = 1;
  if (order.size() > opt.budget) {
    subsampled = true;
    stride = (order.size() + opt.budget - 1) / opt.budget;
  }
  HomogeneousCloud out(w);
  out.reserve((order.size() + stride - 1) / stride);
  for (std::size_t k = 0; k < order.size(); k += stride) out.push_back(in[order[k]]);
  return out;
}

}  // namespace

AttractorResult iterate_attractor(const IfsPair<Complex>& ifs, const HomogeneousCloud& seed, int depth,
                                  const IterateOptions& options) {
  if (const auto why = hyperbolicity_violation(ifs.t); !why.empty()) {
    throw DomainError("iterate_attractor: IFS is not hyperbolic: " + why);
  }
  if (depth < 0) throw DomainError("iterate_attractor: negative depth");
  if (options.budget < 1) throw DomainError("iterate_attractor: budget must be >= 1");
  if (seed.empty()) throw DomainError("iterate_attractor: empty seed");
  const std::size_t w = ifs.dim() + 1;
  if (seed.width() != w) throw DomainError("iterate_attractor: seed dimension does not match the IFS");
  const std::size_t h = ifs.f0.homogeneous_index();
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (std::abs(seed[i][h] - 1.0) > kHomogeneousTolerance) {
      throw DomainError("iterate_attractor: seed point without unit homogeneous coordinate");
    }
  }

  AttractorResult result;
  result.states = seed;
  result.peak_points = seed.size();
  const Matrix<Complex> forms[2] = {ifs.f0.column_form(), ifs.f1.column_form()};
  const unsigned threads = options.threads == 0 ? default_threads() : options.threads;

  for (int gen = 0; gen < depth; ++gen) {
    const HomogeneousCloud& cur = result.states;
    const std::size_t n = cur.size();
    HomogeneousCloud next(w);
    next.resize(2 * n);
    parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto x = cur[i];
        for (int d = 0; d < 2; ++d) {
          auto y = next[d * n + i];
          const Matrix<Complex>& m = forms[d];
          for (std::size_t r = 0; r < w; ++r) {
            Complex acc(0.0, 0.0);
            for (std::size_t c = 0; c < w; ++c) acc += m(r, c) * x[c];
            y[r] = acc;
          }
          if (std::abs(y[h] - 1.0) > kHomogeneousTolerance) {
            throw DomainError("homogeneous coordinate drifted from 1 during iteration");
          }
          y[h] = 1.0;
        }
      }
    });
    result.states = dedup_and_cap(next, options, result.subsampled, result.peak_points);
  }
  result.projected = project(result.states, ifs.rep());
  result.projected.generation = depth;
  return result;
}

AttractorResult control_attractor(std::span<const Complex> controls, Complex t, int depth,
                                  const IterateOptions& options) {
  if (const auto why = hyperbolicity_violation(t); !why.empty()) {
    throw DomainError("t = (" + std::to_string(t.real()) + ", " + std::to_string(t.imag()) +
                      ") is not hyperbolic: " + why);
  }
  const auto ctl = build_ifs_from_controls(controls, t);
  const IfsPair<Complex> ifs(ctl.maps.M0, ctl.maps.M1, t);
  const std::size_t n = controls.size() - 1;
  HomogeneousCloud seed(n + 1);
  seed.push_back(ctl.P.row(0));
  seed.push_back(ctl.P.row(n));
  return iterate_attractor(ifs, seed, depth, options);
}

PointCloud chaos_game(const IfsPair<Complex>& ifs, std::span<const Complex> start, std::size_t iterations,
                      std::uint64_t rng_seed, std::size_t burn_in) {
  if (!is_hyperbolic(ifs.t)) throw DomainError("chaos_game: IFS is not hyperbolic");
  std::mt19937_64 rng(rng_seed);
  std::vector<Complex> x(start.begin(), start.end());
  PointCloud out;
  out.points.reserve(iterations);
  const std::size_t idx = projection_index(ifs.rep());
  for (std::size_t k = 0; k < burn_in + iterations; ++k) {
    x = ifs.map(static_cast<int>(rng() & 1U)).apply(std::span<const Complex>(x));
    if (k >= burn_in) out.points.push_back(x[idx]);
  }
  return out;
}

}  // namespace bezier_ifs
