#include "bezier_ifs/scaling.hpp"

#include "bezier_ifs/decasteljau.hpp"
#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/metrics.hpp"
#include "bezier_ifs/parallel.hpp"
#include "bezier_ifs/takagi.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>

namespace bezier_ifs {

Complex scale_g(Complex z, double beta) { return {z.real(), beta * z.imag()}; }

Complex scale_g(Complex z, double alpha, double beta) { return {alpha * z.real(), beta * z.imag()}; }

IfsPair<Complex> two_point_ifs(double beta) {
  const Complex t = t_of_beta(beta);
  Matrix<Complex> m0(2, 2);
  Matrix<Complex> m1(2, 2);
  m0(0, 0) = t;
  m0(1, 1) = 1.0;
  m1(0, 0) = 1.0 - t;
  m1(0, 1) = t;
  m1(1, 1) = 1.0;
  return {AffineMapH<Complex>(std::move(m0), Rep::I), AffineMapH<Complex>(std::move(m1), Rep::I), t};
}

HomogeneousCloud unit_interval_seed() {
  HomogeneousCloud seed(2);
  for (int k = 0; k <= 64; ++k) {
    const Complex p[2] = {Complex(k / 64.0, 0.0), Complex(1.0, 0.0)};
    seed.push_back(p);
  }
  return seed;
}

namespace {

void check_beta(double beta) {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  if (beta == 0.0) throw DomainError("beta = 0: the scaling 1/(2 beta) is undefined");
  if (const auto why = hyperbolicity_violation(t_of_beta(beta)); !why.empty()) {
    throw DomainError("beta = " + std::to_string(beta) + " gives a non-hyperbolic system: " + why);
  }
}

AttractorCloud finish(const AttractorResult& r, double alpha, double beta_scale) {
  AttractorCloud out;
  out.cloud.generation = r.projected.generation;
  out.cloud.points.reserve(r.projected.size());
  for (const Complex& z : r.projected.points) out.cloud.points.push_back(scale_g(z, alpha, beta_scale));
  out.subsampled = r.subsampled;
  out.peak_points = r.peak_points;
  return out;
}

}  // namespace

AttractorCloud scaled_attractor(double beta, int depth, std::size_t budget, unsigned threads) {
  check_beta(beta);
  if (depth < 0) throw DomainError("scaled_attractor: negative depth");
  IterateOptions opt;
  opt.budget = budget;
  opt.threads = threads;
  const auto r = iterate_attractor(two_point_ifs(beta), unit_interval_seed(), depth, opt);
  return finish(r, 1.0, 1.0 / (2.0 * beta));
}

PointCloud takagi_graph(int grid) {
  if (grid < 1 || grid > 24) throw DomainError("takagi_graph: grid must be in [1, 24]");
  const std::int64_t count = std::int64_t{1} << grid;
  PointCloud out;
  out.points.reserve(static_cast<std::size_t>(count) + 1);
  for (std::int64_t k = 0; k <= count; ++k) {
    const Dyadic x = Dyadic::ratio(k, static_cast<std::uint32_t>(grid));
    out.points.emplace_back(x.to_double(), takagi(x).to_double());
  }
  return out;
}

double takagi_envelope(double beta) {
  if (!(std::abs(beta) < 0.5)) return std::numeric_limits<double>::quiet_NaN();
  return 4.0 * beta / (1.0 - 4.0 * beta * beta);
}

namespace {

double bbox_diagonal(const PointCloud& c) {
  if (c.empty()) return 0.0;
  double x0 = c.points[0].real(), x1 = x0, y0 = c.points[0].imag(), y1 = y0;
  for (const Complex& p : c.points) {
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  }
  return std::hypot(x1 - x0, y1 - y0);
}

template <class Build>
std::vector<ConvergenceRow> sweep(int m, std::vector<double> betas, const SweepOptions& opt, Build build) {
  if (betas.empty()) throw DomainError("sweep: empty beta list");
  if (opt.depth < 0) throw DomainError("sweep: negative depth");
  std::sort(betas.begin(), betas.end());
  const PointCloud target = takagi_graph(opt.grid);
  const unsigned total = opt.threads == 0 ? default_threads() : opt.threads;
  const unsigned per_row = std::max(1U, total / static_cast<unsigned>(betas.size()));

  auto one_row = [&](double beta) {
    ConvergenceRow row;
    row.beta = beta;
    row.m = m;
    row.depth = opt.depth;
    row.grid = opt.grid;
    row.envelope_defined = beta > 0.0 && beta < 0.5;
    row.envelope = row.envelope_defined ? takagi_envelope(beta) : std::numeric_limits<double>::quiet_NaN();
    row.d_H = std::numeric_limits<double>::quiet_NaN();
    row.allowance = std::numeric_limits<double>::quiet_NaN();
    AttractorCloud a;
    try {
      a = build(beta, per_row);
    } catch (const DomainError&) {
      return row;  // beta = 0 or non-hyperbolic: nothing to measure
    }
    row.points = a.cloud.size();
    row.subsampled = a.subsampled;
    row.d_H = hausdorff(a.cloud, target, per_row).d_H;
    const double rho = std::abs(t_of_beta(beta));
    row.allowance = bbox_diagonal(a.cloud) * std::pow(rho, opt.depth) + 2.0 * std::ldexp(1.0, -opt.grid);
    row.pass = row.envelope_defined && row.d_H <= row.envelope + row.allowance;
    return row;
  };

  std::vector<std::future<ConvergenceRow>> jobs;
  jobs.reserve(betas.size());
  for (double b : betas) jobs.push_back(std::async(std::launch::async, one_row, b));
  std::vector<ConvergenceRow> rows;
  rows.reserve(betas.size());
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

}  // namespace

std::vector<ConvergenceRow> convergence_sweep(std::vector<double> betas, const SweepOptions& options) {
  return sweep(1, std::move(betas), options, [&](double beta, unsigned threads) {
    return scaled_attractor(beta, options.depth, options.budget, threads);
  });
}

IBetaPoly degree_m_first_component(int m, const DigitSeq& word, std::size_t n) {
  if (m < 1) throw DomainError("degree_m_first_component: m must be >= 1");
  const auto maps = type_iv_ifs(m, IBetaPoly::half_plus_ibeta());
  const Matrix<IBetaPoly>* mats[2] = {&maps.M0.matrix(), &maps.M1.matrix()};
  // M^(d_1) (M^(d_2) ( ... (M^(d_n) e_0))): same vector as the word product
  // applied to e_0, at a fraction of the cost.
  std::vector<IBetaPoly> v = type_iv_fixed_point0<IBetaPoly>(m);
  for (std::size_t k = n; k >= 1; --k) v = mul_column(*mats[word.digit(k)], std::span<const IBetaPoly>(v));
  return v[1];
}

IfsPair<Complex> degree_m_ifs(int m, double beta) {
  auto maps = type_iv_ifs(m, t_of_beta(beta));
  return {std::move(maps.M0), std::move(maps.M1), t_of_beta(beta)};
}

AttractorCloud degree_m_scaled_attractor(int m, double beta, int depth, std::size_t budget, unsigned threads) {
  if (m < 1) throw DomainError("degree-m attractor: m must be >= 1");
  check_beta(beta);
  if (depth < 0) throw DomainError("degree-m attractor: negative depth");
  const auto top = type_iv_fixed_point1<Complex>(m);
  HomogeneousCloud seed(static_cast<std::size_t>(m) + 1);
  std::vector<Complex> p(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= 64; ++k) {
    p[0] = 1.0;
    for (int i = 1; i <= m; ++i) p[i] = top[i] * (k / 64.0);
    seed.push_back(p);
  }
  IterateOptions opt;
  opt.budget = budget;
  opt.threads = threads;
  const auto r = iterate_attractor(degree_m_ifs(m, beta), seed, depth, opt);
  return finish(r, 1.0 / m, 1.0 / (2.0 * m * beta));
}

std::vector<ConvergenceRow> degree_m_sweep(int m, std::vector<double> betas, const SweepOptions& options) {
  if (m < 1) throw DomainError("degree_m_sweep: m must be >= 1");
  if (m == 1) return convergence_sweep(std::move(betas), options);
  return sweep(m, std::move(betas), options, [&](double beta, unsigned threads) {
    return degree_m_scaled_attractor(m, beta, options.depth, options.budget, threads);
  });
}

}  // namespace bezier_ifs
