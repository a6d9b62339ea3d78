#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/metrics.hpp"
#include "bezier_ifs/orbits.hpp"
#include "bezier_ifs/scaling.hpp"
#include "bezier_ifs/takagi.hpp"

#include "doctest.h"

#include <cmath>

using namespace bezier_ifs;

namespace {

std::vector<std::uint8_t> bits_of(std::uint32_t w, int n) {
  std::vector<std::uint8_t> bits(n);
  for (int k = 0; k < n; ++k) bits[k] = (w >> k) & 1U;
  return bits;
}

}  // namespace

TEST_CASE("scaling map") {
  CHECK(scale_g({1.0, 2.0}, 0.5) == Complex(1.0, 1.0));
  CHECK(scale_g({0.7, 0.0}, 0.01) == Complex(0.7, 0.0));
  CHECK(scale_g({0.7, -0.3}, 1.0) == Complex(0.7, -0.3));
  CHECK(scale_g({3.0, 2.0}, 1.0 / 3.0, 0.5) == Complex(1.0, 1.0));
  CHECK(t_of_beta(0.25) == Complex(0.5, 0.25));
}

TEST_CASE("Takagi graph") {
  const auto g1 = takagi_graph(1);
  REQUIRE(g1.size() == 3);
  CHECK(g1.points[0] == Complex(0.0, 0.0));
  CHECK(g1.points[1] == Complex(0.5, 0.5));
  CHECK(g1.points[2] == Complex(1.0, 0.0));
  const auto g = takagi_graph(10);
  CHECK(g.size() == 1025);
  for (const Complex& z : g.points) {
    CHECK(z.imag() >= 0.0);
    CHECK(z.imag() <= 2.0 / 3.0);
  }
}

TEST_CASE("envelope") {
  CHECK(takagi_envelope(0.125) == doctest::Approx(0.5 / 0.9375).epsilon(1e-15));
  CHECK(std::isnan(takagi_envelope(0.5)));
  CHECK(std::isnan(takagi_envelope(0.7)));
}

TEST_CASE("scaled attractor") {
  CHECK_THROWS_AS(scaled_attractor(0.0, 5), DomainError);
  CHECK_THROWS_AS(scaled_attractor(0.9, 5), DomainError);

  // Re(t z) = Re(z) / 2 - beta Im(z), so the cloud pokes slightly past [0, 1].
  const auto a = scaled_attractor(0.125, 10);
  for (const Complex& z : a.cloud.points) {
    CHECK(z.real() >= -0.05);
    CHECK(z.real() <= 1.05);
    CHECK(z.imag() >= -0.05);
    CHECK(z.imag() <= 0.75);
  }
  // Real points of the seed are fixed by the scaling.
  const auto a0 = scaled_attractor(0.125, 0);
  CHECK(a0.cloud.size() == 65);
  for (const Complex& z : a0.cloud.points) CHECK(z.imag() == 0.0);
}

TEST_CASE("the sign of beta does not change the scaled cloud") {
  // The unscaled attractor for -beta is the conjugate one, and g with 1/(2 beta) undoes the flip.
  const auto p = scaled_attractor(0.125, 10);
  const auto m = scaled_attractor(-0.125, 10);
  CHECK(hausdorff(p.cloud, m.cloud).d_H <= 1e-9);
}

TEST_CASE("the two-point maps commute with conjugation") {
  const auto ip = two_point_ifs(0.2);
  const auto im = two_point_ifs(-0.2);
  const std::vector<Complex> z = {{0.3, 0.1}, 1.0};
  const std::vector<Complex> zc = {{0.3, -0.1}, 1.0};
  for (int d = 0; d <= 1; ++d) {
    const auto a = ip.map(d).apply(z);
    const auto b = im.map(d).apply(zc);
    CHECK(std::abs(a[0] - std::conj(b[0])) < 1e-15);
  }
}

TEST_CASE("order beta^2 residual of the scaled orbit") {
  const int n = 12;
  for (double beta : {0.125, 0.0625, 0.03125}) {
    double worst = 0.0;
    for (std::uint32_t w = 0; w < (1U << n); ++w) {
      const DigitSeq d(bits_of(w, n));
      const Complex z = z_poly(d, n).eval(beta);
      const double r = d.r(n).to_double();
      const Complex want(r, takagi(r));
      worst = std::max(worst, std::abs(scale_g(z, 1.0 / (2.0 * beta)) - want));
    }
    CHECK(worst <= 8.0 * beta * beta);
  }
}

TEST_CASE("convergence sweep") {
  SweepOptions opt;
  opt.depth = 10;
  opt.grid = 8;
  const auto rows = convergence_sweep({0.25, 0.125, 0.75}, opt);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].beta == 0.125);
  CHECK(rows[1].beta == 0.25);
  CHECK(rows[0].envelope_defined);
  CHECK(rows[0].pass);
  CHECK(rows[0].d_H < rows[1].d_H);
  CHECK(rows[0].allowance > 2.0 * std::ldexp(1.0, -8));
  CHECK_FALSE(rows[2].envelope_defined);
  CHECK_FALSE(rows[2].pass);
}

TEST_CASE("degree-m first component") {
  const IBetaPoly t = IBetaPoly::half_plus_ibeta();
  CHECK(degree_m_first_component(3, DigitSeq::parse("1"), 1) == IBetaPoly(3) * t);
  for (int m = 1; m <= 3; ++m) {
    for (std::uint32_t w = 0; w < 64; ++w) {
      const DigitSeq d(bits_of(w, 6));
      const IBetaPoly c = degree_m_first_component(m, d, 6);
      CHECK(c == IBetaPoly(m) * z_poly(d, 6));
      CHECK(c.coeff(0) == Dyadic(m) * d.r(6));
    }
  }
}

TEST_CASE("degree-m scaled attractor") {
  const auto a = degree_m_scaled_attractor(2, 0.0625, 10);
  for (const Complex& z : a.cloud.points) {
    CHECK(z.real() >= -0.05);
    CHECK(z.real() <= 1.05);
  }
  SweepOptions opt;
  opt.depth = 10;
  opt.grid = 8;
  const auto one = degree_m_sweep(1, {0.125}, opt);
  const auto base = convergence_sweep({0.125}, opt);
  CHECK(one[0].d_H == base[0].d_H);
  const auto two = degree_m_sweep(2, {0.125, 0.0625}, opt);
  CHECK(two[0].m == 2);
  CHECK(two[0].d_H < two[1].d_H);
}
