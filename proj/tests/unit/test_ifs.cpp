#include "bezier_ifs/decasteljau.hpp"
#include "bezier_ifs/ifs.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

using namespace bezier_ifs;

namespace {

IfsPair<Complex> type_iv_pair(int n, Complex t) {
  auto m = type_iv_ifs(n, t);
  return {std::move(m.M0), std::move(m.M1), t};
}

HomogeneousCloud seed_points(std::initializer_list<double> xs) {
  HomogeneousCloud c(2);
  for (double x : xs) {
    const std::vector<Complex> p = {1.0, x};
    c.push_back(p);
  }
  return c;
}

}  // namespace

TEST_CASE("hyperbolicity") {
  CHECK(is_hyperbolic({0.5, 0.0}));
  CHECK_FALSE(is_hyperbolic({0.5, std::sqrt(3.0) / 2.0}));
  CHECK_FALSE(is_hyperbolic({0.0, 0.0}));
  CHECK_FALSE(is_hyperbolic({1.0, 0.0}));
  CHECK(is_hyperbolic({0.5, 0.8}));
  CHECK(hyperbolicity_violation({0.5, 0.1}).empty());
  CHECK_FALSE(hyperbolicity_violation({1.5, 0.0}).empty());
}

TEST_CASE("joint spectral radius") {
  CHECK(joint_spectral_radius({0.5, 0.0}) == 0.5);
  CHECK(joint_spectral_radius({0.5, 0.25}) == doctest::Approx(std::sqrt(5.0) / 4.0).epsilon(1e-12));
  CHECK(joint_spectral_radius({0.1, 0.3}) == doctest::Approx(0.948683).epsilon(1e-6));
}

TEST_CASE("empirical joint spectral radius") {
  const auto p1 = type_iv_pair(1, {0.5, 0.0});
  CHECK(jsr_empirical(p1.f0, p1.f1, 6) == doctest::Approx(0.5).epsilon(1e-12));
  const Complex t(0.4, 0.4);
  const auto p2 = type_iv_pair(2, t);
  CHECK(jsr_empirical(p2.f0, p2.f1, 5) == doctest::Approx(0.721110).epsilon(1e-6));
  const double single = std::max(spectral_radius(p2.f0.linear_part()), spectral_radius(p2.f1.linear_part()));
  CHECK(jsr_empirical(p2.f0, p2.f1, 1) == doctest::Approx(single).epsilon(1e-12));
  CHECK_THROWS_AS(jsr_empirical(p2.f0, p2.f1, 40, 1000), ResourceError);
}

TEST_CASE("fixed points of the type IV maps") {
  const Complex t(0.3, -0.2);
  for (int n = 1; n <= 6; ++n) {
    const auto m = type_iv_ifs(n, t);
    const auto z0 = fixed_point(m.M0);
    const auto z1 = fixed_point(m.M1);
    for (int i = 0; i <= n; ++i) {
      CHECK(std::abs(z0[i] - (i == 0 ? 1.0 : 0.0)) < 1e-12);
      CHECK(std::abs(z1[i] - static_cast<double>(binom(n, i))) < 1e-9);
    }
    CHECK(is_fixed_point<Complex>(m.M0, type_iv_fixed_point0<Complex>(n)));
    CHECK(is_fixed_point<Complex>(m.M1, type_iv_fixed_point1<Complex>(n), 1e-10));
  }
}

TEST_CASE("fixed point of a non-contraction") {
  Matrix<Complex> m = Matrix<Complex>::identity(2);
  m(1, 1) = 1.5;
  CHECK_THROWS_AS(fixed_point(AffineMapH<Complex>(m, Rep::IV)), DomainError);
  m(1, 1) = 0.5;
  const auto z = fixed_point(AffineMapH<Complex>(m, Rep::IV));
  CHECK(std::abs(z[1]) < 1e-15);
}

TEST_CASE("overlap point") {
  const ComplexD t(Dyadic::ratio(3, 3), Dyadic::ratio(-1, 1));
  const auto z = overlap_point(2, t);
  CHECK(z == std::vector<ComplexD>{1, ComplexD(2) * t, t * t});
  const auto half = overlap_point(1, ComplexD(Dyadic::ratio(1, 1)));
  CHECK(half == std::vector<ComplexD>{1, ComplexD(Dyadic::ratio(1, 1))});
  for (int n = 1; n <= 8; ++n) CHECK_NOTHROW(overlap_point(n, t));
  CHECK_NOTHROW(overlap_point(5, Complex(0.4, -0.55), 1e-12));
}

TEST_CASE("word maps compose left to right") {
  const Complex t(0.5, 0.25);
  const auto ifs = type_iv_pair(2, t);
  const std::vector<std::uint8_t> w0 = {0};
  const std::vector<std::uint8_t> w01 = {0, 1};
  CHECK(word_map(ifs, std::span<const std::uint8_t>(w0)).matrix() == ifs.f0.matrix());
  CHECK(word_map(ifs, std::span<const std::uint8_t>(w01)).matrix() == ifs.f0.matrix() * ifs.f1.matrix());
  CHECK_THROWS_AS(word_map(ifs, std::span<const std::uint8_t>()), DomainError);
}

TEST_CASE("words on the exact two-point system") {
  // f0 z = t z, f1 z = (1-t) z + t on (1, z). The rightmost letter acts first:
  // (1, 0^k) sends 0 to t, while (0^k, 1) sends it to t^(k+1).
  const IBetaPoly t = IBetaPoly::half_plus_ibeta();
  const auto m = type_iv_ifs(1, t);
  const IfsPair<IBetaPoly> ifs(m.M0, m.M1, t);
  const std::vector<IBetaPoly> origin = {1, 0};
  for (int k = 0; k <= 6; ++k) {
    std::vector<std::uint8_t> head(k + 1, 0);
    head[0] = 1;
    CHECK(word_map(ifs, std::span<const std::uint8_t>(head)).apply(origin)[1] == t);
    std::vector<std::uint8_t> tail(k + 1, 0);
    tail[k] = 1;
    const auto img = word_map(ifs, std::span<const std::uint8_t>(tail)).apply(origin);
    CHECK(img[1] == ipow(t, k + 1));
    CHECK(img[1].coeff(0) == Dyadic::pow2(-(k + 1)));
  }
}

TEST_CASE("set iteration") {
  const auto ifs = type_iv_pair(1, {0.5, 0.0});
  const auto seed = seed_points({0.0, 1.0});

  const auto same = iterate_attractor(ifs, seed, 0);
  REQUIRE(same.projected.size() == 2);
  CHECK(same.projected.points[0] == Complex(0.0));
  CHECK(same.projected.points[1] == Complex(1.0));

  const auto r = iterate_attractor(ifs, seed, 10);
  CHECK(r.projected.size() == 1025);
  CHECK_FALSE(r.subsampled);
  std::set<double> xs;
  for (const Complex& z : r.projected.points) {
    CHECK(z.imag() == 0.0);
    CHECK(z.real() >= 0.0);
    CHECK(z.real() <= 1.0);
    xs.insert(z.real());
  }
  for (int k = 0; k <= 1024; ++k) CHECK(xs.count(k / 1024.0) == 1);
}

TEST_CASE("set iteration budget and thread independence") {
  const Complex t(0.5, 0.3);
  const auto ifs = type_iv_pair(1, t);
  const auto seed = seed_points({0.0, 0.5, 1.0});
  IterateOptions small;
  small.budget = 500;
  small.threads = 1;
  const auto a = iterate_attractor(ifs, seed, 12, small);
  CHECK(a.subsampled);
  CHECK(a.projected.size() <= 500);
  CHECK(a.peak_points > 500);
  small.threads = 4;
  const auto b = iterate_attractor(ifs, seed, 12, small);
  CHECK(a.projected.points == b.projected.points);
}

TEST_CASE("attractor is nearly invariant") {
  const Complex t(0.5, 0.3);
  const auto ifs = type_iv_pair(1, t);
  const auto a = iterate_attractor(ifs, seed_points({0.0, 1.0}), 14);
  const auto b = iterate_attractor(ifs, a.states, 1);
  // Every point of F(A) lies on the next generation grid; the step only adds detail.
  CHECK(b.projected.size() >= a.projected.size());
}

TEST_CASE("control attractor") {
  const std::vector<Complex> controls = {{-1, 1}, {0, 1}, {2, 1}};
  const auto r = control_attractor(controls, {0.4, -0.55}, 12);
  auto has = [&](Complex z) {
    return std::any_of(r.projected.points.begin(), r.projected.points.end(),
                       [&](Complex p) { return std::abs(p - z) < 1e-9; });
  };
  CHECK(has(controls.front()));
  CHECK(has(controls.back()));
  CHECK_THROWS_AS(control_attractor(controls, {1.2, 0.0}, 5), DomainError);
}

TEST_CASE("chaos game stays near the attractor") {
  const auto ifs = type_iv_pair(1, {0.5, 0.0});
  const std::vector<Complex> start = {1.0, 0.3};
  const auto pts = chaos_game(ifs, start, 2000, 3);
  CHECK(pts.size() == 2000);
  for (const Complex& z : pts.points) {
    CHECK(z.real() >= -1e-12);
    CHECK(z.real() <= 1.0 + 1e-12);
  }
}

TEST_CASE("IFS maps must agree in shape") {
  const auto a = type_iv_ifs(1, Complex(0.5, 0.1));
  const auto b = type_iv_ifs(2, Complex(0.5, 0.1));
  CHECK_THROWS_AS(IfsPair<Complex>(a.M0, b.M1, 0.5), ConstructionError);
  CHECK_THROWS_AS(IfsPair<Complex>(a.M0, a.M1.transposed_map(), 0.5), ConstructionError);
}
