#include "bezier_ifs/decasteljau.hpp"
#include "bezier_ifs/ifs.hpp"

#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <random>

using namespace bezier_ifs;

namespace {

ComplexD d(std::int64_t num, std::uint32_t e, std::int64_t im = 0, std::uint32_t ie = 0) {
  return {Dyadic::ratio(num, e), Dyadic::ratio(im, ie)};
}

using CVec = std::vector<Complex>;

}  // namespace

TEST_CASE("eval_point") {
  const Complex t(0.3, -0.7);
  const CVec lin = {0.0, 1.0};
  CHECK(eval_point<Complex>(lin, t) == t);
  const CVec p = {{1, 2}, {3, -1}, {0, 5}, {2, 2}};
  CHECK(eval_point<Complex>(p, 0.0) == p.front());
  CHECK(std::abs(eval_point<Complex>(p, 1.0) - p.back()) < 1e-15);
  const std::vector<ComplexD> quad = {0, 1, 2};
  CHECK(eval_point<ComplexD>(quad, d(1, 1)) == ComplexD(1));
  CHECK_THROWS_AS(eval_point<Complex>(CVec{}, t), DomainError);
}

TEST_CASE("eval_point agrees with the Bernstein sum") {
  const CVec p = {{1, 2}, {3, -1}, {0, 5}, {2, 2}, {-1, 0}};
  const Complex t(0.45, 0.2);
  Complex sum = 0.0;
  for (int j = 0; j <= 4; ++j) sum += bernstein(4, j, t) * p[j];
  CHECK(std::abs(eval_point<Complex>(p, t) - sum) < 1e-13);
}

TEST_CASE("subdivide") {
  const std::vector<ComplexD> lin = {0, 1};
  const auto half = subdivide<ComplexD>(lin, d(1, 1));
  CHECK(half.left == std::vector<ComplexD>{0, d(1, 1)});
  CHECK(half.right == std::vector<ComplexD>{d(1, 1), 1});

  const ComplexD t = d(3, 3, 1, 2);
  const std::vector<ComplexD> q = {0, 1, 2};
  const auto s = subdivide<ComplexD>(q, t);
  CHECK(s.left == std::vector<ComplexD>{0, t, t * ComplexD(2)});
  CHECK(s.right == std::vector<ComplexD>{t * ComplexD(2), t + ComplexD(1), 2});
  CHECK_THROWS_AS(subdivide<ComplexD>(std::vector<ComplexD>{1}, t), DomainError);
}

TEST_CASE("subdivided halves reparametrize the curve") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      CVec p;
      for (int k = 0; k <= n; ++k) p.emplace_back(u(rng), u(rng));
      const Complex t(0.5 + 0.4 * u(rng), 0.4 * u(rng));
      const Complex s(0.5 + 0.5 * u(rng), 0.3 * u(rng));
      const auto parts = subdivide<Complex>(p, t);
      CHECK(parts.left.front() == p.front());
      CHECK(parts.right.back() == p.back());
      CHECK(std::abs(eval_point<Complex>(parts.left, s) - eval_point<Complex>(p, s * t)) < 1e-11);
      CHECK(std::abs(eval_point<Complex>(parts.right, s) - eval_point<Complex>(p, t + s * (1.0 - t))) < 1e-11);
    }
  }
}

TEST_CASE("build_LR") {
  const ComplexD t = d(1, 2, 3, 3);
  const auto m = build_LR(1, t);
  CHECK(m.L(0, 0) == ComplexD(1));
  CHECK(m.L(0, 1) == ComplexD(0));
  CHECK(m.L(1, 0) == ComplexD(1) - t);
  CHECK(m.L(1, 1) == t);
  const auto m5 = build_LR(5, t);
  for (int i = 0; i <= 5; ++i) {
    ComplexD sl, sr;
    for (int j = 0; j <= 5; ++j) {
      sl += m5.L(i, j);
      sr += m5.R(i, j);
    }
    CHECK(sl == ComplexD(1));
    CHECK(sr == ComplexD(1));
  }
}

TEST_CASE("eigenvalues of L(t) are the powers of t") {
  const auto m = build_LR(3, Complex(0.3, 0.0));
  Eigen::Matrix4cd a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = m.L(i, j);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(a);
  std::vector<double> ev;
  for (int i = 0; i < 4; ++i) ev.push_back(es.eigenvalues()[i].real());
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == doctest::Approx(0.027).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.09).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("binomial conjugacy") {
  const auto c2 = conjugacy(2);
  const std::int64_t s[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  const std::int64_t si[3][3] = {{1, 0, 0}, {-1, 1, 0}, {1, -2, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(c2.S(i, j) == s[i][j]);
      CHECK(c2.Sinv(i, j) == si[i][j]);
    }
  const auto c6 = conjugacy(6);
  CHECK(c6.S * c6.Sinv == Matrix<std::int64_t>::identity(7));
}

TEST_CASE("triangular forms") {
  const ComplexD t = d(5, 3, -3, 2);
  const auto f1 = triangular_forms(1, t);
  CHECK(f1.T(0, 0) == ComplexD(1));
  CHECK(f1.T(0, 1) == t);
  CHECK(f1.T(1, 0) == ComplexD(0));
  CHECK(f1.T(1, 1) == ComplexD(1) - t);

  const ComplexD r = d(3, 3);
  const auto f4 = triangular_forms(4, r);
  Matrix<ComplexD> want(5, 5);
  const std::int64_t num[5] = {1, 3, 9, 27, 81};
  for (int i = 0; i < 5; ++i) want(i, i) = ComplexD(Dyadic::ratio(num[i], 3 * i));
  CHECK(f4.D == want);

  for (int n = 1; n <= 8; ++n) {
    const auto f = triangular_forms(n, t);
    CHECK(f.D == closed_form_D(n, t));
    CHECK(f.T == closed_form_T(n, t));
    for (int j = 0; j <= n; ++j) CHECK(f.T(0, j) == ComplexD(binom(n, j)) * ipow(t, j));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) CHECK(f.T(i, j) == double_sum_T(n, i, j, t));
  }
}

TEST_CASE("recurrences of the conjugated R(t)") {
  CHECK(corollary_identities(1, d(1, 1)));
  CHECK(corollary_identities(5, d(13, 5, -7, 4)));
  CHECK(corollary_identities(3, Complex(0.4, -0.55), 1e-12));
  CHECK_THROWS_AS(corollary_identities(0, d(1, 1)), DomainError);
}

TEST_CASE("a corrupted T is caught by the recurrences") {
  const ComplexD t = d(3, 2, 1, 3);
  auto tn = triangular_forms(4, t).T;
  const auto tn1 = triangular_forms(5, t).T;
  CHECK_FALSE(corollary_violation(tn, tn1, t).has_value());
  tn(1, 3) += ComplexD(Dyadic::pow2(-20));
  const auto v = corollary_violation(tn, tn1, t);
  REQUIRE(v.has_value());
  CHECK(v->find("row recurrence") != std::string::npos);
}

TEST_CASE("type IV pair") {
  const ComplexD t = d(1, 2, 1, 1);
  const auto m1 = type_iv_ifs(1, t);
  CHECK(m1.M0.rep() == Rep::IV);
  CHECK(m1.M0.matrix()(0, 0) == ComplexD(1));
  CHECK(m1.M0.matrix()(1, 1) == t);
  CHECK(m1.M0.matrix()(1, 0) == ComplexD(0));
  CHECK(m1.M1.matrix()(1, 0) == t);
  CHECK(m1.M1.matrix()(1, 1) == ComplexD(1) - t);
  CHECK(m1.M1.matrix()(0, 1) == ComplexD(0));

  const auto m6 = type_iv_ifs(6, t);
  for (int i = 0; i <= 6; ++i) {
    CHECK(m6.M0.matrix()(i, 0) == ComplexD(i == 0 ? 1 : 0));
    CHECK(m6.M1.matrix()(i, 0) == ComplexD(binom(6, i)) * ipow(t, i));
    CHECK(m6.M1.matrix()(i, i) == ipow(ComplexD(1) - t, i));
  }
  // Type IV is the transpose of the conjugated pair.
  const auto f = triangular_forms(6, t);
  CHECK(m6.M0.matrix() == f.D);
  CHECK(m6.M1.matrix().transpose() == f.T);
  CHECK(m6.M1.transposed_map().rep() == Rep::III);
  CHECK(m6.M1.reflected_map().rep() == Rep::I);
  CHECK_THROWS_AS(type_iv_ifs(0, t), DomainError);
}

TEST_CASE("control polygon IFS") {
  const CVec controls = {{-1, 1}, {0, 1}, {2, 1}};
  const Complex t(0.4, -0.55);
  const auto c = build_ifs_from_controls<Complex>(controls, t);
  CHECK(c.maps.M0.rep() == Rep::II);
  const auto& m0 = c.maps.M0.matrix();
  for (int i = 0; i < 3; ++i) CHECK(std::abs(m0(i, 2) - (i == 2 ? 1.0 : 0.0)) < 1e-12);

  const CVec row0 = {controls[0], 1.0, 1.0};
  const CVec rown = {controls[2], 0.0, 1.0};
  for (int j = 0; j < 3; ++j) {
    CHECK(c.P(0, j) == row0[j]);
    CHECK(c.P(2, j) == rown[j]);
  }
  CHECK(is_fixed_point<Complex>(c.maps.M0, row0, 1e-12));
  CHECK(is_fixed_point<Complex>(c.maps.M1, rown, 1e-12));
  const auto z0 = fixed_point(c.maps.M0);
  CHECK(std::abs(z0[0] - controls[0]) < 1e-12);
}

TEST_CASE("control polygon IFS, exact path") {
  const std::vector<ComplexD> controls = {d(-2, 0), d(-1, 0, 1), d(0, 0, 2), d(1, 0, 1), d(1, 0)};
  const ComplexD t = d(1, 1, 1, 2);
  const auto c = build_ifs_from_controls<ComplexD>(controls, t);
  std::vector<ComplexD> row0, rown;
  for (int j = 0; j <= 4; ++j) {
    row0.push_back(c.P(0, j));
    rown.push_back(c.P(4, j));
  }
  CHECK(is_fixed_point<ComplexD>(c.maps.M0, row0));
  CHECK(is_fixed_point<ComplexD>(c.maps.M1, rown));
}

TEST_CASE("control polygon IFS rejects equal trailing controls") {
  const CVec bad = {{0, 0}, {1, 1}, {1, 1}};
  CHECK_THROWS_AS(build_ifs_from_controls<Complex>(bad, Complex(0.5, 0.1)), ConstructionError);
  CHECK_THROWS_AS(build_ifs_from_controls<Complex>(CVec{{1, 0}}, Complex(0.5, 0.1)), ConstructionError);
}

TEST_CASE("affine map layouts are checked") {
  Matrix<Complex> m = Matrix<Complex>::identity(3);
  m(0, 2) = 4.0;  // translation in the last column: type I shape
  CHECK_NOTHROW(AffineMapH<Complex>(m, Rep::I));
  CHECK_THROWS_AS(AffineMapH<Complex>(m, Rep::IV), ConstructionError);
  const AffineMapH<Complex> f(m, Rep::I);
  CHECK(f.transposed_map().rep() == Rep::II);
  const CVec x = {1.0, 2.0, 1.0};
  const auto y = f.apply(x);
  CHECK(y[0] == Complex(5.0, 0.0));
  // Type III reverses the affine coordinates: (1, x1, x0).
  const auto z = f.converted(Rep::III).apply(CVec{1.0, 2.0, 1.0});
  CHECK(z[2] == Complex(5.0, 0.0));
}
