#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/orbits.hpp"
#include "bezier_ifs/takagi.hpp"

#include "doctest.h"

#include <random>

using namespace bezier_ifs;

namespace {

DigitSeq random_word(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = rng() & 1U;
  return DigitSeq(bits);
}

}  // namespace

TEST_CASE("addresses") {
  CHECK(pi(DigitSeq::parse("1")) == Dyadic::ratio(1, 1));
  CHECK(pi(DigitSeq::parse("011")) == Dyadic::ratio(3, 3));
  CHECK(pi(DigitSeq::all_ones()) == Dyadic(1));
  CHECK_THROWS_AS(pi(DigitSeq({0, 1}, DigitSeq::Tail::Ones)), CanonicalizationError);

  CHECK(pi_inverse(0.5, 4).prefix(4) == std::vector<std::uint8_t>{1, 0, 0, 0});
  CHECK(pi_inverse(1.0 / 3.0, 6).prefix(6) == std::vector<std::uint8_t>{0, 1, 0, 1, 0, 1});
  CHECK(pi_inverse(1.0, 3).prefix(4) == std::vector<std::uint8_t>{1, 1, 1, 0});
  CHECK(pi_inverse(Dyadic::ratio(5, 3), 3) == DigitSeq::parse("101"));
  CHECK_THROWS_AS(pi_inverse(1.5, 3), DomainError);
}

TEST_CASE("pi and pi_inverse round trip on dyadic grids") {
  for (int k = 0; k < 256; ++k) {
    const Dyadic x = Dyadic::ratio(k, 8);
    CHECK(pi(pi_inverse(x, 8)) == x);
  }
}

TEST_CASE("reverse_prefix") {
  CHECK(reverse_prefix(DigitSeq::parse("100"), 3) == DigitSeq::parse("001"));
  CHECK(reverse_prefix(DigitSeq::parse("1101"), 4) == DigitSeq::parse("1011"));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + rng() % 12;
    const DigitSeq d = random_word(rng, n);
    CHECK(reverse_prefix(reverse_prefix(d, n), n) == DigitSeq(d.prefix(n)));
  }
}

TEST_CASE("orbit steps") {
  CHECK(w_poly(0, 0) == IBetaPoly({Dyadic::ratio(1, 1), Dyadic(1)}));
  CHECK(w_poly(0, 0).coeff(0) == Dyadic::ratio(1, 1));
  CHECK(w_poly(1, 0).coeff(1) == Dyadic(1));  // w_{1,0} = i: the (i beta) coefficient of t^2
  CHECK(w_poly(1, 1) == IBetaPoly({Dyadic::ratio(1, 2), Dyadic(0), Dyadic(-1)}));

  const OrbitState zero;
  const auto one = z_step(zero, 1);
  CHECK(one.Z == IBetaPoly::half_plus_ibeta());
  CHECK(one.u == 1);
  CHECK(one.r == Dyadic::ratio(1, 1));
  CHECK(z_step(zero, 0).Z.is_zero());
}

TEST_CASE("W is (1-t)^u t^(n+1-u)") {
  const IBetaPoly t = IBetaPoly::half_plus_ibeta();
  const IBetaPoly s = IBetaPoly(1) - t;
  for (std::size_t n = 0; n <= 10; ++n)
    for (int u = 0; u <= static_cast<int>(n); ++u)
      CHECK(w_poly(n, u) == ipow(s, u) * ipow(t, static_cast<unsigned>(n + 1 - u)));
}

TEST_CASE("orbit polynomials") {
  CHECK(z_poly(DigitSeq(), 5).is_zero());
  CHECK(z_poly(DigitSeq::parse("1"), 3).coeff(0) == Dyadic::ratio(1, 1));
  CHECK(z_poly(DigitSeq::parse("001"), 3).coeff(0) == Dyadic::ratio(1, 3));
  CHECK(z_poly(DigitSeq::parse("1"), 3) == z_word_product(DigitSeq::parse("1"), 3));
  CHECK(z_word_product(DigitSeq::parse("1"), 0).is_zero());
}

TEST_CASE("constant coefficient is r_n") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 16;
    const DigitSeq d = random_word(rng, n);
    CHECK(a_coeff(d, 0, n) == d.r(n));
    CHECK(z_poly(d, n) == z_word_product(d, n));
  }
}

TEST_CASE("first coefficient is twice Takagi of the constant one") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 20;
    const DigitSeq d = random_word(rng, n);
    CHECK(a_coeff(d, 1, n) == Dyadic(2) * takagi(a_coeff(d, 0, n)));
  }
}

TEST_CASE("coefficient bound and stabilization") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + rng() % 20;
    const DigitSeq d = random_word(rng, n + 1);
    for (std::size_t j = 0; j <= 6; ++j) {
      CHECK(a_coeff(d, j, n).abs() < Dyadic::pow2(static_cast<int>(j) + 1));
      if (d.digit(n + 1) == 0) CHECK(a_coeff(d, j, n + 1) == a_coeff(d, j, n));
    }
  }
}

TEST_CASE("tail bound covers later partial sums") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const DigitSeq d = random_word(rng, 24);
    for (std::size_t k = 0; k <= 4; ++k) {
      for (std::size_t n = 4; n <= 16; n += 4) {
        const double bound = a_coeff_tail_bound(k, n);
        const double diff = (a_coeff(d, k, 24) - a_coeff(d, k, n)).abs().to_double();
        CHECK(diff <= bound);
      }
    }
  }
  CHECK(a_coeff_tail_bound(0, 10) == doctest::Approx(std::ldexp(1.0, -10)));
}

TEST_CASE("vector field") {
  CHECK(vector_field_v(0.0, 8) == Complex(0.0, 0.0));
  CHECK(vector_field_v(0.5, 1) == Complex(0.0, 1.0));
  CHECK(vector_field_v(0.25, 2) == Complex(0.0, 1.0));
  CHECK(vector_field_v(1.0, 8) == Complex(0.0, 0.0));
  for (int k = 0; k <= 256; ++k) {
    const Dyadic a = Dyadic::ratio(k, 8);
    CHECK(vector_field_v_exact(a, 8) == Dyadic(2) * takagi(a));
  }
}

TEST_CASE("coefficient samples") {
  const auto a0 = a_k_samples(0, 6, 16);
  REQUIRE(a0.size() == 65);
  for (const auto& [x, y] : a0) CHECK(x == y);
  const auto a1 = a_k_samples(1, 8, 16);
  for (const auto& [x, y] : a1) CHECK(y == Dyadic(2) * takagi(x));
  CHECK(a_k_samples(2, 4, 16).front().second == Dyadic(0));
  CHECK_THROWS_AS(a_k_samples(1, 0, 16), DomainError);
}

TEST_CASE("degree-m vector field") {
  CHECK(vector_field_vm(1.5, 3, 16) == Complex(0.0, 3.0));
  CHECK(vector_field_vm(0.0, 2, 16) == Complex(0.0, 0.0));
  for (double x : {0.0, 0.125, 0.375, 0.5, 0.8125})
    CHECK(vector_field_vm(x, 1, 16) == vector_field_v(x, 16));
  CHECK_THROWS_AS(vector_field_vm(3.5, 3, 16), DomainError);
  CHECK(degree_m_scalar_orbit(3, DigitSeq::parse("1"), 1) ==
        IBetaPoly({Dyadic::ratio(3, 1), Dyadic(3)}));
}
