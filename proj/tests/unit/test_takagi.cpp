#include "bezier_ifs/digits.hpp"
#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/takagi.hpp"

#include "doctest.h"

#include <random>

using namespace bezier_ifs;

TEST_CASE("distance to the nearest integer") {
  CHECK(sigma(0.25) == 0.25);
  CHECK(sigma(17.5) == 0.5);
  CHECK(sigma(-0.75) == 0.25);
  CHECK(sigma(3.0) == 0.0);
  CHECK(sigma(Dyadic::ratio(-3, 2)) == Dyadic::ratio(1, 2));
  CHECK(sigma(Dyadic::ratio(35, 1)) == Dyadic::ratio(1, 1));
}

TEST_CASE("exact Takagi values") {
  CHECK(takagi(Dyadic(0)) == Dyadic(0));
  CHECK(takagi(Dyadic(1)) == Dyadic(0));
  CHECK(takagi(Dyadic::ratio(1, 1)) == Dyadic::ratio(1, 1));
  CHECK(takagi(Dyadic::ratio(1, 2)) == Dyadic::ratio(1, 1));
  CHECK(takagi(Dyadic::ratio(3, 2)) == Dyadic::ratio(1, 1));
  CHECK(takagi(Dyadic::ratio(1, 3)) == Dyadic::ratio(3, 3));
  CHECK_THROWS_AS(takagi(Dyadic::ratio(5, 2)), DomainError);
  CHECK_THROWS_AS(takagi(Dyadic(-1)), DomainError);
}

TEST_CASE("double Takagi matches the exact values") {
  for (int k = 0; k <= 1024; ++k) {
    const Dyadic x = Dyadic::ratio(k, 10);
    CHECK(takagi(x.to_double()) == takagi(x).to_double());
  }
  CHECK(takagi(1.0 / 3.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(takagi(1.5), DomainError);
}

TEST_CASE("Takagi symmetry and range") {
  double hi = 0.0;
  for (int k = 0; k <= 4096; ++k) {
    const Dyadic x = Dyadic::ratio(k, 12);
    CHECK(takagi(x) == takagi(Dyadic(1) - x));
    hi = std::max(hi, takagi(x).to_double());
  }
  CHECK(hi <= 2.0 / 3.0);
  CHECK(hi > 0.66);
}

TEST_CASE("Takagi built from increments") {
  for (int k = 0; k <= 512; ++k) {
    const Dyadic x = Dyadic::ratio(k, 9);
    CHECK(takagi_by_increments(x) == takagi(x));
  }
}

TEST_CASE("increment identity") {
  const auto a = tak1_increment(DigitSeq::parse("1"), 1, 2);
  CHECK(a.lhs == Dyadic(0));
  CHECK(a.rhs == Dyadic(0));
  const auto b = tak1_increment(DigitSeq::parse("0"), 0, 1);
  CHECK(b.lhs == Dyadic::ratio(1, 1));
  CHECK(b.rhs == Dyadic::ratio(1, 1));
  const auto c = tak1_increment(DigitSeq::parse("11"), 2, 4);
  CHECK(c.lhs == Dyadic(0));
  CHECK(c.rhs == Dyadic(0));
  CHECK_THROWS_AS(tak1_increment(DigitSeq::parse("101"), 3, 2), DomainError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 10;
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng() & 1U;
    const DigitSeq d(bits);
    for (std::size_t m = std::max<std::size_t>(n, 1); m <= 14; ++m) {
      const auto r = tak1_increment(d, n, m);
      CHECK(r.lhs == r.rhs);
    }
  }
}

TEST_CASE("digit sequences") {
  const DigitSeq d = DigitSeq::parse("0110");
  CHECK(d.digit(1) == 0);
  CHECK(d.digit(3) == 1);
  CHECK(d.digit(10) == 0);
  CHECK(d.stored().size() == 3);
  CHECK(d.r(3) == Dyadic::ratio(3, 3));
  CHECK(d.u(3) == 2);
  CHECK(d.prefix(5) == std::vector<std::uint8_t>{0, 1, 1, 0, 0});
  CHECK(DigitSeq::all_ones().digit(99) == 1);
  CHECK(DigitSeq::all_ones().is_canonical());

  const DigitSeq tail({0, 1, 0}, DigitSeq::Tail::Ones);
  CHECK_FALSE(tail.is_canonical());
  CHECK(tail.canonicalized() == DigitSeq::parse("011"));
  CHECK(DigitSeq::all_ones().canonicalized().is_all_ones());
  CHECK_THROWS(DigitSeq::parse("012"));
}
