#pragma once

// Exact arithmetic in Z[1/2] and Z[1/2][i].

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace bezier_ifs {

using BigInt = boost::multiprecision::cpp_int;

/// A dyadic rational numerator / 2^exponent, kept canonical: the numerator
/// is odd, or zero with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt numerator, std::uint32_t exponent = 0);

  /// 2^k for any integer k.
  static Dyadic pow2(int k);
  /// numerator / 2^exponent.
  static Dyadic ratio(std::int64_t numerator, std::uint32_t exponent);

  const BigInt& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_.sign(); }

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  /// Multiplies by 2^k; exact for every k.
  Dyadic ldexp(int k) const;

  /// Largest integer <= *this.
  BigInt floor() const;
  /// *this - floor(*this), in [0, 1).
  Dyadic frac() const;
  Dyadic abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  /// Exact conversion; throws NotDyadicError for NaN/inf.
  static Dyadic from_double(double x);

  std::string to_string() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt num_{0};
  std::uint32_t exp_{0};
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

/// Gaussian dyadic re + i*im. Closed under +, -, *; division only by units.
class ComplexD {
 public:
  ComplexD() = default;
  ComplexD(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexD(Dyadic re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ComplexD(Dyadic re, Dyadic im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexD i() { return {Dyadic(0), Dyadic(1)}; }

  const Dyadic& re() const { return re_; }
  const Dyadic& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  /// |z|^2, exact.
  Dyadic norm() const { return re_ * re_ + im_ * im_; }
  ComplexD conj() const { return {re_, -im_}; }

  /// True iff 1/z is again Gaussian dyadic, i.e. |z|^2 is a power of two.
  bool is_unit() const;
  /// Throws NotDyadicError unless is_unit().
  ComplexD inverse() const;

  ComplexD operator-() const { return {-re_, -im_}; }
  ComplexD& operator+=(const ComplexD& o);
  ComplexD& operator-=(const ComplexD& o);
  ComplexD& operator*=(const ComplexD& o);

  friend ComplexD operator+(ComplexD a, const ComplexD& b) { return a += b; }
  friend ComplexD operator-(ComplexD a, const ComplexD& b) { return a -= b; }
  friend ComplexD operator*(ComplexD a, const ComplexD& b) { return a *= b; }
  friend bool operator==(const ComplexD&, const ComplexD&) = default;

  ComplexD ldexp(int k) const { return {re_.ldexp(k), im_.ldexp(k)}; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string to_string() const;

 private:
  Dyadic re_;
  Dyadic im_;
};

std::ostream& operator<<(std::ostream& os, const ComplexD& z);

}  // namespace bezier_ifs
