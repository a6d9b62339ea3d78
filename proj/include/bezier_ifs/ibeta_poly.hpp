#pragma once

#include "bezier_ifs/dyadic.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bezier_ifs {

/// Polynomial in the monomials (i*beta)^k with dyadic coefficients.
///
/// With real beta, even powers contribute to the real part and odd powers to
/// the imaginary part, so the real/imaginary split is structural. Trailing
/// zero coefficients are trimmed; the zero polynomial has no coefficients.
class IBetaPoly {
 public:
  IBetaPoly() = default;
  IBetaPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  IBetaPoly(Dyadic c);        // NOLINT(google-explicit-constructor)
  IBetaPoly(std::initializer_list<Dyadic> coeffs);
  explicit IBetaPoly(std::vector<Dyadic> coeffs);

  /// t = 1/2 + i*beta.
  static IBetaPoly half_plus_ibeta();
  /// (i*beta)^k.
  static IBetaPoly monomial(std::size_t k, Dyadic c = Dyadic(1));

  /// Coefficient of (i*beta)^k; zero past the end.
  Dyadic coeff(std::size_t k) const;
  const std::vector<Dyadic>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  IBetaPoly operator-() const;
  IBetaPoly& operator+=(const IBetaPoly& o);
  IBetaPoly& operator-=(const IBetaPoly& o);
  IBetaPoly& operator*=(const IBetaPoly& o);
  friend IBetaPoly operator+(IBetaPoly a, const IBetaPoly& b) { return a += b; }
  friend IBetaPoly operator-(IBetaPoly a, const IBetaPoly& b) { return a -= b; }
  friend IBetaPoly operator*(IBetaPoly a, const IBetaPoly& b) { return a *= b; }
  friend bool operator==(const IBetaPoly&, const IBetaPoly&) = default;

  /// Multiplies every coefficient by 2^k.
  IBetaPoly ldexp(int k) const;

  /// Value at real beta in double precision.
  std::complex<double> eval(double beta) const;
  /// Exact value at dyadic beta.
  ComplexD eval(const Dyadic& beta) const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Dyadic> coeffs_;
};

/// scale * p + shift in the polynomial ring.
IBetaPoly ipoly_mul_affine(const IBetaPoly& p, const IBetaPoly& scale, const IBetaPoly& shift);

}  // namespace bezier_ifs
