#include "bezier_ifs/orbits.hpp"

#include "bezier_ifs/binom.hpp"
#include "bezier_ifs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bezier_ifs {

Dyadic pi(const DigitSeq& d) {
  if (!d.is_canonical()) {
    throw CanonicalizationError("pi: address " + d.to_string() +
                                " ends in 1^inf; use its canonical (eventually zero) form");
  }
  if (d.is_all_ones()) return Dyadic(1);
  return d.r(d.stored().size());
}

DigitSeq pi_inverse(const Dyadic& x, std::size_t n) {
  if (x.sign() < 0 || x > Dyadic(1)) throw DomainError("pi_inverse: x = " + x.to_string() + " outside [0, 1]");
  if (x == Dyadic(1)) return DigitSeq(std::vector<std::uint8_t>(n, 1));
  std::vector<std::uint8_t> bits(n, 0);
  Dyadic rest = x;
  for (std::size_t k = 0; k < n; ++k) {
    rest = rest.ldexp(1);
    if (rest >= Dyadic(1)) {
      bits[k] = 1;
      rest -= Dyadic(1);
    }
  }
  return DigitSeq(std::move(bits));
}

DigitSeq pi_inverse(double x, std::size_t n) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("pi_inverse: x = " + std::to_string(x) + " outside [0, 1]");
  return pi_inverse(Dyadic::from_double(x), n);
}

DigitSeq reverse_prefix(const DigitSeq& d, std::size_t n) {
  if (n < 1) throw DomainError("reverse_prefix: n must be >= 1");
  auto bits = d.prefix(n);
  std::reverse(bits.begin(), bits.end());
  return DigitSeq(std::move(bits));
}

IBetaPoly w_poly(std::size_t n, int u) {
  const auto top = static_cast<std::int64_t>(n) + 1;
  if (u < 0 || u > top) throw DomainError("w_poly: u out of range");
  std::vector<Dyadic> c(static_cast<std::size_t>(top) + 1);
  for (std::int64_t m = 0; m <= top; ++m) {
    BigInt sum = 0;
    for (std::int64_t k = 0; k <= std::min<std::int64_t>(u, m); ++k) {
      const BigInt term = BigInt(binom(u, k)) * BigInt(binom(top - u, m - k));
      if (k % 2 == 0) sum += term; else sum -= term;
    }
    c[static_cast<std::size_t>(m)] = Dyadic(sum).ldexp(static_cast<int>(m - top));
  }
  return IBetaPoly(std::move(c));
}

OrbitState z_step(const OrbitState& state, int next_digit) {
  if (next_digit != 0 && next_digit != 1) throw DomainError("z_step: digit must be 0 or 1");
  OrbitState out = state;
  out.digits.push_back(static_cast<std::uint8_t>(next_digit));
  if (next_digit == 1) {
    out.Z += w_poly(state.n, state.u);
    out.u += 1;
    out.r += Dyadic::pow2(-static_cast<int>(state.n + 1));
  }
  out.n = state.n + 1;
  return out;
}

namespace {

// In-place variant of z_step without the digit log; used on hot paths.
void advance(IBetaPoly& z, std::size_t n, int& u, int digit) {
  if (digit == 1) {
    z += w_poly(n, u);
    ++u;
  }
}

}  // namespace

IBetaPoly z_poly(const DigitSeq& d, std::size_t n) {
  IBetaPoly z;
  int u = 0;
  for (std::size_t k = 0; k < n; ++k) advance(z, k, u, d.digit(k + 1));
  return z;
}

IfsPair<IBetaPoly> two_point_ifs_symbolic() {
  const IBetaPoly t = IBetaPoly::half_plus_ibeta();
  Matrix<IBetaPoly> m0(2, 2);
  Matrix<IBetaPoly> m1(2, 2);
  m0(0, 0) = t;
  m0(1, 1) = 1;
  m1(0, 0) = IBetaPoly(1) - t;
  m1(0, 1) = t;
  m1(1, 1) = 1;
  return {AffineMapH<IBetaPoly>(std::move(m0), Rep::I), AffineMapH<IBetaPoly>(std::move(m1), Rep::I), t};
}

IBetaPoly z_word_product(const DigitSeq& d, std::size_t n) {
  if (n == 0) return {};
  static const IfsPair<IBetaPoly> ifs = two_point_ifs_symbolic();
  const std::vector<IBetaPoly> origin = {IBetaPoly(0), IBetaPoly(1)};
  return word_map(ifs, d, n).apply(std::span<const IBetaPoly>(origin))[0];
}

Dyadic a_coeff(const DigitSeq& d, std::size_t k, std::size_t n) { return z_poly(d, n).coeff(k); }

double a_coeff_tail_bound(std::size_t k, std::size_t n) {
  // term_j = 2^k C(j+1, k) / 2^(j+1); ratio term_{j+1} / term_j = (j+2) / (2 (j+2-k)).
  const auto kk = static_cast<double>(k);
  auto log_term = [&](double j) -> double {
    if (j + 1 < kk) return -INFINITY;
    return kk * std::log(2.0) + std::lgamma(j + 2) - std::lgamma(kk + 1) - std::lgamma(j + 2 - kk) -
           (j + 1) * std::log(2.0);
  };
  double j = static_cast<double>(n);
  if (j + 1 < kk) j = kk - 1;  // earlier terms vanish
  double term = std::exp(log_term(j));
  double sum = 0.0;
  for (int guard = 0; guard < 100000; ++guard) {
    sum += term;
    const double ratio = (j + 2) / (2.0 * (j + 2 - kk));
    term *= ratio;
    j += 1;
    if (ratio < 0.75 && term < 1e-18 * sum) break;
  }
  return sum;
}

namespace {

void check_alpha(const Dyadic& alpha) {
  if (alpha.sign() < 0 || alpha > Dyadic(1)) {
    throw DomainError("vector field: alpha = " + alpha.to_string() + " outside [0, 1]");
  }
}

}  // namespace

Dyadic vector_field_v_exact(const Dyadic& alpha, std::size_t n) {
  check_alpha(alpha);
  if (alpha == Dyadic(1)) return Dyadic(0);
  return a_coeff(pi_inverse(alpha, n), 1, n);
}

Complex vector_field_v(double alpha, std::size_t n) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("vector_field_v: alpha outside [0, 1]");
  return {0.0, vector_field_v_exact(Dyadic::from_double(alpha), n).to_double()};
}

std::vector<std::pair<Dyadic, Dyadic>> a_k_samples(std::size_t k, int grid, std::size_t n) {
  if (grid < 1 || grid > 24) throw DomainError("a_k_samples: grid must be in [1, 24]");
  const std::int64_t count = std::int64_t{1} << grid;
  std::vector<std::pair<Dyadic, Dyadic>> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  for (std::int64_t j = 0; j <= count; ++j) {
    const Dyadic alpha = Dyadic::ratio(j, static_cast<std::uint32_t>(grid));
    if (j == count) {
      out.emplace_back(alpha, Dyadic(k == 0 ? 1 : 0));
    } else {
      out.emplace_back(alpha, a_coeff(pi_inverse(alpha, n), k, n));
    }
  }
  return out;
}

IBetaPoly degree_m_scalar_orbit(int m, const DigitSeq& d, std::size_t n) {
  if (m < 1) throw DomainError("degree-m orbit: m must be >= 1");
  // Apply f^(d_1) o ... o f^(d_n) to 0: innermost map first.
  const IBetaPoly t = IBetaPoly::half_plus_ibeta();
  const IBetaPoly s = IBetaPoly(1) - t;
  const IBetaPoly shift = IBetaPoly(m) * t;
  IBetaPoly x;
  for (std::size_t k = n; k >= 1; --k) {
    x = d.digit(k) == 0 ? t * x : ipoly_mul_affine(x, s, shift);
  }
  return x;
}

Dyadic vector_field_vm_exact(const Dyadic& alpha, int m, std::size_t n) {
  check_alpha(alpha);
  if (m < 1) throw DomainError("vector_field_vm: m must be >= 1");
  if (alpha == Dyadic(1)) return Dyadic(0);
  return degree_m_scalar_orbit(m, pi_inverse(alpha, n), n).coeff(1);
}

Complex vector_field_vm(double x, int m, std::size_t n) {
  if (m < 1) throw DomainError("vector_field_vm: m must be >= 1");
  if (!(x >= 0.0 && x <= static_cast<double>(m))) {
    throw DomainError("vector_field_vm: x = " + std::to_string(x) + " outside [0, " + std::to_string(m) + "]");
  }
  // x / m is in general not dyadic; its first n digits are enough.
  const double alpha = x / static_cast<double>(m);
  if (alpha == 1.0) return {0.0, 0.0};
  return {0.0, vector_field_vm_exact(Dyadic::from_double(alpha), m, n).to_double()};
}

}  // namespace bezier_ifs
