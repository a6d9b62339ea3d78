#include "bezier_ifs/takagi.hpp"

#include "bezier_ifs/errors.hpp"

#include <cmath>
#include <string>

namespace bezier_ifs {

double sigma(double x) {
  const double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

Dyadic sigma(const Dyadic& x) {
  const Dyadic f = x.frac();
  const Dyadic g = Dyadic(1) - f;
  return f < g ? f : g;
}

namespace {

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("takagi: x = " + std::to_string(x) + " outside [0, 1]");
}

}  // namespace

double takagi(double x, int depth) {
  check_unit_interval(x);
  if (depth < 1) throw DomainError("takagi: depth must be >= 1");
  double acc = 0.0;
  for (int n = 0; n < depth; ++n) acc += std::ldexp(sigma(std::ldexp(x, n)), -n);
  return acc;
}

Dyadic takagi(const Dyadic& x) {
  if (x.sign() < 0 || x > Dyadic(1)) throw DomainError("takagi: x = " + x.to_string() + " outside [0, 1]");
  Dyadic acc;
  const auto e = static_cast<int>(x.exponent());
  for (int n = 0; n < e; ++n) acc += sigma(x.ldexp(n)).ldexp(-n);
  return acc;
}

Dyadic takagi_by_increments(const Dyadic& x) {
  if (x.sign() < 0 || x > Dyadic(1)) throw DomainError("takagi: x = " + x.to_string() + " outside [0, 1]");
  if (x == Dyadic(1)) {
    // T(1) = T(1/2) + (1 - 2*1) / 2.
    return takagi_by_increments(Dyadic::pow2(-1)) + Dyadic::ratio(-1, 1);
  }
  Dyadic acc;
  Dyadic rest = x;
  int ones = 0;
  for (int k = 1; !rest.is_zero(); ++k) {
    rest = rest.ldexp(1);
    if (rest >= Dyadic(1)) {
      rest -= Dyadic(1);
      acc += Dyadic(k - 2 * ones).ldexp(-k);
      ++ones;
    }
  }
  return acc;
}

IncrementIdentity tak1_increment(const DigitSeq& d, std::size_t n, std::size_t m) {
  if (m < n) throw DomainError("tak1_increment: need m >= n");
  const Dyadic r = d.r(n);
  const int u = d.u(n);
  const Dyadic step = Dyadic::pow2(-static_cast<int>(m));
  IncrementIdentity out{takagi(r + step) - takagi(r),
                        Dyadic(static_cast<std::int64_t>(m) - 2 * u).ldexp(-static_cast<int>(m))};
  if (out.lhs != out.rhs) {
    throw IdentityViolation("T(r_n + 2^-m) - T(r_n) = (m - 2u_n)/2^m fails for d=" + d.to_string() +
                            " n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  return out;
}

}  // namespace bezier_ifs
