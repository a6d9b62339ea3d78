#include "bezier_ifs/ibeta_poly.hpp"

#include <algorithm>
#include <sstream>

namespace bezier_ifs {

IBetaPoly::IBetaPoly(std::int64_t c) : IBetaPoly(Dyadic(c)) {}

IBetaPoly::IBetaPoly(Dyadic c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

IBetaPoly::IBetaPoly(std::initializer_list<Dyadic> coeffs) : coeffs_(coeffs) { trim(); }

IBetaPoly::IBetaPoly(std::vector<Dyadic> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IBetaPoly IBetaPoly::half_plus_ibeta() { return IBetaPoly{Dyadic::pow2(-1), Dyadic(1)}; }

IBetaPoly IBetaPoly::monomial(std::size_t k, Dyadic c) {
  std::vector<Dyadic> v(k + 1);
  v[k] = std::move(c);
  return IBetaPoly(std::move(v));
}

void IBetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Dyadic IBetaPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Dyadic(); }

IBetaPoly IBetaPoly::operator-() const {
  IBetaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IBetaPoly& IBetaPoly::operator+=(const IBetaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IBetaPoly& IBetaPoly::operator-=(const IBetaPoly& o) { return *this += -o; }

IBetaPoly& IBetaPoly::operator*=(const IBetaPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Dyadic> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IBetaPoly IBetaPoly::ldexp(int k) const {
  IBetaPoly r = *this;
  for (auto& c : r.coeffs_) c = c.ldexp(k);
  return r;
}

std::complex<double> IBetaPoly::eval(double beta) const {
  // Horner in the variable i*beta.
  const std::complex<double> x(0.0, beta);
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

ComplexD IBetaPoly::eval(const Dyadic& beta) const {
  const ComplexD x(Dyadic(), beta);
  ComplexD acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + ComplexD(*it);
  return acc;
}

std::string IBetaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    if (k == 1) os << "*(ib)";
    if (k > 1) os << "*(ib)^" << k;
  }
  return os.str();
}

IBetaPoly ipoly_mul_affine(const IBetaPoly& p, const IBetaPoly& scale, const IBetaPoly& shift) {
  return scale * p + shift;
}

}  // namespace bezier_ifs
