#include "bezier_ifs/dyadic.hpp"

#include "bezier_ifs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace bezier_ifs {

namespace {

BigInt shift_left(const BigInt& v, std::uint32_t k) {
  if (k == 0) return v;
  return v << k;
}

// Exact division by 2^k; the caller guarantees divisibility.
BigInt shift_right_exact(const BigInt& v, std::uint32_t k) {
  if (k == 0) return v;
  if (v.sign() >= 0) return v >> k;
  return -(BigInt(-v) >> k);
}

}  // namespace

Dyadic::Dyadic(std::int64_t value) : num_(value), exp_(0) {}

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

Dyadic Dyadic::pow2(int k) { return Dyadic(1).ldexp(k); }

Dyadic Dyadic::ratio(std::int64_t numerator, std::uint32_t exponent) {
  return Dyadic(BigInt(numerator), exponent);
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto tz = static_cast<std::uint32_t>(boost::multiprecision::lsb(BigInt(boost::multiprecision::abs(num_))));
  const std::uint32_t k = std::min(tz, exp_);
  num_ = shift_right_exact(num_, k);
  exp_ -= k;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::uint32_t e = std::max(exp_, o.exp_);
  num_ = shift_left(num_, e - exp_) + shift_left(o.num_, e - o.exp_);
  exp_ = e;
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ *= o.num_;
  exp_ += o.exp_;
  // Integers may carry even numerators, so the product can need reducing.
  normalize();
  return *this;
}

Dyadic Dyadic::ldexp(int k) const {
  if (is_zero()) return *this;
  Dyadic r = *this;
  if (k < 0) {
    r.exp_ += static_cast<std::uint32_t>(-k);
    r.normalize();
    return r;
  }
  const auto uk = static_cast<std::uint32_t>(k);
  if (r.exp_ >= uk) {
    r.exp_ -= uk;
  } else {
    r.num_ = shift_left(r.num_, uk - r.exp_);
    r.exp_ = 0;
  }
  return r;
}

BigInt Dyadic::floor() const {
  if (exp_ == 0) return num_;
  if (num_.sign() >= 0) return num_ >> exp_;
  const BigInt mag = -num_;
  // ceil(mag / 2^e) for an odd numerator that is never an exact multiple.
  return -((mag >> exp_) + 1);
}

Dyadic Dyadic::frac() const { return *this - Dyadic(floor()); }

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  BigInt mag = boost::multiprecision::abs(num_);
  long shift = 0;
  const auto bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
  if (bits > 62) {
    shift = bits - 62;
    mag >>= static_cast<unsigned>(shift);
  }
  const double m = static_cast<double>(mag.convert_to<std::int64_t>());
  const double v = std::ldexp(m, static_cast<int>(shift - static_cast<long>(exp_)));
  return num_.sign() < 0 ? -v : v;
}

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw NotDyadicError("non-finite double has no dyadic value");
  if (x == 0.0) return Dyadic();
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  return Dyadic(mant).ldexp(e - 53);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  os << num_;
  if (exp_ == 0) return os.str();
  if (exp_ < 63) {
    os << '/' << (std::uint64_t{1} << exp_);
  } else {
    os << "/2^" << exp_;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

bool ComplexD::is_unit() const {
  if (is_zero()) return false;
  const Dyadic n = norm();
  // n = odd / 2^e (or an integer); a unit iff the odd part is 1.
  BigInt odd = n.numerator();
  odd >>= static_cast<unsigned>(boost::multiprecision::lsb(odd));
  return odd == 1;
}

ComplexD ComplexD::inverse() const {
  if (!is_unit()) throw NotDyadicError("inverse of " + to_string() + " is not Gaussian dyadic");
  const Dyadic n = norm();
  // 1/n = 2^(exponent) / 2^lsb(numerator).
  const int k = static_cast<int>(n.exponent()) -
                static_cast<int>(boost::multiprecision::lsb(n.numerator()));
  return conj().ldexp(k);
}

ComplexD& ComplexD::operator+=(const ComplexD& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexD& ComplexD::operator-=(const ComplexD& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexD& ComplexD::operator*=(const ComplexD& o) {
  Dyadic re = re_ * o.re_ - im_ * o.im_;
  Dyadic im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string ComplexD::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string s = re_.to_string();
  s += im_.sign() < 0 ? " - " : " + ";
  s += im_.abs().to_string();
  s += "i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const ComplexD& z) { return os << z.to_string(); }

}  // namespace bezier_ifs
