#include "bezier_ifs/digits.hpp"

#include "bezier_ifs/errors.hpp"

namespace bezier_ifs {

DigitSeq::DigitSeq(std::vector<std::uint8_t> prefix, Tail tail) : bits_(std::move(prefix)), tail_(tail) {
  for (auto b : bits_)
    if (b > 1) throw DomainError("binary digit out of range: " + std::to_string(b));
  strip();
}

DigitSeq DigitSeq::parse(std::string_view bits) {
  std::vector<std::uint8_t> v;
  v.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError(std::string("not a binary digit: '") + c + "'");
    v.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return DigitSeq(std::move(v));
}

void DigitSeq::strip() {
  const std::uint8_t t = tail_ == Tail::Ones ? 1 : 0;
  while (!bits_.empty() && bits_.back() == t) bits_.pop_back();
}

int DigitSeq::digit(std::size_t k) const {
  if (k == 0) throw DomainError("digits are 1-indexed");
  if (k <= bits_.size()) return bits_[k - 1];
  return tail_ == Tail::Ones ? 1 : 0;
}

std::vector<std::uint8_t> DigitSeq::prefix(std::size_t n) const {
  std::vector<std::uint8_t> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = static_cast<std::uint8_t>(digit(k));
  return out;
}

DigitSeq DigitSeq::canonicalized() const {
  if (is_canonical()) return *this;
  // After strip() the stored prefix ends in 0: (w, 0, 1^inf) = (w, 1, 0^inf).
  std::vector<std::uint8_t> v = bits_;
  v.back() = 1;
  return DigitSeq(std::move(v));
}

Dyadic DigitSeq::r(std::size_t n) const {
  Dyadic acc;
  for (std::size_t k = 1; k <= n; ++k)
    if (digit(k) != 0) acc += Dyadic::pow2(-static_cast<int>(k));
  return acc;
}

int DigitSeq::u(std::size_t n) const {
  int count = 0;
  for (std::size_t k = 1; k <= n; ++k) count += digit(k);
  return count;
}

std::string DigitSeq::to_string() const {
  std::string s = "(";
  for (auto b : bits_) s += static_cast<char>('0' + b);
  s += tail_ == Tail::Ones ? "1^inf)" : "0^inf)";
  return s;
}

}  // namespace bezier_ifs
