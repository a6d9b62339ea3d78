#pragma once

#include "bezier_ifs/dyadic.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bezier_ifs {

/// Binary address d = (d_1, d_2, ...): a stored prefix followed by an
/// infinite tail of zeros or ones.
///
/// Dyadic rationals have two expansions; the canonical one ends in 0^inf.
/// The single exception is 1^inf, the address of x = 1. A tail of ones after
/// a prefix containing a zero is representable but not canonical.
class DigitSeq {
 public:
  enum class Tail { Zeros, Ones };

  DigitSeq() = default;
  explicit DigitSeq(std::vector<std::uint8_t> prefix, Tail tail = Tail::Zeros);
  /// Parses a string of '0'/'1' characters followed by 0^inf.
  static DigitSeq parse(std::string_view bits);
  static DigitSeq all_ones() { return DigitSeq({}, Tail::Ones); }

  /// d_k, 1-indexed.
  int digit(std::size_t k) const;
  /// (d_1, ..., d_n).
  std::vector<std::uint8_t> prefix(std::size_t n) const;
  /// Stored prefix, trailing tail-digits stripped.
  const std::vector<std::uint8_t>& stored() const { return bits_; }
  Tail tail() const { return tail_; }

  bool is_all_ones() const { return tail_ == Tail::Ones && bits_.empty(); }
  bool is_canonical() const { return tail_ == Tail::Zeros || is_all_ones(); }
  /// Rewrites (w, 0, 1^inf) as (w, 1, 0^inf); 1^inf is left alone.
  DigitSeq canonicalized() const;

  /// r_n = sum_{k<=n} d_k / 2^k.
  Dyadic r(std::size_t n) const;
  /// u_n = number of ones among d_1..d_n.
  int u(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const DigitSeq&, const DigitSeq&) = default;

 private:
  void strip();

  std::vector<std::uint8_t> bits_;
  Tail tail_ = Tail::Zeros;
};

}  // namespace bezier_ifs
