#include "bezier_ifs/binom.hpp"

#include <limits>

namespace bezier_ifs {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
  }
  // prod_{i<k} (n - i) / (i + 1); every partial quotient is an integer.
  __int128 acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<std::int64_t>::max() ||
        acc < std::numeric_limits<std::int64_t>::min()) {
      throw ResourceError("binom overflow for n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace bezier_ifs
