#include "bezier_ifs/decasteljau.hpp"

namespace bezier_ifs {

ConjugacyS conjugacy(int n) {
  if (n < 0) throw DomainError("conjugacy: negative degree");
  const auto size = static_cast<std::size_t>(n) + 1;
  ConjugacyS c{n, Matrix<std::int64_t>(size, size), Matrix<std::int64_t>(size, size)};
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      c.S(i, j) = binom(i, j);
      c.Sinv(i, j) = ((i + j) % 2 == 0 ? 1 : -1) * binom(i, j);
    }
  }
  return c;
}

}  // namespace bezier_ifs
