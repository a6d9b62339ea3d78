#pragma once

// Matrix forms of de Casteljau subdivision with a complex parameter.
//
// Everything here is templated on the scalar so the same code runs on the
// exact path (ComplexD, IBetaPoly) and the double path (std::complex<double>).

#include "bezier_ifs/affine.hpp"
#include "bezier_ifs/binom.hpp"
#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bezier_ifs {

/// Point of the Bezier curve at parameter t, by repeated linear interpolation.
template <class S>
S eval_point(std::span<const S> controls, const S& t) {
  if (controls.empty()) throw DomainError("eval_point: empty control polygon");
  std::vector<S> p(controls.begin(), controls.end());
  const S s = from_int<S>(1) - t;
  for (std::size_t k = 1; k < p.size(); ++k)
    for (std::size_t i = 0; i + k < p.size(); ++i) p[i] = s * p[i] + t * p[i + 1];
  return p[0];
}

template <class S>
struct Subdivision {
  std::vector<S> left;
  std::vector<S> right;
};

/// Splits the control polygon at t. left[i] = p_0^i(t), right[i] = p_i^{n-i}(t)
/// read off the de Casteljau triangle.
template <class S>
Subdivision<S> subdivide(std::span<const S> controls, const S& t) {
  if (controls.size() < 2) throw DomainError("subdivide: need at least 2 control points");
  const std::size_t n = controls.size() - 1;
  std::vector<S> p(controls.begin(), controls.end());
  Subdivision<S> out;
  out.left.reserve(n + 1);
  out.right.resize(n + 1);
  out.left.push_back(p[0]);
  out.right[n] = p[n];
  const S s = from_int<S>(1) - t;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i + k <= n; ++i) p[i] = s * p[i] + t * p[i + 1];
    out.left.push_back(p[0]);
    out.right[n - k] = p[n - k];
  }
  return out;
}

template <class S>
struct SubdivisionMatrices {
  int n = 0;
  S t{};
  Matrix<S> L;  ///< lower triangular, L[i][j] = B^i_j(t)
  Matrix<S> R;  ///< upper triangular, R[i][j] = B^{n-i}_{j-i}(t)
};

template <class S>
SubdivisionMatrices<S> build_LR(int n, const S& t) {
  if (n < 0) throw DomainError("build_LR: negative degree");
  const auto size = static_cast<std::size_t>(n) + 1;
  SubdivisionMatrices<S> m{n, t, Matrix<S>(size, size), Matrix<S>(size, size)};
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) m.L(i, j) = bernstein(i, j, t);
    for (int j = i; j <= n; ++j) m.R(i, j) = bernstein(n - i, j - i, t);
  }
  return m;
}

/// Binomial eigenvector matrix of L(t): S[i][j] = binom(i,j),
/// Sinv[i][j] = (-1)^(i+j) binom(i,j).
struct ConjugacyS {
  int n = 0;
  Matrix<std::int64_t> S;
  Matrix<std::int64_t> Sinv;
};

ConjugacyS conjugacy(int n);

template <class S>
Matrix<S> to_scalar(const Matrix<std::int64_t>& m) {
  return m.map([](std::int64_t v) { return from_int<S>(v); });
}

template <class S>
struct TriangularForms {
  Matrix<S> D;  ///< Sinv L S, diagonal
  Matrix<S> T;  ///< Sinv R S, upper triangular
};

/// Conjugates L(t), R(t) by the binomial matrix with explicit products.
template <class S>
TriangularForms<S> triangular_forms(int n, const S& t) {
  const auto lr = build_LR(n, t);
  const auto c = conjugacy(n);
  const Matrix<S> s = to_scalar<S>(c.S);
  const Matrix<S> sinv = to_scalar<S>(c.Sinv);
  return {sinv * lr.L * s, sinv * lr.R * s};
}

/// diag(1, t, ..., t^n).
template <class S>
Matrix<S> closed_form_D(int n, const S& t) {
  Matrix<S> d(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) d(i, i) = ipow(t, static_cast<unsigned>(i));
  return d;
}

/// Closed form binom(n-i, n-j) t^(j-i) (1-t)^i of the conjugated R(t).
template <class S>
Matrix<S> closed_form_T(int n, const S& t) {
  Matrix<S> m(n + 1, n + 1);
  const S s = from_int<S>(1) - t;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      m(i, j) = from_int<S>(binom(n - i, n - j)) * ipow(t, static_cast<unsigned>(j - i)) *
                ipow(s, static_cast<unsigned>(i));
  return m;
}

/// Entry (i,j) of Sinv R S written as the double binomial sum
/// sum_{l,k} (-1)^(i+l) C(i,l) C(n-l,k-l) C(k,j) t^(k-l) (1-t)^(n-k).
template <class S>
S double_sum_T(int n, int i, int j, const S& t) {
  const S s = from_int<S>(1) - t;
  S acc = from_int<S>(0);
  for (int l = 0; l <= i; ++l) {
    for (int k = l; k <= n; ++k) {
      const std::int64_t c = binom(i, l) * binom(n - l, k - l) * binom(k, j);
      if (c == 0) continue;
      const std::int64_t sign = ((i + l) % 2 == 0) ? 1 : -1;
      acc += from_int<S>(sign * c) * ipow(t, static_cast<unsigned>(k - l)) *
             ipow(s, static_cast<unsigned>(n - k));
    }
  }
  return acc;
}

/// Checks the recurrences satisfied by T^(n) = Sinv R(t) S (taken from
/// triangular_forms at degrees n and n+1), with T^(n)_{i,n+1} := 0:
///
///   row recurrence   T_{i+1,j+1} = (1-t) T_{i,j} - t T_{i+1,j}, i < n, j <= n
///   degree step      T^(n+1)_{i+1,j+1} = (1-t) T^(n)_{i,j},   i, j <= n
///   Pascal step      T^(n+1)_{i+1,j+1} + T^(n+1)_{i,j+1} = T^(n)_{i,j+1} + T^(n)_{i,j}
///
/// Returns the name and indices of the first violated identity, if any.
template <class S>
std::optional<std::string> corollary_violation(const Matrix<S>& tn, const Matrix<S>& tn1, const S& t,
                                               double tol = 0.0) {
  const int n = static_cast<int>(tn.rows()) - 1;
  const S s = from_int<S>(1) - t;
  const S zero = from_int<S>(0);
  auto at = [&](const Matrix<S>& m, int i, int j) -> S {
    const int size = static_cast<int>(m.rows());
    return (i < size && j < size) ? m(i, j) : zero;
  };
  auto where = [](const char* name, int i, int j) {
    return std::string(name) + " at i=" + std::to_string(i) + " j=" + std::to_string(j);
  };
  for (int i = 0; i + 1 <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (!scalar_close(at(tn, i + 1, j + 1), s * at(tn, i, j) - t * at(tn, i + 1, j), tol))
        return where("row recurrence T[i+1][j+1] = (1-t)T[i][j] - tT[i+1][j]", i, j);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (!scalar_close(at(tn1, i + 1, j + 1), s * at(tn, i, j), tol))
        return where("degree step T(n+1)[i+1][j+1] = (1-t)T(n)[i][j]", i, j);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (!scalar_close(at(tn1, i + 1, j + 1) + at(tn1, i, j + 1), at(tn, i, j + 1) + at(tn, i, j), tol))
        return where("Pascal step T(n+1)[i+1][j+1] + T(n+1)[i][j+1] = T(n)[i][j+1] + T(n)[i][j]", i, j);
  return std::nullopt;
}

template <class S>
bool corollary_identities(int n, const S& t, double tol = 0.0) {
  if (n < 1) throw DomainError("corollary_identities: need n >= 1");
  return !corollary_violation(triangular_forms(n, t).T, triangular_forms(n + 1, t).T, t, tol);
}

template <class S>
struct MapPair {
  AffineMapH<S> M0;
  AffineMapH<S> M1;
};

/// Type IV pair M0[i][j] = binom(0,i-j) t^i, M1[i][j] = binom(n-j,n-i) t^(i-j) (1-t)^j
/// acting on column vectors (1, x_1, ..., x_n).
template <class S>
MapPair<S> type_iv_ifs(int n, const S& t) {
  if (n < 1) throw DomainError("type_iv_ifs: need n >= 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  Matrix<S> m0(size, size);
  Matrix<S> m1(size, size);
  const S s = from_int<S>(1) - t;
  for (int i = 0; i <= n; ++i) {
    m0(i, i) = ipow(t, static_cast<unsigned>(i));
    for (int j = 0; j <= i; ++j)
      m1(i, j) = from_int<S>(binom(n - j, n - i)) * ipow(t, static_cast<unsigned>(i - j)) *
                 ipow(s, static_cast<unsigned>(j));
  }
  return {AffineMapH<S>(std::move(m0), Rep::IV), AffineMapH<S>(std::move(m1), Rep::IV)};
}

/// Change-of-basis matrix built from a control column: first column the
/// controls, columns 1..n-1 the identity columns e_0..e_{n-2}, last column
/// all ones. det P = +-(p_{n-1} - p_n).
template <class S>
Matrix<S> control_matrix(std::span<const S> controls) {
  if (controls.size() < 2) throw ConstructionError("control_matrix: need at least 2 control points");
  const std::size_t size = controls.size();
  const std::size_t n = size - 1;
  Matrix<S> p(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    p(i, 0) = controls[i];
    p(i, n) = from_int<S>(1);
  }
  for (std::size_t j = 1; j < n; ++j) p(j - 1, j) = from_int<S>(1);
  return p;
}

template <class S>
struct ControlIfs {
  Matrix<S> P;
  MapPair<S> maps;  ///< type II, acting on row vectors (x_0, ..., x_{n-1}, 1)
};

/// M0 = P^-1 L(t) P and M1 = P^-1 R(t) P.
template <class S>
ControlIfs<S> build_ifs_from_controls(std::span<const S> controls, const S& t) {
  if (controls.size() < 2) throw ConstructionError("build_ifs_from_controls: need at least 2 control points");
  const std::size_t n = controls.size() - 1;
  if (scalar_close(controls[n - 1], controls[n], is_exact_v<S> ? 0.0 : kPivotTolerance)) {
    throw ConstructionError("the last two entries of the control vector must differ");
  }
  Matrix<S> p = control_matrix(controls);
  const Matrix<S> pinv = inverse(p);
  const auto lr = build_LR(static_cast<int>(n), t);
  ControlIfs<S> out{std::move(p), {}};
  out.maps.M0 = AffineMapH<S>(pinv * lr.L * out.P, Rep::II);
  out.maps.M1 = AffineMapH<S>(pinv * lr.R * out.P, Rep::II);
  return out;
}

}  // namespace bezier_ifs
