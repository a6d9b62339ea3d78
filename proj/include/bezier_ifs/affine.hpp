#pragma once

// Affine maps of C^n written as (n+1)x(n+1) matrices in homogeneous
// coordinates. The four layouts differ in where the identity row/column sits
// and in which side they act on:
//
//   I   [[A, b], [0, 1]]   column vectors, homogeneous entry last
//   II  [[A, 0], [b, 1]]   row vectors,    homogeneous entry last
//   III [[1, b], [0, A]]   row vectors,    homogeneous entry first
//   IV  [[1, 0], [b, A]]   column vectors, homogeneous entry first
//
// Transposition swaps I<->II and III<->IV; the anti-diagonal reflection
// swaps I<->IV and II<->III.

#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bezier_ifs {

enum class Rep { I, II, III, IV };

inline std::string to_string(Rep rep);

constexpr bool acts_on_columns(Rep rep) { return rep == Rep::I || rep == Rep::IV; }
constexpr bool homogeneous_first(Rep rep) { return rep == Rep::III || rep == Rep::IV; }
constexpr Rep transposed(Rep rep) {
  switch (rep) {
    case Rep::I: return Rep::II;
    case Rep::II: return Rep::I;
    case Rep::III: return Rep::IV;
    case Rep::IV: return Rep::III;
  }
  return rep;
}
constexpr Rep reflected(Rep rep) {
  switch (rep) {
    case Rep::I: return Rep::IV;
    case Rep::IV: return Rep::I;
    case Rep::II: return Rep::III;
    case Rep::III: return Rep::II;
  }
  return rep;
}

/// Default tolerance for the identity row/column of double-path matrices.
inline constexpr double kShapeTolerance = 1e-9;
/// Allowed drift of the homogeneous entry after applying a map.
inline constexpr double kHomogeneousTolerance = 1e-12;

template <class S>
class AffineMapH {
 public:
  AffineMapH() = default;

  /// Validates the identity row/column demanded by `rep`. Exact scalars must
  /// match exactly; doubles within `tol`, after which the entries are snapped
  /// to exact 0/1.
  AffineMapH(Matrix<S> m, Rep rep, double tol = kShapeTolerance) : mat_(std::move(m)), rep_(rep) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
      throw ConstructionError("affine map needs a square matrix of size >= 1");
    }
    const std::size_t n = mat_.rows();
    const std::size_t h = homogeneous_index();
    const bool check_row = rep_ == Rep::I || rep_ == Rep::IV;
    for (std::size_t k = 0; k < n; ++k) {
      S& entry = check_row ? mat_(h, k) : mat_(k, h);
      const S want = from_int<S>(k == h ? 1 : 0);
      if (!scalar_close(entry, want, tol)) {
        throw ConstructionError("matrix is not of type " + to_string(rep_) + ": identity " +
                                (check_row ? "row" : "column") + " violated at index " +
                                std::to_string(k));
      }
      entry = want;
    }
  }

  Rep rep() const { return rep_; }
  /// Affine dimension n (matrix is (n+1)x(n+1)).
  std::size_t dim() const { return mat_.rows() - 1; }
  const Matrix<S>& matrix() const { return mat_; }
  std::size_t homogeneous_index() const { return homogeneous_first(rep_) ? 0 : mat_.rows() - 1; }

  /// The same map as a matrix acting on column vectors (type I or IV).
  Matrix<S> column_form() const { return acts_on_columns(rep_) ? mat_ : mat_.transpose(); }

  /// Linear part A of x -> A x + b in the map's own coordinate order.
  Matrix<S> linear_part() const {
    const Matrix<S> c = column_form();
    const std::size_t h = homogeneous_index();
    Matrix<S> a(dim(), dim());
    for (std::size_t i = 0, ai = 0; i < c.rows(); ++i) {
      if (i == h) continue;
      for (std::size_t j = 0, aj = 0; j < c.cols(); ++j) {
        if (j == h) continue;
        a(ai, aj++) = c(i, j);
      }
      ++ai;
    }
    return a;
  }

  /// Translation b of x -> A x + b.
  std::vector<S> translation() const {
    const Matrix<S> c = column_form();
    const std::size_t h = homogeneous_index();
    std::vector<S> b;
    b.reserve(dim());
    for (std::size_t i = 0; i < c.rows(); ++i)
      if (i != h) b.push_back(c(i, h));
    return b;
  }

  /// M x; only for types I and IV.
  std::vector<S> apply_column(std::span<const S> x) const {
    if (!acts_on_columns(rep_)) {
      throw DomainError("type " + to_string(rep_) + " map acts on row vectors, not columns");
    }
    return checked(mul_column(mat_, x));
  }

  /// x M; only for types II and III.
  std::vector<S> apply_row(std::span<const S> x) const {
    if (acts_on_columns(rep_)) {
      throw DomainError("type " + to_string(rep_) + " map acts on column vectors, not rows");
    }
    return checked(mul_row(x, mat_));
  }

  /// Applies the map on the side its type dictates.
  std::vector<S> apply(std::span<const S> x) const {
    return acts_on_columns(rep_) ? apply_column(x) : apply_row(x);
  }

  /// The same map re-expressed in another layout (coordinates are reversed
  /// whenever a reflection is involved).
  AffineMapH converted(Rep target) const {
    AffineMapH out = *this;
    if (out.rep_ == target) return out;
    if (transposed(out.rep_) == target) return out.transposed_map();
    if (reflected(out.rep_) == target) return out.reflected_map();
    return out.transposed_map().reflected_map().converted(target);
  }

  AffineMapH transposed_map() const { return AffineMapH(mat_.transpose(), transposed(rep_), 0.0); }
  AffineMapH reflected_map() const { return AffineMapH(mat_.reflect(), reflected(rep_), 0.0); }

 private:
  std::vector<S> checked(std::vector<S> y) const {
    const std::size_t h = homogeneous_index();
    if (!scalar_close(y[h], from_int<S>(1), kHomogeneousTolerance)) {
      throw DomainError("homogeneous coordinate drifted from 1 after applying a type " +
                        to_string(rep_) + " map");
    }
    y[h] = from_int<S>(1);
    return y;
  }

  Matrix<S> mat_;
  Rep rep_ = Rep::I;
};

inline std::string to_string(Rep rep) {
  switch (rep) {
    case Rep::I: return "I";
    case Rep::II: return "II";
    case Rep::III: return "III";
    case Rep::IV: return "IV";
  }
  return "?";
}

}  // namespace bezier_ifs
