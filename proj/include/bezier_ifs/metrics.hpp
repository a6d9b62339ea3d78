#pragma once

// Hausdorff distance between finite planar point sets.

#include "bezier_ifs/point_cloud.hpp"

#include <complex>
#include <cstddef>
#include <span>

namespace bezier_ifs {

struct DistanceReport {
  double d_AB = 0.0;  ///< max_{a in A} min_{b in B} |a - b|
  double d_BA = 0.0;
  double d_H = 0.0;   ///< max(d_AB, d_BA)
  std::complex<double> witness_a;  ///< pair (a, b) with |a - b| = d_H
  std::complex<double> witness_b;
};

/// Directed distance together with the pair that attains it. Among equal
/// distances the smallest index in A, then in B, is reported.
struct DirectedDistance {
  double value = 0.0;
  std::size_t from = 0;  ///< index in the first set
  std::size_t to = 0;    ///< index of its nearest neighbour in the second set
};

/// Grid-accelerated directed distance; identical to the brute force result.
DirectedDistance directed_distance(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                                   unsigned threads = 0);
/// O(|A| |B|) reference.
DirectedDistance directed_distance_brute(std::span<const std::complex<double>> a,
                                         std::span<const std::complex<double>> b);

/// d(A, B). Throws DomainError for an empty or non-finite input.
double dist_asym(const PointCloud& a, const PointCloud& b);
double dist_asym_brute(const PointCloud& a, const PointCloud& b);

DistanceReport hausdorff(const PointCloud& a, const PointCloud& b, unsigned threads = 0);
DistanceReport hausdorff_brute(const PointCloud& a, const PointCloud& b);

}  // namespace bezier_ifs
