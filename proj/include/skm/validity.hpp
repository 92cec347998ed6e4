#pragma once

#include <vector>

#include "skm/matrix.hpp"

namespace skm {

/// counts[k][c] = number of objects in predicted cluster k with true class c.
struct ConfusionMatrix {
    std::size_t clusters = 0;
    std::size_t classes = 0;
    std::vector<long> counts;  // row-major clusters x classes

    long& at(std::size_t k, std::size_t c) { return counts[k * classes + c]; }
    long at(std::size_t k, std::size_t c) const { return counts[k * classes + c]; }
    long total() const;
};

/// Dunn index: minimum single-linkage distance between cluster pairs divided
/// by the maximum intra-cluster diameter. Larger is better. Throws
/// std::domain_error with fewer than 2 non-empty clusters or when every
/// cluster is a singleton (zero denominator).
double dunn_index(const Matrix& points, const std::vector<int>& assignments);

/// Jagota index: mean Euclidean distance of objects to their assigned
/// centroid, summed as each cluster's share sum_k (1/n) sum_{x in C_k} ||x-c_k||.
/// Smaller is better.
double jagota_index(const Matrix& points, const std::vector<int>& assignments,
                    const Matrix& centroids);

ConfusionMatrix confusion(const std::vector<int>& assignments, const std::vector<int>& labels,
                          std::size_t k, std::size_t c);

/// Best classification rate over bijections from clusters to classes, found by
/// an exact assignment solver (subset DP). Requires K == C, K <= 10.
double accuracy(const ConfusionMatrix& cm);

}  // namespace skm
