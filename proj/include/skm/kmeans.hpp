#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "skm/matrix.hpp"

namespace skm {

struct AssignResult {
    std::vector<int> assignments;  // nearest centroid per object, ties -> lowest id
    double sse = 0.0;
};

struct Clustering {
    std::vector<int> assignments;
    Matrix centroids;
    double sse = 0.0;
    int iterations = 0;              // completed assign/update rounds
    std::vector<double> sse_trace;   // SSE at each assignment pass, non-increasing
};

/// Observer invoked after each assignment pass of lloyd():
/// (iteration index starting at 0, assignments, centroids used, sse).
using LloydObserver =
    std::function<void(int, const std::vector<int>&, const Matrix&, double)>;

/// Nearest-centroid assignment under squared Euclidean distance.
AssignResult assign(const Matrix& points, const Matrix& centroids);

/// Mean of each cluster's members. An empty cluster is re-seeded to the object
/// farthest (squared distance) from its own cluster's fresh centroid; each such
/// object donates at most once per call.
Matrix update_centroids(const Matrix& points, const std::vector<int>& assignments,
                        std::size_t k, const Matrix& prev);

/// Lloyd's iteration: alternate assign/update until assignments stop changing,
/// the SSE improvement drops below tol (tol > 0 only), or max_iter rounds.
Clustering lloyd(const Matrix& points, const Matrix& init, int max_iter = 300,
                 double tol = 0.0, const LloydObserver& observer = {});

/// K distinct rows sampled uniformly without replacement.
Matrix forgy_init(const Matrix& points, std::size_t k, std::mt19937_64& rng);

/// Process-wide count of point-to-centroid distance evaluations, for empirical
/// cost-model checks. Not reset by library calls.
std::uint64_t distance_evaluations();
void reset_distance_evaluations();

}  // namespace skm
