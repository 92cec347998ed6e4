#pragma once

#include <random>
#include <span>
#include <vector>

#include "skm/kmeans.hpp"
#include "skm/matrix.hpp"
#include "skm/optimize.hpp"

namespace skm {

struct SeedingConfig {
    std::size_t k = 2;
    int depth = 3;  // inner Lloyd cap per objective evaluation; 0 = assignment-only SSE
    DsConfig ds;
    int final_max_iter = 300;
};

/// Row-major flattening of a K x d centroid matrix.
std::vector<double> encode(const Matrix& centroids);

/// Inverse of encode. Throws std::invalid_argument on a length mismatch.
Matrix decode(std::span<const double> v, std::size_t k, std::size_t d);

/// Statistics accumulated by a seeding objective across evaluations.
struct SeedingObjectiveStats {
    std::uint64_t inner_lloyd_iterations = 0;
};

/// Objective over R^(K*d): the SSE of a depth-capped k-means run started from
/// the decoded centroids. stats, when given, outlives the objective and
/// accumulates inner iteration counts.
Objective seeding_objective(const Matrix& points, std::size_t k, int depth,
                            SeedingObjectiveStats* stats = nullptr);

struct SeedingResult {
    Clustering clustering;           // final full k-means run
    OptimizerResult search;          // the simplex search that picked the seeds
    Matrix initial_centroids;        // decoded best point handed to k-means
    SeedingObjectiveStats objective_stats;
};

/// The seeded pipeline: search the K*d-fold product of the data bounding box
/// with improved downhill simplex over the depth-capped SSE objective, decode
/// the best point into initial centroids, then run k-means to convergence.
SeedingResult simplex_seeded_kmeans(const Matrix& points, const SeedingConfig& cfg,
                                    std::mt19937_64& rng,
                                    const LloydObserver& final_observer = {});

}  // namespace skm
