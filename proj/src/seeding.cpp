#include "skm/seeding.hpp"

#include <algorithm>
#include <stdexcept>

#include "skm/dataset.hpp"

namespace skm {

std::vector<double> encode(const Matrix& centroids) {
    return centroids.values;
}

Matrix decode(std::span<const double> v, std::size_t k, std::size_t d) {
    if (v.size() != k * d)
        throw std::invalid_argument("decode: vector length does not equal K*d");
    Matrix c(k, d);
    std::copy(v.begin(), v.end(), c.values.begin());
    return c;
}

Objective seeding_objective(const Matrix& points, std::size_t k, int depth,
                            SeedingObjectiveStats* stats) {
    if (k > points.rows) throw std::invalid_argument("seeding_objective: k exceeds point count");
    if (depth < 0) throw std::invalid_argument("seeding_objective: depth must be >= 0");
    const std::size_t d = points.cols;
    return Objective(k * d, [&points, k, d, depth, stats](std::span<const double> v) {
        const Matrix init = decode(v, k, d);
        if (depth == 0) return assign(points, init).sse;
        const Clustering c = lloyd(points, init, depth, 0.0);
        if (stats) stats->inner_lloyd_iterations += static_cast<std::uint64_t>(c.iterations);
        return c.sse;
    });
}

SeedingResult simplex_seeded_kmeans(const Matrix& points, const SeedingConfig& cfg,
                                    std::mt19937_64& rng, const LloydObserver& final_observer) {
    if (cfg.k < 1 || cfg.k > points.rows)
        throw std::invalid_argument("simplex_seeded_kmeans: invalid cluster count");

    SeedingResult result;
    const std::size_t d = points.cols;
    const BoundingBox data_box = bounding_box(points);
    const BoundingBox search_box = data_box.tiled(cfg.k);

    Objective obj = seeding_objective(points, cfg.k, cfg.depth, &result.objective_stats);

    const std::vector<double> x0 = encode(forgy_init(points, cfg.k, rng));
    std::vector<double> steps(search_box.dims());
    for (std::size_t j = 0; j < steps.size(); ++j) {
        const double width = search_box.upper[j] - search_box.lower[j];
        steps[j] = cfg.ds.initial_step * (width > 0.0 ? width : 1e-9);
    }

    Simplex s0 = init_simplex(obj, x0, steps);
    result.search = improved_downhill_simplex(obj, std::move(s0), search_box, cfg.ds, rng);

    result.initial_centroids = decode(result.search.best_point, cfg.k, d);
    result.clustering =
        lloyd(points, result.initial_centroids, cfg.final_max_iter, 0.0, final_observer);
    return result;
}

}  // namespace skm
