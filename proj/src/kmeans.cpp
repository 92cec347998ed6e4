#include "skm/kmeans.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace skm {

namespace {
std::atomic<std::uint64_t> g_distance_evals{0};
}

std::uint64_t distance_evaluations() { return g_distance_evals.load(); }
void reset_distance_evaluations() { g_distance_evals.store(0); }

AssignResult assign(const Matrix& points, const Matrix& centroids) {
    if (centroids.rows == 0 || centroids.cols != points.cols)
        throw std::invalid_argument("assign: centroid dimensions do not match points");
    AssignResult r;
    r.assignments.resize(points.rows);
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto x = points.row(i);
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < centroids.rows; ++k) {
            const double d = squared_distance(x, centroids.row(k));
            if (d < best_d) {  // strict: ties keep the lowest id
                best_d = d;
                best = static_cast<int>(k);
            }
        }
        r.assignments[i] = best;
        r.sse += best_d;
    }
    g_distance_evals.fetch_add(points.rows * centroids.rows, std::memory_order_relaxed);
    return r;
}

Matrix update_centroids(const Matrix& points, const std::vector<int>& assignments,
                        std::size_t k, const Matrix& prev) {
    if (assignments.size() != points.rows)
        throw std::invalid_argument("update_centroids: assignment length mismatch");
    Matrix c = prev;
    std::vector<std::size_t> count(k, 0);
    Matrix sums(k, points.cols, 0.0);
    for (std::size_t i = 0; i < points.rows; ++i) {
        const int a = assignments[i];
        ++count[a];
        for (std::size_t j = 0; j < points.cols; ++j) sums(a, j) += points(i, j);
    }
    for (std::size_t kk = 0; kk < k; ++kk)
        if (count[kk] > 0)
            for (std::size_t j = 0; j < points.cols; ++j)
                c(kk, j) = sums(kk, j) / static_cast<double>(count[kk]);

    // Empty clusters grab the object farthest from its own fresh centroid.
    std::vector<bool> donated(points.rows, false);
    for (std::size_t kk = 0; kk < k; ++kk) {
        if (count[kk] > 0) continue;
        std::size_t far = points.rows;
        double far_d = -1.0;
        for (std::size_t i = 0; i < points.rows; ++i) {
            if (donated[i]) continue;
            const double d = squared_distance(points.row(i), c.row(assignments[i]));
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        g_distance_evals.fetch_add(points.rows, std::memory_order_relaxed);
        if (far == points.rows) continue;  // fewer objects than empty clusters
        donated[far] = true;
        for (std::size_t j = 0; j < points.cols; ++j) c(kk, j) = points(far, j);
    }
    return c;
}

Clustering lloyd(const Matrix& points, const Matrix& init, int max_iter, double tol,
                 const LloydObserver& observer) {
    if (init.cols != points.cols) throw std::invalid_argument("lloyd: dimension mismatch");
    if (init.rows > points.rows) throw std::invalid_argument("lloyd: more centroids than points");
    if (max_iter < 1) throw std::invalid_argument("lloyd: max_iter must be >= 1");

    Clustering out;
    out.centroids = init;
    std::vector<int> prev;
    double prev_sse = std::numeric_limits<double>::infinity();
    while (true) {
        AssignResult a = assign(points, out.centroids);
        out.sse_trace.push_back(a.sse);
        if (observer) observer(static_cast<int>(out.sse_trace.size()) - 1, a.assignments,
                               out.centroids, a.sse);
        out.assignments = std::move(a.assignments);
        out.sse = a.sse;
        if (out.assignments == prev) break;            // fixed point
        if (out.iterations >= max_iter) break;         // budget
        if (tol > 0.0 && prev_sse - a.sse < tol && !prev.empty()) break;
        out.centroids = update_centroids(points, out.assignments, init.rows, out.centroids);
        prev = out.assignments;
        prev_sse = out.sse;
        ++out.iterations;
    }
    return out;
}

Matrix forgy_init(const Matrix& points, std::size_t k, std::mt19937_64& rng) {
    if (k > points.rows) throw std::invalid_argument("forgy_init: k exceeds point count");
    // Partial Fisher-Yates over row indices.
    std::vector<std::size_t> idx(points.rows);
    std::iota(idx.begin(), idx.end(), 0);
    Matrix c(k, points.cols);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
        std::swap(idx[i], idx[pick(rng)]);
        for (std::size_t j = 0; j < points.cols; ++j) c(i, j) = points(idx[i], j);
    }
    return c;
}

}  // namespace skm
