#include "skm/validity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace skm {

long ConfusionMatrix::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0L);
}

double dunn_index(const Matrix& points, const std::vector<int>& assignments) {
    if (assignments.size() != points.rows)
        throw std::invalid_argument("dunn_index: assignment length mismatch");

    // Group member indices per non-empty cluster.
    int max_id = -1;
    for (int a : assignments) max_id = std::max(max_id, a);
    std::vector<std::vector<std::size_t>> members(max_id + 1);
    for (std::size_t i = 0; i < assignments.size(); ++i) members[assignments[i]].push_back(i);
    std::erase_if(members, [](const auto& m) { return m.empty(); });

    if (members.size() < 2)
        throw std::domain_error("dunn_index: needs at least 2 non-empty clusters");

    double max_diameter = 0.0;
    for (const auto& m : members)
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b)
                max_diameter = std::max(
                    max_diameter, squared_distance(points.row(m[a]), points.row(m[b])));
    if (max_diameter == 0.0)
        throw std::domain_error("dunn_index: undefined, every cluster is a singleton");

    double min_linkage = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < members.size(); ++p)
        for (std::size_t q = p + 1; q < members.size(); ++q)
            for (std::size_t a : members[p])
                for (std::size_t b : members[q])
                    min_linkage =
                        std::min(min_linkage, squared_distance(points.row(a), points.row(b)));

    return std::sqrt(min_linkage / max_diameter);
}

double jagota_index(const Matrix& points, const std::vector<int>& assignments,
                    const Matrix& centroids) {
    if (assignments.size() != points.rows)
        throw std::invalid_argument("jagota_index: assignment length mismatch");
    if (centroids.cols != points.cols)
        throw std::invalid_argument("jagota_index: centroid dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < points.rows; ++i)
        sum += distance(points.row(i), centroids.row(assignments[i]));
    return sum / static_cast<double>(points.rows);
}

ConfusionMatrix confusion(const std::vector<int>& assignments, const std::vector<int>& labels,
                          std::size_t k, std::size_t c) {
    if (assignments.size() != labels.size())
        throw std::invalid_argument("confusion: input length mismatch");
    ConfusionMatrix cm;
    cm.clusters = k;
    cm.classes = c;
    cm.counts.assign(k * c, 0);
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        const int a = assignments[i], y = labels[i];
        if (a < 0 || static_cast<std::size_t>(a) >= k || y < 0 ||
            static_cast<std::size_t>(y) >= c)
            throw std::out_of_range("confusion: id out of range");
        ++cm.at(a, y);
    }
    return cm;
}

double accuracy(const ConfusionMatrix& cm) {
    if (cm.clusters != cm.classes)
        throw std::invalid_argument("accuracy: needs as many clusters as classes");
    const std::size_t k = cm.clusters;
    if (k > 10) throw std::invalid_argument("accuracy: more than 10 clusters unsupported");
    const long n = cm.total();
    if (n == 0) throw std::invalid_argument("accuracy: empty confusion matrix");

    // dp[mask] = best matched count assigning clusters 0..popcount(mask)-1 to
    // the class subset in mask.
    std::vector<long> dp(std::size_t{1} << k, -1);
    dp[0] = 0;
    for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
        if (dp[mask] < 0) continue;
        const std::size_t cluster = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t cls = 0; cls < k; ++cls) {
            if (mask & (std::size_t{1} << cls)) continue;
            const std::size_t next = mask | (std::size_t{1} << cls);
            dp[next] = std::max(dp[next], dp[mask] + cm.at(cluster, cls));
        }
    }
    return static_cast<double>(dp.back()) / static_cast<double>(n);
}

}  // namespace skm
