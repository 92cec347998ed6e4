#include "skm/matrix.hpp"

#include <cmath>

namespace skm {

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

double BoundingBox::diameter() const {
    double s = 0.0;
    for (std::size_t j = 0; j < lower.size(); ++j) {
        const double w = upper[j] - lower[j];
        s += w * w;
    }
    return std::sqrt(s);
}

BoundingBox BoundingBox::tiled(std::size_t k) const {
    BoundingBox out;
    out.lower.reserve(k * lower.size());
    out.upper.reserve(k * upper.size());
    for (std::size_t i = 0; i < k; ++i) {
        out.lower.insert(out.lower.end(), lower.begin(), lower.end());
        out.upper.insert(out.upper.end(), upper.begin(), upper.end());
    }
    return out;
}

}  // namespace skm
