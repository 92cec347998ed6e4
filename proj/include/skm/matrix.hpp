#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace skm {

/// Dense row-major matrix of doubles. Rows are observations, columns attributes.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // rows*cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), values(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return values[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }

    std::span<const double> row(std::size_t i) const { return {values.data() + i * cols, cols}; }
    std::span<double> row(std::size_t i) { return {values.data() + i * cols, cols}; }

    bool operator==(const Matrix&) const = default;
};

/// Axis-aligned box; lower[j] <= upper[j] for all j.
struct BoundingBox {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dims() const { return lower.size(); }

    bool contains(std::span<const double> x) const {
        if (x.size() != lower.size()) return false;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] < lower[j] || x[j] > upper[j]) return false;
        return true;
    }

    /// Euclidean length of the box diagonal.
    double diameter() const;

    /// Cartesian product of this box with itself, k times.
    BoundingBox tiled(std::size_t k) const;
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b);

}  // namespace skm
