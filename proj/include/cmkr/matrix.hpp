#pragma once

#include <cstddef>
#include <vector>

namespace cmkr {

// Minimal dense row-major matrix of doubles. All distance math accumulates
// in 64-bit regardless of the 32-bit feature storage.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool same_shape(const Mat& other) const { return rows == other.rows && cols == other.cols; }
};

}  // namespace cmkr
