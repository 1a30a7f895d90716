#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nnent/errors.hpp"

namespace nnent {

// N points in R^m, row-major.
struct SampleMatrix {
    std::vector<double> data;  // size n * dim
    std::size_t n = 0;
    std::size_t dim = 0;

    SampleMatrix() = default;
    SampleMatrix(std::size_t n_, std::size_t dim_) : data(n_ * dim_, 0.0), n(n_), dim(dim_) {}

    std::span<const double> row(std::size_t i) const { return {data.data() + i * dim, dim}; }
    std::span<double> row(std::size_t i) { return {data.data() + i * dim, dim}; }

    double& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

inline SampleMatrix scaled(const SampleMatrix& s, double a) {
    SampleMatrix out = s;
    for (double& v : out.data) v *= a;
    return out;
}

inline SampleMatrix translated(const SampleMatrix& s, std::span<const double> shift) {
    if (shift.size() != s.dim) throw DomainError("translated: shift dimension mismatch");
    SampleMatrix out = s;
    for (std::size_t i = 0; i < out.n; ++i)
        for (std::size_t j = 0; j < out.dim; ++j) out.at(i, j) += shift[j];
    return out;
}

// Rows of a followed by rows of b.
inline SampleMatrix concat_rows(const SampleMatrix& a, const SampleMatrix& b) {
    if (a.dim != b.dim) throw DomainError("concat_rows: dimension mismatch");
    SampleMatrix out(a.n + b.n, a.dim);
    std::copy(a.data.begin(), a.data.end(), out.data.begin());
    std::copy(b.data.begin(), b.data.end(), out.data.begin() + static_cast<std::ptrdiff_t>(a.data.size()));
    return out;
}

// Columns [begin, end) as a new sample.
inline SampleMatrix column_block(const SampleMatrix& s, std::size_t begin, std::size_t end) {
    if (begin >= end || end > s.dim) throw DomainError("column_block: bad column range");
    SampleMatrix out(s.n, end - begin);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = begin; j < end; ++j) out.at(i, j - begin) = s.at(i, j);
    return out;
}

}  // namespace nnent
