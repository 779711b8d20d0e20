/*
   Copyright 2026 The modinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MODINV_MATRIX_HPP
#define MODINV_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modinv/error.hpp"
#include "modinv/scalar.hpp"

namespace modinv {

/// Dense row-major matrix over an exact scalar.
template <RingScalar S>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const S& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const S& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<S> data_;
};

template <RingScalar T, RingScalar S, class Convert>
Matrix<T> map_entries(const Matrix<S>& a, const T& fill, Convert convert) {
    Matrix<T> out(a.rows(), a.cols(), fill);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = convert(a(i, j));
    }
    return out;
}

/// Gaussian elimination over a field.
template <FieldScalar S>
S determinant(Matrix<S> a) {
    if (!a.square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) throw Error(Errc::DimensionMismatch, "determinant of an empty matrix");
    S det = a(0, 0).ring().one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return det.ring().zero();
        if (pivot != k) {
            a.swap_rows(pivot, k);
            det = -det;
        }
        det = det * a(k, k);
        const S inv = a(k, k).inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const S factor = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) = a(i, j) - factor * a(k, j);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) elimination over Z.
Integer determinant(Matrix<Integer> a);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

template <FieldScalar S>
struct SolveResult {
    SolveStatus status;
    std::vector<S> x;  // filled only when Unique
};

/// Solves a x = b exactly; a may be rectangular.
template <FieldScalar S>
SolveResult<S> solve_linear(Matrix<S> a, std::vector<S> b, const S& zero) {
    if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length != row count");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        a.swap_rows(pivot, r);
        std::swap(b[pivot], b[r]);
        const S inv = a(r, c).inv();
        for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const S factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) = a(i, j) - factor * a(r, j);
            b[i] = b[i] - factor * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!b[i].is_zero()) return {SolveStatus::Inconsistent, {}};
    }
    if (pivot_cols.size() < cols) return {SolveStatus::Underdetermined, {}};
    std::vector<S> x(cols, zero);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
    return {SolveStatus::Unique, std::move(x)};
}

}  // namespace modinv

#endif  // MODINV_MATRIX_HPP
