#pragma once

#include "decpoisson/errors.hpp"
#include "decpoisson/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace decp {

template <typename T>
struct Triplet {
    Index row;
    Index col;
    T value;
};

/// Compressed sparse row matrix.
///
/// Built from triplets: duplicates are summed and exact zeros dropped, so no
/// explicit zero is ever stored. Column indices within a row are ascending.
/// `SparseMatrix<int>` holds incidence matrices, whose products stay exact.
template <typename T>
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet<T>> triplets) {
        for (const auto& t : triplets) {
            if (t.row >= rows || t.col >= cols) {
                throw DimensionMismatch("triplet (" + std::to_string(t.row) + ", " +
                                        std::to_string(t.col) + ") outside " +
                                        std::to_string(rows) + " x " + std::to_string(cols));
            }
        }
        // Stable so that duplicates are summed in insertion order.
        std::stable_sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
            return std::tie(a.row, a.col) < std::tie(b.row, b.col);
        });
        SparseMatrix m(rows, cols);
        for (std::size_t k = 0; k < triplets.size();) {
            const Index r = triplets[k].row;
            const Index c = triplets[k].col;
            T sum = triplets[k].value;
            for (++k; k < triplets.size() && triplets[k].row == r && triplets[k].col == c; ++k) {
                sum += triplets[k].value;
            }
            if (sum != T{0}) {
                m.col_idx_.push_back(c);
                m.values_.push_back(sum);
                ++m.row_ptr_[r + 1];
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m.row_ptr_[r + 1] += m.row_ptr_[r];
        }
        return m;
    }

    static SparseMatrix diagonal(std::span<const T> entries) {
        std::vector<Triplet<T>> triplets;
        triplets.reserve(entries.size());
        for (Index i = 0; i < entries.size(); ++i) {
            triplets.push_back({i, i, entries[i]});
        }
        return from_triplets(entries.size(), entries.size(), std::move(triplets));
    }

    static SparseMatrix identity(std::size_t n) {
        std::vector<T> ones(n, T{1});
        return diagonal(ones);
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t nonzeros() const noexcept { return values_.size(); }

    [[nodiscard]] std::span<const Index> row_ptr() const noexcept { return row_ptr_; }
    [[nodiscard]] std::span<const Index> col_idx() const noexcept { return col_idx_; }
    [[nodiscard]] std::span<const T> values() const noexcept { return values_; }

    /// Entry (r, c); zero when not stored.
    [[nodiscard]] T at(Index r, Index c) const {
        if (r >= rows_ || c >= cols_) {
            throw DimensionMismatch("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") outside matrix");
        }
        const auto begin = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r]);
        const auto end = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r + 1]);
        const auto it = std::lower_bound(begin, end, c);
        return (it != end && *it == c) ? values_[static_cast<std::size_t>(it - col_idx_.begin())] : T{0};
    }

    [[nodiscard]] std::vector<Triplet<T>> triplets() const {
        std::vector<Triplet<T>> out;
        out.reserve(nonzeros());
        for (Index r = 0; r < rows_; ++r) {
            for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
                out.push_back({r, col_idx_[k], values_[k]});
            }
        }
        return out;
    }

    [[nodiscard]] SparseMatrix transpose() const {
        auto ts = triplets();
        for (auto& t : ts) {
            std::swap(t.row, t.col);
        }
        return from_triplets(cols_, rows_, std::move(ts));
    }

    [[nodiscard]] SparseMatrix operator-() const {
        SparseMatrix m = *this;
        for (auto& v : m.values_) {
            v = -v;
        }
        return m;
    }

    [[nodiscard]] SparseMatrix scaled(T s) const {
        auto ts = triplets();
        for (auto& t : ts) {
            t.value *= s;
        }
        return from_triplets(rows_, cols_, std::move(ts));
    }

    template <typename U>
    [[nodiscard]] SparseMatrix<U> cast() const {
        std::vector<Triplet<U>> ts;
        ts.reserve(nonzeros());
        for (const auto& t : triplets()) {
            ts.push_back({t.row, t.col, static_cast<U>(t.value)});
        }
        return SparseMatrix<U>::from_triplets(rows_, cols_, std::move(ts));
    }

    /// y = A x
    template <typename V>
    [[nodiscard]] std::vector<V> multiply(std::span<const V> x) const {
        if (x.size() != cols_) {
            throw DimensionMismatch("matrix-vector product: " + std::to_string(rows_) + " x " +
                                    std::to_string(cols_) + " matrix times vector of length " +
                                    std::to_string(x.size()));
        }
        std::vector<V> y(rows_, V{0});
        for (Index r = 0; r < rows_; ++r) {
            V sum{0};
            for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
                sum += static_cast<V>(values_[k]) * x[col_idx_[k]];
            }
            y[r] = sum;
        }
        return y;
    }

    template <typename V>
    [[nodiscard]] std::vector<V> multiply(const std::vector<V>& x) const {
        return multiply(std::span<const V>(x));
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionMismatch("matrix product: " + std::to_string(a.rows_) + " x " +
                                    std::to_string(a.cols_) + " times " +
                                    std::to_string(b.rows_) + " x " + std::to_string(b.cols_));
        }
        std::vector<Triplet<T>> ts;
        for (Index r = 0; r < a.rows_; ++r) {
            for (Index k = a.row_ptr_[r]; k < a.row_ptr_[r + 1]; ++k) {
                const Index mid = a.col_idx_[k];
                for (Index q = b.row_ptr_[mid]; q < b.row_ptr_[mid + 1]; ++q) {
                    ts.push_back({r, b.col_idx_[q], a.values_[k] * b.values_[q]});
                }
            }
        }
        return from_triplets(a.rows_, b.cols_, std::move(ts));
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw DimensionMismatch("matrix sum with different shapes");
        }
        auto ts = a.triplets();
        auto tb = b.triplets();
        ts.insert(ts.end(), tb.begin(), tb.end());
        return from_triplets(a.rows_, a.cols_, std::move(ts));
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ &&
               a.col_idx_ == b.col_idx_ && a.values_ == b.values_;
    }

    [[nodiscard]] T max_abs() const {
        T best{0};
        for (const T& v : values_) {
            best = std::max<T>(best, v < T{0} ? -v : v);
        }
        return best;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Index> row_ptr_{0};
    std::vector<Index> col_idx_;
    std::vector<T> values_;
};

using IncidenceMatrix = SparseMatrix<int>;
using RealMatrix = SparseMatrix<double>;

/// Coordinate-triplet text: a header line "<rows> <cols> <nonzeros>" then one
/// "<row> <col> <value>" line per stored entry, row-major, 0-based.
template <typename T>
void write_triplets(std::ostream& out, const SparseMatrix<T>& m) {
    const auto precision = out.precision();
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (const auto& t : m.triplets()) {
        out << t.row << ' ' << t.col << ' ' << t.value << '\n';
    }
    out.precision(precision);
}

/// A vector in the same format, as an n x 1 column with every entry listed.
inline void write_vector_triplets(std::ostream& out, std::span<const double> v) {
    const auto precision = out.precision();
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << v.size() << " 1 " << v.size() << '\n';
    for (Index i = 0; i < v.size(); ++i) {
        out << i << " 0 " << v[i] << '\n';
    }
    out.precision(precision);
}

}  // namespace decp
