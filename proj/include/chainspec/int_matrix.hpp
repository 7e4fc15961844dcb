#pragma once

#include <cstdint>
#include <vector>

#include "chainspec/errors.hpp"
#include "chainspec/numbers.hpp"

namespace chainspec {

// Dense matrix over arbitrary-precision integers. Row-major, value-semantic.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), data_((std::size_t)(rows * cols)) {
        if (rows < 0 || cols < 0) raise(errc::invalid_range, "negative matrix dimension");
    }

    static IntMatrix identity(std::int64_t n) {
        IntMatrix m(n, n);
        for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        std::int64_t r = (std::int64_t)rows.size();
        std::int64_t c = r == 0 ? 0 : (std::int64_t)rows[0].size();
        IntMatrix m(r, c);
        for (std::int64_t i = 0; i < r; ++i) {
            if ((std::int64_t)rows[(std::size_t)i].size() != c)
                raise(errc::invalid_range, "ragged matrix literal");
            for (std::int64_t j = 0; j < c; ++j) m.at(i, j) = rows[(std::size_t)i][(std::size_t)j];
        }
        return m;
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    Int& at(std::int64_t i, std::int64_t j) { return data_[(std::size_t)(i * cols_ + j)]; }
    const Int& at(std::int64_t i, std::int64_t j) const { return data_[(std::size_t)(i * cols_ + j)]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) raise(errc::invalid_range, "matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::int64_t i = 0; i < a.rows_; ++i)
            for (std::int64_t k = 0; k < a.cols_; ++k) {
                const Int& v = a.at(i, k);
                if (v == 0) continue;
                for (std::int64_t j = 0; j < b.cols_; ++j) c.at(i, j) += v * b.at(k, j);
            }
        return c;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::int64_t i = 0; i < rows_; ++i)
            for (std::int64_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

private:
    std::int64_t rows_, cols_;
    std::vector<Int> data_;
};

// Bareiss fraction-free elimination; every division below is exact.
inline Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::invalid_range, "determinant of non-square matrix");
    std::int64_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    int sign = 1;
    Int prev = 1;
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        std::int64_t pivot = -1;
        for (std::int64_t r = k; r < n; ++r)
            if (w.at(r, k) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (std::int64_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::int64_t i = k + 1; i < n; ++i)
            for (std::int64_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

// Rank via exact rational elimination.
inline std::int64_t rank(const IntMatrix& m) {
    std::int64_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> w((std::size_t)rows, std::vector<Rat>((std::size_t)cols));
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::int64_t j = 0; j < cols; ++j) w[(std::size_t)i][(std::size_t)j] = Rat(m.at(i, j));
    std::int64_t r = 0;
    for (std::int64_t c = 0; c < cols && r < rows; ++c) {
        std::int64_t pivot = -1;
        for (std::int64_t i = r; i < rows; ++i)
            if (w[(std::size_t)i][(std::size_t)c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[(std::size_t)r], w[(std::size_t)pivot]);
        for (std::int64_t i = r + 1; i < rows; ++i) {
            if (w[(std::size_t)i][(std::size_t)c] == 0) continue;
            Rat f = w[(std::size_t)i][(std::size_t)c] / w[(std::size_t)r][(std::size_t)c];
            for (std::int64_t j = c; j < cols; ++j)
                w[(std::size_t)i][(std::size_t)j] -= f * w[(std::size_t)r][(std::size_t)j];
        }
        ++r;
    }
    return r;
}

} // namespace chainspec
