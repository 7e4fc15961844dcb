#pragma once

#include <cstdint>
#include <vector>

#include "chainspec/errors.hpp"
#include "chainspec/int_matrix.hpp"
#include "chainspec/int_polynomial.hpp"

namespace chainspec {

// Square matrix over Z[x].
class PolyMatrix {
public:
    explicit PolyMatrix(std::int64_t order) : order_(order), data_((std::size_t)(order * order)) {
        if (order < 0) raise(errc::invalid_range, "negative matrix order");
    }

    std::int64_t order() const { return order_; }

    IntPolynomial& at(std::int64_t i, std::int64_t j) { return data_[(std::size_t)(i * order_ + j)]; }
    const IntPolynomial& at(std::int64_t i, std::int64_t j) const {
        return data_[(std::size_t)(i * order_ + j)];
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.order_ == b.order_ && a.data_ == b.data_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    std::int64_t order_;
    std::vector<IntPolynomial> data_;
};

// m - xI over Z[x]; det of this differs from the characteristic polynomial
// det(xI - m) by the factor (-1)^order.
inline PolyMatrix subtract_x_identity(const IntMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::invalid_range, "need a square matrix");
    PolyMatrix p(m.rows());
    for (std::int64_t i = 0; i < m.rows(); ++i)
        for (std::int64_t j = 0; j < m.cols(); ++j) {
            std::vector<Int> c{m.at(i, j)};
            if (i == j) c.push_back(Int(-1));
            p.at(i, j) = IntPolynomial(std::move(c));
        }
    return p;
}

// Exact determinant by fraction-free elimination over the polynomial ring;
// every division is exact by the Sylvester identity.
inline IntPolynomial det_polynomial_matrix(const PolyMatrix& m) {
    std::int64_t n = m.order();
    if (n > 32) raise(errc::size_limit, "matrix order exceeds the polynomial determinant cap of 32");
    if (n == 0) return IntPolynomial::constant(1);
    PolyMatrix w = m;
    int sign = 1;
    IntPolynomial prev = IntPolynomial::constant(1);
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        std::int64_t pivot = -1;
        for (std::int64_t r = k; r < n; ++r)
            if (!w.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return {};
        if (pivot != k) {
            for (std::int64_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::int64_t i = k + 1; i < n; ++i)
            for (std::int64_t j = k + 1; j < n; ++j)
                w.at(i, j) = exact_divide(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

} // namespace chainspec
