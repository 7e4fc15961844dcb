#pragma once

#include <cstdint>
#include <vector>

#include "chainspec/chain_string.hpp"
#include "chainspec/int_matrix.hpp"

namespace chainspec {

// A(G) and S(G) are symmetric with zero diagonal; the quotient matrices are
// 2h x 2h and generally non-symmetric. Both reuse the dense exact type.
using SymmetricIntMatrix = IntMatrix;
using QuotientMatrix = IntMatrix;

enum class CellColor { white, black };

// Cells U_1,...,U_{2h} of mutual duplicates, in block order. Cell k covers
// the contiguous vertex range [begin, begin + size) and |U_k| = a_k.
struct EquitablePartition {
    struct Cell {
        std::int64_t begin;
        std::int64_t size;
        CellColor color;
    };
    std::vector<Cell> cells;
    std::int64_t n;
};

inline EquitablePartition equitable_partition(const ChainString& g) {
    EquitablePartition p;
    p.n = g.n();
    std::int64_t at = 0;
    for (std::size_t i = 0; i < g.blocks().size(); ++i) {
        p.cells.push_back({at, g.blocks()[i], i % 2 == 0 ? CellColor::white : CellColor::black});
        at += g.blocks()[i];
    }
    return p;
}

// Vertex order is cell-blocked U_1 U_2 ... U_{2h}, which coincides with bit
// string position order. White cell 2k-1 is fully joined to black cell 2j
// exactly when j >= k.
inline SymmetricIntMatrix adjacency_matrix(const ChainString& g) {
    EquitablePartition p = equitable_partition(g);
    IntMatrix a(g.n(), g.n());
    std::int64_t h = g.h();
    for (std::int64_t k = 1; k <= h; ++k) {
        const auto& white = p.cells[(std::size_t)(2 * k - 2)];
        for (std::int64_t j = k; j <= h; ++j) {
            const auto& black = p.cells[(std::size_t)(2 * j - 1)];
            for (std::int64_t u = white.begin; u < white.begin + white.size; ++u)
                for (std::int64_t v = black.begin; v < black.begin + black.size; ++v)
                    a.at(u, v) = a.at(v, u) = 1;
        }
    }
    return a;
}

// S = J - I - 2A, computed entrywise; J and I never materialize.
inline SymmetricIntMatrix seidel_matrix(const ChainString& g) {
    IntMatrix s = adjacency_matrix(g);
    for (std::int64_t i = 0; i < s.rows(); ++i)
        for (std::int64_t j = 0; j < s.cols(); ++j)
            s.at(i, j) = i == j ? Int(0) : Int(1 - 2 * s.at(i, j));
    return s;
}

// Quotient of A under the duplicate partition: row 2k-1 carries a_{2j} in
// column 2j for j >= k, row 2k carries a_{2j-1} in column 2j-1 for j <= k.
inline QuotientMatrix quotient_adjacency(const ChainString& g) {
    std::int64_t h = g.h();
    IntMatrix q(2 * h, 2 * h);
    for (std::int64_t k = 1; k <= h; ++k) {
        for (std::int64_t j = k; j <= h; ++j) q.at(2 * k - 2, 2 * j - 1) = g.black_block(j);
        for (std::int64_t j = 1; j <= k; ++j) q.at(2 * k - 1, 2 * j - 2) = g.white_block(j);
    }
    return q;
}

namespace detail {

// Cell-level adjacency behind both quotient displays.
inline bool cells_adjacent(std::int64_t i, std::int64_t j) {
    if (i % 2 == j % 2) return false; // same color
    std::int64_t white = i % 2 == 1 ? i : j; // odd index 2k-1
    std::int64_t black = i % 2 == 0 ? i : j; // even index 2j
    return black >= white + 1; // j >= k for cells 2k-1, 2j
}

} // namespace detail

// Quotient of S: diagonal a_j - 1, off-diagonal -a_j against adjacent cells
// and +a_j against non-adjacent ones.
inline QuotientMatrix quotient_seidel(const ChainString& g) {
    std::int64_t h = g.h();
    IntMatrix q(2 * h, 2 * h);
    for (std::int64_t i = 1; i <= 2 * h; ++i)
        for (std::int64_t j = 1; j <= 2 * h; ++j) {
            std::int64_t aj = g.blocks()[(std::size_t)(j - 1)];
            if (i == j)
                q.at(i - 1, j - 1) = aj - 1;
            else
                q.at(i - 1, j - 1) = detail::cells_adjacent(i, j) ? -aj : aj;
        }
    return q;
}

// Multiset of vertex degrees as (degree, count) pairs, degree ascending.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<std::int64_t> degrees) {
        std::sort(degrees.begin(), degrees.end());
        for (std::int64_t d : degrees) {
            if (!pairs_.empty() && pairs_.back().first == d)
                ++pairs_.back().second;
            else
                pairs_.emplace_back(d, 1);
        }
    }

    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs() const { return pairs_; }

    std::vector<std::int64_t> expanded() const {
        std::vector<std::int64_t> out;
        for (auto [d, c] : pairs_) out.insert(out.end(), (std::size_t)c, d);
        return out;
    }

    std::int64_t vertex_count() const {
        std::int64_t n = 0;
        for (auto [d, c] : pairs_) n += c;
        return n;
    }

    std::int64_t edge_count() const {
        std::int64_t twice = 0;
        for (auto [d, c] : pairs_) twice += d * c;
        return twice / 2;
    }

    friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) { return a.pairs_ == b.pairs_; }
    friend bool operator!=(const DegreeSequence& a, const DegreeSequence& b) { return !(a == b); }

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs_;
};

// White cell 2k-1: a_{2k-1} vertices of degree sum_{j>=k} a_{2j}. Black cell
// 2k: a_{2k} vertices of degree sum_{j<=k} a_{2j-1}.
inline DegreeSequence degree_sequence(const ChainString& g) {
    std::int64_t h = g.h();
    std::vector<std::int64_t> degrees;
    degrees.reserve((std::size_t)g.n());
    for (std::int64_t k = 1; k <= h; ++k) {
        std::int64_t deg = 0;
        for (std::int64_t j = k; j <= h; ++j) deg += g.black_block(j);
        degrees.insert(degrees.end(), (std::size_t)g.white_block(k), deg);
    }
    for (std::int64_t k = 1; k <= h; ++k) {
        std::int64_t deg = 0;
        for (std::int64_t j = 1; j <= k; ++j) deg += g.white_block(j);
        degrees.insert(degrees.end(), (std::size_t)g.black_block(k), deg);
    }
    return DegreeSequence(std::move(degrees));
}

// n x 2h membership matrix: C[v][k] = 1 iff vertex v lies in cell U_{k+1}.
inline IntMatrix characteristic_matrix(const EquitablePartition& p) {
    IntMatrix c(p.n, (std::int64_t)p.cells.size());
    for (std::size_t k = 0; k < p.cells.size(); ++k)
        for (std::int64_t v = p.cells[k].begin; v < p.cells[k].begin + p.cells[k].size; ++v)
            c.at(v, (std::int64_t)k) = 1;
    return c;
}

} // namespace chainspec
