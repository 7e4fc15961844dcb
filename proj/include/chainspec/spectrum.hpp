#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chainspec/chain_string.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/graph_matrices.hpp"
#include "chainspec/int_matrix.hpp"
#include "chainspec/int_polynomial.hpp"
#include "chainspec/numbers.hpp"
#include "chainspec/sturm.hpp"

namespace chainspec {

enum class MatrixKind { adjacency, seidel };

struct Inertia {
    std::int64_t n_plus;
    std::int64_t n_zero;
    std::int64_t n_minus;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Default maximum width of non-exact isolating intervals.
inline const Rat& default_root_width() {
    static const Rat w(1, 1000000);
    return w;
}

// Multiset of real eigenvalues, held as certified root boxes in descending
// order together with the characteristic polynomial they came from.
class Spectrum {
public:
    // p must have all roots real (the case for char polys of symmetric
    // matrices); raises NonRealRoots otherwise.
    static Spectrum from_char_poly(IntPolynomial p, const Rat& width = default_root_width()) {
        if (p.degree() < 0)
            raise(errc::zero_polynomial, "Spectrum: the zero polynomial has no root multiset");
        std::vector<RootBox> boxes;
        if (p.degree() > 0)
            boxes = isolate_real_roots(p, width);
        std::int64_t total = 0;
        for (const RootBox& b : boxes)
            total += b.multiplicity;
        if (total != p.degree())
            raise(errc::non_real_roots,
                  "Spectrum: " + std::to_string(p.degree() - total) + " of " +
                      std::to_string(p.degree()) + " roots are not real");
        // Pin every box on one side of zero so signs are always decidable.
        // A box straddling zero cannot have zero as its root (those are
        // split off exactly during isolation), so the loop terminates.
        for (RootBox& b : boxes)
            while (!b.exact && b.interval.lo < 0 && b.interval.hi > 0)
                detail::halve_box(b);
        std::reverse(boxes.begin(), boxes.end());
        return Spectrum(std::move(p), std::move(boxes));
    }

    const IntPolynomial& char_poly() const { return char_poly_; }

    // Distinct eigenvalues, largest first, with multiplicities.
    const std::vector<RootBox>& entries() const { return entries_; }

    std::int64_t order() const { return char_poly_.degree(); }

    // Spectra built by this library carry monic polynomials of degree equal
    // to the order, so polynomial equality is multiset equality.
    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.char_poly_ == b.char_poly_;
    }
    friend bool operator!=(const Spectrum& a, const Spectrum& b) { return !(a == b); }

private:
    Spectrum(IntPolynomial p, std::vector<RootBox> entries)
        : char_poly_(std::move(p)), entries_(std::move(entries)) {}

    IntPolynomial char_poly_;
    std::vector<RootBox> entries_;
};

inline Spectrum spectrum_of(const IntMatrix& m, const Rat& width = default_root_width()) {
    return Spectrum::from_char_poly(char_poly(m), width);
}

namespace detail {

// Characteristic polynomial of the full n-vertex matrix, assembled from the
// 2h-cell quotient: duplicate vertices contribute x^{n-2h} eigenvalue-0
// factors to A and (x+1)^{n-2h} eigenvalue-(-1) factors to S.
inline IntPolynomial full_char_poly(const ChainString& g, MatrixKind kind) {
    std::int64_t extra = g.n() - 2 * g.h();
    if (kind == MatrixKind::adjacency)
        return IntPolynomial::monomial(1, extra) * char_poly(quotient_adjacency(g));
    IntPolynomial p = char_poly(quotient_seidel(g));
    const IntPolynomial x_plus_1 = IntPolynomial::from_coeffs({1, 1});
    for (std::int64_t i = 0; i < extra; ++i)
        p = p * x_plus_1;
    return p;
}

} // namespace detail

inline Spectrum adjacency_spectrum(const ChainString& g, const Rat& width = default_root_width()) {
    return Spectrum::from_char_poly(detail::full_char_poly(g, MatrixKind::adjacency), width);
}

inline Spectrum seidel_spectrum(const ChainString& g, const Rat& width = default_root_width()) {
    return Spectrum::from_char_poly(detail::full_char_poly(g, MatrixKind::seidel), width);
}

inline bool are_cospectral(const ChainString& g, const ChainString& h, MatrixKind kind) {
    return detail::full_char_poly(g, kind) == detail::full_char_poly(h, kind);
}

inline Inertia inertia_of(const Spectrum& s) {
    Inertia r{0, 0, 0};
    for (const RootBox& e : s.entries()) {
        if (e.exact) {
            (e.value > 0 ? r.n_plus : e.value < 0 ? r.n_minus : r.n_zero) += e.multiplicity;
        } else if (e.interval.lo >= 0) {
            r.n_plus += e.multiplicity;
        } else if (e.interval.hi <= 0) {
            r.n_minus += e.multiplicity;
        } else {
            // Unreachable: construction pins every box on one side of zero.
            raise(errc::ambiguous_sign, "inertia_of: isolating interval straddles zero");
        }
    }
    return r;
}

inline std::int64_t multiplicity_at(const Spectrum& s, const Rat& v) {
    for (const RootBox& e : s.entries()) {
        if (e.exact) {
            if (e.value == v) return e.multiplicity;
        } else if (e.interval.contains(v) && e.factor.sign_at(v) == 0) {
            return e.multiplicity;
        }
    }
    return 0;
}

inline std::int64_t distinct_count(const Spectrum& s) {
    return static_cast<std::int64_t>(s.entries().size());
}

// True when no eigenvalue lies in iv, apart from listed exception values.
// Membership of each root box is decided exactly: rational roots by direct
// comparison, irrational ones by shaving the box until it is inside or
// outside, after first ruling out equality with the interval's endpoints.
inline bool eigenvalue_free(const Spectrum& s, const RationalInterval& iv,
                            const std::vector<Rat>& exceptions = {}) {
    auto excepted = [&](const Rat& v) {
        return std::find(exceptions.begin(), exceptions.end(), v) != exceptions.end();
    };
    for (const RootBox& entry : s.entries()) {
        if (entry.exact) {
            if (iv.contains(entry.value) && !excepted(entry.value)) return false;
            continue;
        }
        RootBox box = entry;
        bool decided = false;
        for (const Rat* e : {&iv.lo, &iv.hi}) {
            if (box.interval.contains(*e) && box.factor.sign_at(*e) == 0) {
                bool member = e == &iv.lo ? !iv.lo_open : !iv.hi_open;
                if (member && !excepted(*e)) return false;
                decided = true;
                break;
            }
        }
        if (decided) continue;
        for (int round = 0; !decided; ++round) {
            if (box.exact) {
                if (iv.contains(box.value) && !excepted(box.value)) return false;
                decided = true;
            } else if (box.interval.hi <= iv.lo || box.interval.lo >= iv.hi) {
                decided = true;
            } else if (box.interval.lo >= iv.lo && box.interval.hi <= iv.hi) {
                bool skip = false;
                for (const Rat& e : exceptions)
                    if (box.interval.contains(e) && box.factor.sign_at(e) == 0) {
                        skip = true;
                        break;
                    }
                if (!skip) return false;
                decided = true;
            } else if (round == 256) {
                raise(errc::undecidable, "eigenvalue_free: box would not settle inside or outside");
            } else {
                detail::halve_box(box);
            }
        }
    }
    return true;
}

// Eigenvectors of S for eigenvalue -1 coming from duplicate vertices: +1 on
// a cell's first vertex, -1 on a later one, zero elsewhere.  Two vertices in
// one cell have identical Seidel rows off {u,v} and S_uv = +1, so S x = -x
// holds exactly.  Returns n - 2h linearly independent vectors.
inline std::vector<std::vector<std::int64_t>> seidel_duplicate_eigenvectors(const ChainString& g) {
    EquitablePartition p = equitable_partition(g);
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& cell : p.cells)
        for (std::int64_t q = 1; q < cell.size; ++q) {
            std::vector<std::int64_t> x(static_cast<std::size_t>(p.n), 0);
            x[static_cast<std::size_t>(cell.begin)] = 1;
            x[static_cast<std::size_t>(cell.begin + q)] = -1;
            out.push_back(std::move(x));
        }
    return out;
}

// Certified three-way comparison of two root boxes, possibly from different
// spectra.  Equality of two interval roots is settled by counting roots of
// gcd(factor_a, factor_b) in the overlap; inequality by refinement.  Raises
// Undecidable after 64 refinement rounds.
inline int compare_roots(const RootBox& a, const RootBox& b) {
    RootBox x = a;
    RootBox y = b;
    bool equality_tested = false;
    for (int round = 0; round <= 64; ++round) {
        if (x.exact && y.exact)
            return x.value < y.value ? -1 : x.value > y.value ? 1 : 0;
        if (x.exact) {
            if (x.value <= y.interval.lo) return -1;
            if (x.value >= y.interval.hi) return 1;
            if (y.factor.sign_at(x.value) == 0) return 0;
            detail::halve_box(y);
            continue;
        }
        if (y.exact) {
            if (y.value <= x.interval.lo) return 1;
            if (y.value >= x.interval.hi) return -1;
            if (x.factor.sign_at(y.value) == 0) return 0;
            detail::halve_box(x);
            continue;
        }
        if (x.interval.hi <= y.interval.lo) return -1;
        if (y.interval.hi <= x.interval.lo) return 1;
        if (!equality_tested) {
            equality_tested = true;
            IntPolynomial g = gcd_poly(x.factor, y.factor);
            if (g.degree() >= 1) {
                Rat lo = std::max(x.interval.lo, y.interval.lo);
                Rat hi = std::min(x.interval.hi, y.interval.hi);
                // Box endpoints are never roots of their own factor, hence
                // not of g, so Sturm counting over the overlap is safe.
                if (lo < hi && sturm_count(g, RationalInterval::open(std::move(lo), std::move(hi))) >= 1)
                    return 0;
            }
        }
        detail::halve_box(x);
        detail::halve_box(y);
    }
    raise(errc::undecidable, "compare_roots: boxes would not separate within 64 rounds");
}

// Cauchy interlacing test: with parent eigenvalues l_1 >= ... >= l_n and
// child eigenvalues m_1 >= ... >= m_m, checks l_{n-m+i} <= m_i <= l_i for
// every i.  Raises InvalidRange when the child is larger than the parent.
inline bool interlacing_check(const Spectrum& parent, const Spectrum& child) {
    const std::int64_t n = parent.order();
    const std::int64_t m = child.order();
    if (m > n)
        raise(errc::invalid_range, "interlacing_check: child order exceeds parent order");
    std::vector<const RootBox*> lam;
    std::vector<const RootBox*> mu;
    for (const RootBox& e : parent.entries())
        for (std::int64_t i = 0; i < e.multiplicity; ++i)
            lam.push_back(&e);
    for (const RootBox& e : child.entries())
        for (std::int64_t i = 0; i < e.multiplicity; ++i)
            mu.push_back(&e);
    const std::size_t gap = static_cast<std::size_t>(n - m);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (compare_roots(*mu[i], *lam[i]) > 0) return false;
        if (compare_roots(*mu[i], *lam[i + gap]) < 0) return false;
    }
    return true;
}

} // namespace chainspec
