#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainspec/chain_string.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/graph_matrices.hpp"
#include "chainspec/int_matrix.hpp"
#include "chainspec/int_polynomial.hpp"
#include "chainspec/numbers.hpp"
#include "chainspec/poly_matrix.hpp"
#include "chainspec/spectrum.hpp"
#include "chainspec/sturm.hpp"

namespace chainspec {

enum class Verdict { holds, fails, not_applicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
    }
    raise(errc::internal, "unnamed verdict");
}

// Outcome of checking one claim against one instance. Every failed condition
// leaves a witness entry, so a `fails` verdict is never bare.
struct TheoremReport {
    std::string claim_id;
    std::string instance;
    Verdict verdict = Verdict::holds;
    std::vector<std::pair<std::string, std::string>> witness;

    bool holds() const { return verdict == Verdict::holds; }

    void note(std::string key, std::string value) {
        witness.emplace_back(std::move(key), std::move(value));
    }

    void check(bool ok, const std::string& condition, std::string detail = {}) {
        if (ok) return;
        verdict = Verdict::fails;
        witness.emplace_back("violated: " + condition, std::move(detail));
    }
};

namespace claims {

inline constexpr std::string_view adjacency_laws = "adjacency-laws";
inline constexpr std::string_view adjacency_distinct = "adjacency-distinct";
inline constexpr std::string_view h2_quartic = "h2-quartic";
inline constexpr std::string_view cospectral_family = "cospectral-family";
inline constexpr std::string_view h1_uniqueness = "h1-uniqueness";
inline constexpr std::string_view seidel_reduction = "seidel-reduction";
inline constexpr std::string_view seidel_laws = "seidel-laws";
inline constexpr std::string_view seidel_distinct = "seidel-distinct";

} // namespace claims

struct ClaimInfo {
    std::string_view id;
    std::string_view summary;
};

inline const std::array<ClaimInfo, 8>& claim_registry() {
    static const std::array<ClaimInfo, 8> table{{
        {claims::adjacency_laws,
         "adjacency spectrum: kernel of dimension n-2h, 2h simple nonzero "
         "eigenvalues, none in [-1/2,1/2] away from 0"},
        {claims::adjacency_distinct,
         "the adjacency spectrum is simple exactly when every block is 1 or "
         "exactly one block is 2 and the rest are 1"},
        {claims::h2_quartic,
         "for h = 2 the nonzero adjacency eigenvalues are the roots of "
         "x^4 - (a1 a2 + a1 a4 + a3 a4) x^2 + a1 a2 a3 a4"},
        {claims::cospectral_family,
         "a1 a4 = a2 a3 makes 0^a1 1^a2 0^a3 1^a4 and 0^a2 1^a1 0^a4 1^a3 "
         "adjacency-cospectral, non-isomorphic when a1 differs from a2 and a3"},
        {claims::h1_uniqueness,
         "h = 1 chain graphs on n vertices are determined up to isomorphism "
         "by their adjacency spectrum"},
        {claims::seidel_reduction,
         "row reduction takes the shifted Seidel quotient to a banded matrix F "
         "with det F = (-1)^h 2 det(S~ - xI) and rank F(-1) = 2h - 1"},
        {claims::seidel_laws,
         "Seidel spectrum: -1 with multiplicity n-2h+1, no eigenvalue in "
         "[-2,0] away from -1, inertia (h,0,n-h), between h+1 and 2h distinct "
         "values, and the shifted adjacency bounds on both spectrum ends"},
        {claims::seidel_distinct,
         "the Seidel spectrum is simple exactly when every block is 1"},
    }};
    return table;
}

namespace detail {

inline const char* bool_name(bool b) { return b ? "true" : "false"; }

inline std::string spectrum_brief(const Spectrum& s) {
    std::string out;
    for (const RootBox& e : s.entries()) {
        if (!out.empty()) out += ", ";
        out += decimal_string(e.position(), 4);
        if (e.multiplicity != 1) out += "*" + std::to_string(e.multiplicity);
    }
    return out.empty() ? "(empty)" : out;
}

inline std::string degree_brief(const DegreeSequence& d) {
    std::string out = "(";
    bool first = true;
    for (std::int64_t v : d.expanded()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + ")";
}

inline std::string inertia_brief(const Inertia& in) {
    return "(" + std::to_string(in.n_plus) + ", " + std::to_string(in.n_zero) + ", " +
           std::to_string(in.n_minus) + ")";
}

// Spectrum entries repeated by multiplicity, still descending; entry i points
// at the (i+1)-th largest eigenvalue.
inline std::vector<const RootBox*> expand_boxes(const Spectrum& s) {
    std::vector<const RootBox*> out;
    for (const RootBox& e : s.entries())
        out.insert(out.end(), (std::size_t)e.multiplicity, &e);
    return out;
}

inline RootBox exact_box(Rat v, std::int64_t multiplicity = 1) {
    IntPolynomial f(std::vector<Int>{-rat_num(v), rat_den(v)});
    RationalInterval iv = RationalInterval::point(v);
    return RootBox{std::move(iv), multiplicity, std::move(f), true, std::move(v)};
}

// Image of a certified root under y = -1 - 2x. The factor is transported
// through the same substitution (cleared to integer coefficients), so the
// image box keeps the sign-change invariant and stays certified.
inline RootBox reflect_box(const RootBox& b) {
    if (b.exact) return exact_box(Rat(-1) - Rat(2) * b.value, b.multiplicity);
    std::int64_t d = b.factor.degree();
    IntPolynomial img = IntPolynomial::constant(b.factor.coeff(d));
    const IntPolynomial lin = IntPolynomial::from_coeffs({-1, -1});
    Int scale = 1;
    for (std::int64_t i = d - 1; i >= 0; --i) {
        scale *= 2;
        img = img * lin + IntPolynomial::constant(b.factor.coeff(i) * scale);
    }
    RationalInterval iv = RationalInterval::open(Rat(-1) - Rat(2) * b.interval.hi,
                                                 Rat(-1) - Rat(2) * b.interval.lo);
    return RootBox{std::move(iv), b.multiplicity, std::move(img), false, Rat(0)};
}

// Entry c0 + c1 x of a matrix over Q[x] capped at degree 1; the elimination
// below never raises the degree.
struct LinRat {
    Rat c0, c1;
};

using LinMatrix = std::vector<std::vector<LinRat>>;

inline void add_scaled_row(std::vector<LinRat>& dst, const std::vector<LinRat>& src,
                           const Rat& scale) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
        dst[j].c0 += scale * src[j].c0;
        dst[j].c1 += scale * src[j].c1;
    }
}

// The elimination script applied to sq - xI. Operations come in batches; each
// batch reads the matrix state from the start of that batch. Only the row
// swaps (factor (-1)^h), the final doubling of the last row (factor 2), and
// the 2h sign flips (factor +1) change the determinant, hence
// det(result) = (-1)^h 2 det(sq - xI).
inline LinMatrix reduce_shifted_seidel(const QuotientMatrix& sq, std::int64_t h) {
    const std::int64_t d = 2 * h;
    LinMatrix m((std::size_t)d, std::vector<LinRat>((std::size_t)d));
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j)
            m[(std::size_t)i][(std::size_t)j] = {Rat(sq.at(i, j)), i == j ? Rat(-1) : Rat(0)};

    const Rat one(1), minus_one(-1), half(1, 2), minus_half(-1, 2);
    {   // row 2k-1 minus row 2k+1, k = 1..h-1
        LinMatrix base = m;
        for (std::int64_t k = 1; k + 1 <= h; ++k)
            add_scaled_row(m[(std::size_t)(2 * k - 2)], base[(std::size_t)(2 * k)], minus_one);
    }
    {   // row 2k minus row 2k-2, k = 2..h
        LinMatrix base = m;
        for (std::int64_t k = 2; k <= h; ++k)
            add_scaled_row(m[(std::size_t)(2 * k - 1)], base[(std::size_t)(2 * k - 3)], minus_one);
    }
    // swap rows 2k-1 and 2k, k = 1..h
    for (std::int64_t k = 1; k <= h; ++k)
        std::swap(m[(std::size_t)(2 * k - 2)], m[(std::size_t)(2 * k - 1)]);
    {   // row 1 becomes the sum of all odd rows; row 2h the sum of all even rows
        LinMatrix base = m;
        for (std::int64_t k = 2; k <= h; ++k)
            add_scaled_row(m[0], base[(std::size_t)(2 * k - 2)], one);
        for (std::int64_t k = 1; k + 1 <= h; ++k)
            add_scaled_row(m[(std::size_t)(d - 1)], base[(std::size_t)(2 * k - 1)], one);
    }
    {   // row 1 minus, row 2h plus, half of every odd row past the first
        LinMatrix base = m;
        for (std::int64_t k = 2; k <= h; ++k) {
            add_scaled_row(m[0], base[(std::size_t)(2 * k - 2)], minus_half);
            add_scaled_row(m[(std::size_t)(d - 1)], base[(std::size_t)(2 * k - 2)], half);
        }
    }
    {   // row 1 plus row 2h; row 2h minus half of every even row before it
        LinMatrix base = m;
        add_scaled_row(m[0], base[(std::size_t)(d - 1)], one);
        for (std::int64_t k = 1; k + 1 <= h; ++k)
            add_scaled_row(m[(std::size_t)(d - 1)], base[(std::size_t)(2 * k - 1)], minus_half);
    }
    // double row 2h, subtract row 1 from it, then negate every row
    for (LinRat& e : m[(std::size_t)(d - 1)]) {
        e.c0 *= 2;
        e.c1 *= 2;
    }
    add_scaled_row(m[(std::size_t)(d - 1)], m[0], minus_one);
    for (auto& row : m)
        for (LinRat& e : row) {
            e.c0 = -e.c0;
            e.c1 = -e.c1;
        }
    return m;
}

// The banded layout the elimination lands on for h >= 2: corner rows tie the
// first and last cells together, every interior row i carries
// (-1)^i (1+x), 2 a_i, (-1)^{i+1} (1+x) around the diagonal.
inline PolyMatrix banded_f_pattern(const ChainString& g) {
    const std::int64_t h = g.h(), d = 2 * h;
    const auto& a = g.blocks();
    const IntPolynomial xp1 = IntPolynomial::from_coeffs({1, 1});
    PolyMatrix f(d);
    f.at(0, 0) = xp1;
    f.at(0, d - 1) = xp1;
    for (std::int64_t i = 2; i <= d - 1; ++i) {
        const IntPolynomial sub = i % 2 == 0 ? xp1 : -xp1;
        f.at(i - 1, i - 2) = sub;
        f.at(i - 1, i - 1) = IntPolynomial::constant(Int(2) * a[(std::size_t)(i - 1)]);
        f.at(i - 1, i) = -sub;
    }
    f.at(d - 1, 0) = IntPolynomial::constant(Int(-2) * a[0]);
    f.at(d - 1, 1) = -xp1;
    f.at(d - 1, d - 2) = xp1;
    f.at(d - 1, d - 1) = IntPolynomial::constant(Int(2) * a[(std::size_t)(d - 1)]);
    return f;
}

} // namespace detail

// Kernel dimension n-2h, simple nonzero eigenvalues, and the spectral gap
// around zero, checked exactly on the full adjacency spectrum.
inline TheoremReport verify_adjacency_laws(const ChainString& g) {
    TheoremReport r{std::string(claims::adjacency_laws), g.to_string()};
    const std::int64_t n = g.n(), h = g.h();
    Spectrum s = adjacency_spectrum(g);

    std::int64_t kernel = multiplicity_at(s, Rat(0));
    r.check(kernel == n - 2 * h, "kernel multiplicity n - 2h", std::to_string(kernel));

    std::int64_t expected_distinct = 2 * h + (n > 2 * h ? 1 : 0);
    r.check(distinct_count(s) == expected_distinct, "2h distinct nonzero eigenvalues",
            std::to_string(distinct_count(s)) + " distinct values");

    std::int64_t worst = 0;
    for (const RootBox& e : s.entries())
        if (!(e.exact && e.value == 0)) worst = std::max(worst, e.multiplicity);
    r.check(worst <= 1, "every nonzero eigenvalue is simple", std::to_string(worst));

    r.check(eigenvalue_free(s, RationalInterval::closed(Rat(-1, 2), Rat(1, 2)), {Rat(0)}),
            "no eigenvalue in [-1/2, 1/2] apart from 0");

    r.note("spectrum", detail::spectrum_brief(s));
    return r;
}

// The adjacency spectrum is simple exactly for block vectors that are all 1
// or all 1 with a single 2.
inline TheoremReport classify_distinct_adjacency(const ChainString& g) {
    TheoremReport r{std::string(claims::adjacency_distinct), g.to_string()};
    const auto& b = g.blocks();
    std::int64_t ones = (std::int64_t)std::count(b.begin(), b.end(), 1);
    std::int64_t twos = (std::int64_t)std::count(b.begin(), b.end(), 2);
    std::int64_t len = (std::int64_t)b.size();
    bool predicted = ones == len || (twos == 1 && ones == len - 1);

    Spectrum s = adjacency_spectrum(g);
    bool actual = distinct_count(s) == g.n();
    r.note("blocks predict a simple spectrum", detail::bool_name(predicted));
    r.note("distinct eigenvalues", std::to_string(distinct_count(s)) + " of " +
                                       std::to_string(g.n()));
    r.check(predicted == actual, "block shape matches spectral simplicity");
    return r;
}

// Characteristic polynomial of the 4-cell adjacency quotient written directly
// from the blocks, cross-checked against the matrix computation.
inline IntPolynomial quartic_charpoly_h2(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                         std::int64_t a4) {
    if (a1 < 1 || a2 < 1 || a3 < 1 || a4 < 1)
        raise(errc::precondition_violated, "quartic_charpoly_h2: blocks must be positive");
    Int x2 = Int(a1) * a2 + Int(a1) * a4 + Int(a3) * a4;
    Int x0 = Int(a1) * a2 * Int(a3) * a4;
    IntPolynomial q(std::vector<Int>{std::move(x0), Int(0), -x2, Int(0), Int(1)});
    ChainString g = ChainString::from_blocks({a1, a2, a3, a4});
    if (q != char_poly(quotient_adjacency(g)))
        raise(errc::cross_check_failed,
              "quartic_charpoly_h2: closed form disagrees with the quotient matrix");
    return q;
}

struct CospectralPair {
    ChainString first;
    ChainString second;
    TheoremReport report;
};

// The swap family: a1 a4 = a2 a3 pairs 0^a1 1^a2 0^a3 1^a4 with
// 0^a2 1^a1 0^a4 1^a3. The pair is always adjacency-cospectral; it is
// non-isomorphic when a1 differs from both a2 and a3, and provably isomorphic
// in the degenerate cases.
inline CospectralPair construct_cospectral_pair(std::int64_t a1, std::int64_t a2,
                                                std::int64_t a3, std::int64_t a4) {
    if (a1 < 1 || a2 < 1 || a3 < 1 || a4 < 1)
        raise(errc::precondition_violated, "construct_cospectral_pair: blocks must be positive");
    if (Int(a1) * a4 != Int(a2) * a3)
        raise(errc::precondition_violated, "construct_cospectral_pair: needs a1 a4 = a2 a3");

    ChainString g = ChainString::from_blocks({a1, a2, a3, a4});
    ChainString p = ChainString::from_blocks({a2, a1, a4, a3});
    TheoremReport r{std::string(claims::cospectral_family), g.to_string() + " / " + p.to_string()};

    r.check(are_cospectral(g, p, MatrixKind::adjacency), "the pair is adjacency-cospectral");
    r.note("quartic", quartic_charpoly_h2(a1, a2, a3, a4).to_string());

    DegreeSequence dg = degree_sequence(g), dp = degree_sequence(p);
    r.note("degrees of the first", detail::degree_brief(dg));
    r.note("degrees of the second", detail::degree_brief(dp));

    bool iso = is_isomorphic(g, p);
    r.note("isomorphic", detail::bool_name(iso));
    r.note("seidel-cospectral", detail::bool_name(are_cospectral(g, p, MatrixKind::seidel)));
    if (a1 != a2 && a1 != a3)
        r.check(!iso, "a1 away from a2 and a3 forces non-isomorphic strings");
    else
        r.check(iso, "degenerate parameters give isomorphic strings");
    return {std::move(g), std::move(p), std::move(r)};
}

// Every h = 1 string on n vertices has characteristic polynomial
// x^{n-2}(x^2 - a1 a2), and equal spectra only occur between isomorphic
// strings (a1 a2 together with a1 + a2 = n pins the unordered pair).
inline TheoremReport verify_h1_uniqueness(std::int64_t n) {
    if (n < 2) raise(errc::invalid_range, "verify_h1_uniqueness: needs n >= 2");
    TheoremReport r{std::string(claims::h1_uniqueness), "n=" + std::to_string(n)};

    std::vector<ChainString> all;
    all.reserve((std::size_t)(n - 1));
    for (std::int64_t a = 1; a < n; ++a) {
        ChainString g = ChainString::from_blocks({a, n - a});
        Int product = Int(a) * (n - a);
        IntPolynomial expected = IntPolynomial::monomial(1, n - 2) *
                                 IntPolynomial(std::vector<Int>{-product, Int(0), Int(1)});
        r.check(detail::full_char_poly(g, MatrixKind::adjacency) == expected,
                "characteristic polynomial x^(n-2)(x^2 - a1 a2)", g.to_string());
        all.push_back(std::move(g));
    }

    std::int64_t cospectral_pairs = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            bool same = are_cospectral(all[i], all[j], MatrixKind::adjacency);
            bool iso = is_isomorphic(all[i], all[j]);
            if (same) ++cospectral_pairs;
            r.check(!same || iso, "cospectral strings are isomorphic",
                    all[i].to_string() + " / " + all[j].to_string());
            r.check(!iso || same, "isomorphic strings are cospectral",
                    all[i].to_string() + " / " + all[j].to_string());
        }
    r.note("strings", std::to_string(n - 1));
    r.note("cospectral pairs, all isomorphic", std::to_string(cospectral_pairs));
    return r;
}

struct FMatrixResult {
    PolyMatrix f;
    TheoremReport report;
};

// Runs the elimination script on the shifted Seidel quotient and checks what
// it proves: the doubled determinant identity, rank 2h-1 at x = -1 (so -1 is
// a simple quotient eigenvalue), the multiplicity-2 cap away from -1, and for
// h >= 2 the banded layout itself.
inline FMatrixResult build_F_matrix(const ChainString& g) {
    const std::int64_t h = g.h(), d = 2 * h;
    QuotientMatrix sq = quotient_seidel(g);
    detail::LinMatrix lm = detail::reduce_shifted_seidel(sq, h);

    PolyMatrix f(d);
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            const detail::LinRat& e = lm[(std::size_t)i][(std::size_t)j];
            if (rat_den(e.c0) != 1 || rat_den(e.c1) != 1)
                raise(errc::internal, "fractional entry survived the elimination");
            f.at(i, j) = IntPolynomial(std::vector<Int>{rat_num(e.c0), rat_num(e.c1)});
        }

    TheoremReport r{std::string(claims::seidel_reduction), g.to_string()};

    IntPolynomial det_f = det_polynomial_matrix(f);
    IntPolynomial det_s = det_polynomial_matrix(subtract_x_identity(sq));
    r.check((h % 2 != 0 ? -det_f : det_f) == det_s + det_s,
            "det F = (-1)^h 2 det(S~ - xI)", det_f.to_string());

    IntMatrix f_at_minus1(d, d);
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j)
            f_at_minus1.at(i, j) = rat_num(f.at(i, j).evaluate(Rat(-1)));
    std::int64_t rk = rank(f_at_minus1);
    r.check(rk == d - 1, "rank F(-1) = 2h - 1", std::to_string(rk));

    SquareFreeDecomposition sf = square_free_decomposition(char_poly(sq));
    std::int64_t worst = 0, at_minus1 = 0, at_plus1 = 0;
    for (const SquareFreeFactor& part : sf.factors) {
        worst = std::max(worst, part.multiplicity);
        if (part.factor.sign_at(Rat(-1)) == 0) at_minus1 = part.multiplicity;
        if (part.factor.sign_at(Rat(1)) == 0) at_plus1 = part.multiplicity;
    }
    r.check(at_minus1 == 1, "-1 is a simple quotient eigenvalue", std::to_string(at_minus1));
    r.check(worst <= 2, "no quotient eigenvalue has multiplicity above 2", std::to_string(worst));
    r.note("multiplicity of eigenvalue 1", std::to_string(at_plus1));

    if (h >= 2)
        r.check(f == detail::banded_f_pattern(g), "entries match the banded layout");
    else
        r.note("layout", "h = 1 collapses the band; pattern comparison skipped");
    return {std::move(f), std::move(r)};
}

// The five Seidel laws plus the eigenvalue bounds obtained by shifting the
// adjacency spectrum through y = -1 - 2x.
inline TheoremReport verify_seidel_laws(const ChainString& g) {
    TheoremReport r{std::string(claims::seidel_laws), g.to_string()};
    const std::int64_t n = g.n(), h = g.h();
    Spectrum s = seidel_spectrum(g);
    Spectrum a = adjacency_spectrum(g);

    std::int64_t at_minus1 = multiplicity_at(s, Rat(-1));
    r.check(at_minus1 == n - 2 * h + 1, "eigenvalue -1 has multiplicity n - 2h + 1",
            std::to_string(at_minus1));
    r.check(eigenvalue_free(s, RationalInterval::closed(Rat(-2), Rat(0)), {Rat(-1)}),
            "no eigenvalue in [-2, 0] apart from -1");

    Inertia in = inertia_of(s);
    r.check(in == Inertia{h, 0, n - h}, "inertia (h, 0, n-h)", detail::inertia_brief(in));

    std::int64_t ms = distinct_count(s);
    r.check(h + 1 <= ms, "at least h + 1 distinct eigenvalues", std::to_string(ms));
    r.check(ms <= 2 * h, "at most 2h distinct eigenvalues", std::to_string(ms));

    std::int64_t worst = 0;
    for (const RootBox& e : s.entries()) {
        bool is_minus1 = e.exact ? e.value == -1
                                 : e.interval.contains(Rat(-1)) && e.factor.sign_at(Rat(-1)) == 0;
        if (!is_minus1) worst = std::max(worst, e.multiplicity);
    }
    r.check(worst <= 2, "multiplicity away from -1 is at most 2", std::to_string(worst));

    auto sx = detail::expand_boxes(s);
    auto ax = detail::expand_boxes(a);
    const RootBox& s_head = *sx[(std::size_t)(h - 1)];
    r.check(compare_roots(s_head, detail::reflect_box(*ax[(std::size_t)(n - h)])) >= 0,
            "eigenvalue h is at least -1 - 2 lambda_{n-h+1}(A)");
    r.check(compare_roots(s_head, detail::exact_box(Rat(0))) > 0, "eigenvalue h is positive");
    r.check(compare_roots(*ax[(std::size_t)(h - 1)], detail::exact_box(Rat(1, 2))) > 0,
            "adjacency eigenvalue h exceeds 1/2");
    if (h >= 2) {
        const RootBox& s_tail = *sx[(std::size_t)(n - h + 1)];
        r.check(compare_roots(s_tail, detail::reflect_box(*ax[(std::size_t)(h - 1)])) <= 0,
                "eigenvalue n-h+2 is at most -1 - 2 lambda_h(A)");
        r.check(compare_roots(s_tail, detail::exact_box(Rat(-2))) < 0,
                "eigenvalue n-h+2 is below -2");
    }

    r.note("spectrum", detail::spectrum_brief(s));
    r.note("distinct eigenvalues", std::to_string(ms));
    r.note("multiplicity of eigenvalue 1", std::to_string(multiplicity_at(s, Rat(1))));
    return r;
}

// The Seidel spectrum is simple exactly for the all-ones block vector.
inline TheoremReport classify_distinct_seidel(const ChainString& g) {
    TheoremReport r{std::string(claims::seidel_distinct), g.to_string()};
    const auto& b = g.blocks();
    bool predicted = std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 1; });

    Spectrum s = seidel_spectrum(g);
    bool actual = distinct_count(s) == g.n();
    r.note("blocks predict a simple spectrum", detail::bool_name(predicted));
    r.note("distinct eigenvalues", std::to_string(distinct_count(s)) + " of " +
                                       std::to_string(g.n()));
    r.check(predicted == actual, "block shape matches spectral simplicity");
    return r;
}

namespace detail {

inline TheoremReport not_applicable_report(std::string_view claim_id, const ChainString& g,
                                           const char* reason) {
    TheoremReport r{std::string(claim_id), g.to_string()};
    r.verdict = Verdict::not_applicable;
    r.note("reason", reason);
    return r;
}

inline TheoremReport check_h2_quartic(const ChainString& g) {
    if (g.h() != 2) return not_applicable_report(claims::h2_quartic, g, "needs h = 2");
    TheoremReport r{std::string(claims::h2_quartic), g.to_string()};
    const auto& b = g.blocks();
    try {
        IntPolynomial q = quartic_charpoly_h2(b[0], b[1], b[2], b[3]);
        r.check(detail::full_char_poly(g, MatrixKind::adjacency) ==
                    IntPolynomial::monomial(1, g.n() - 4) * q,
                "the full characteristic polynomial is x^(n-4) times the quartic");
        r.note("quartic", q.to_string());
    } catch (const Error& e) {
        if (e.code() != errc::cross_check_failed) throw;
        r.check(false, "closed form matches the quotient matrix", e.what());
    }
    return r;
}

inline TheoremReport check_cospectral_family(const ChainString& g) {
    if (g.h() != 2) return not_applicable_report(claims::cospectral_family, g, "needs h = 2");
    const auto& b = g.blocks();
    if (Int(b[0]) * b[3] != Int(b[1]) * b[2])
        return not_applicable_report(claims::cospectral_family, g, "needs a1 a4 = a2 a3");
    return construct_cospectral_pair(b[0], b[1], b[2], b[3]).report;
}

inline TheoremReport check_h1_uniqueness(const ChainString& g) {
    if (g.h() != 1) return not_applicable_report(claims::h1_uniqueness, g, "needs h = 1");
    return verify_h1_uniqueness(g.n());
}

} // namespace detail

inline TheoremReport run_claim(std::string_view claim_id, const ChainString& g) {
    if (claim_id == claims::adjacency_laws) return verify_adjacency_laws(g);
    if (claim_id == claims::adjacency_distinct) return classify_distinct_adjacency(g);
    if (claim_id == claims::h2_quartic) return detail::check_h2_quartic(g);
    if (claim_id == claims::cospectral_family) return detail::check_cospectral_family(g);
    if (claim_id == claims::h1_uniqueness) return detail::check_h1_uniqueness(g);
    if (claim_id == claims::seidel_reduction) return build_F_matrix(g).report;
    if (claim_id == claims::seidel_laws) return verify_seidel_laws(g);
    if (claim_id == claims::seidel_distinct) return classify_distinct_seidel(g);
    raise(errc::malformed_token, "unknown claim id: " + std::string(claim_id));
}

inline std::vector<TheoremReport> run_all_claims(const ChainString& g) {
    std::vector<TheoremReport> out;
    out.reserve(claim_registry().size());
    for (const ClaimInfo& c : claim_registry()) out.push_back(run_claim(c.id, g));
    return out;
}

} // namespace chainspec
