#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chainspec/errors.hpp"
#include "chainspec/int_polynomial.hpp"
#include "chainspec/numbers.hpp"

namespace chainspec {

// Interval with exact rational endpoints and per-endpoint openness.
struct RationalInterval {
    Rat lo, hi;
    bool lo_open = true;
    bool hi_open = true;

    static RationalInterval open(Rat a, Rat b) { return make(std::move(a), std::move(b), true, true); }
    static RationalInterval closed(Rat a, Rat b) { return make(std::move(a), std::move(b), false, false); }
    static RationalInterval point(Rat v) {
        RationalInterval iv;
        iv.lo = v;
        iv.hi = std::move(v);
        iv.lo_open = iv.hi_open = false;
        return iv;
    }
    static RationalInterval make(Rat a, Rat b, bool a_open, bool b_open) {
        if (a > b) raise(errc::invalid_range, "interval endpoints out of order");
        RationalInterval iv;
        iv.lo = std::move(a);
        iv.hi = std::move(b);
        iv.lo_open = a_open;
        iv.hi_open = b_open;
        return iv;
    }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rat& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && lo_open) return false;
        if (x == hi && hi_open) return false;
        return true;
    }
};

// Sturm chain of the square-free part of p. Counts distinct real roots; the
// chain elements are kept primitive with signs intact, which leaves every
// variation count unchanged.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p) {
        IntPolynomial s0 = square_free_part(p);
        chain_.push_back(s0);
        if (s0.degree() >= 1) {
            chain_.push_back(s0.derivative().primitive_part());
            for (;;) {
                const IntPolynomial& a = chain_[chain_.size() - 2];
                const IntPolynomial& b = chain_.back();
                if (b.degree() == 0) break;
                IntPolynomial r = -detail::signed_pseudo_rem(a, b);
                if (r.is_zero()) break;
                chain_.push_back(r.primitive_part());
            }
        }
    }

    const IntPolynomial& square_free() const { return chain_.front(); }

    std::int64_t variations(const Rat& x) const {
        std::int64_t v = 0;
        int prev = 0;
        for (const IntPolynomial& p : chain_) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // Distinct roots in the open interval; both endpoints must be non-roots.
    std::int64_t count_open(const Rat& a, const Rat& b) const {
        if (a >= b) return 0;
        return variations(a) - variations(b);
    }

private:
    std::vector<IntPolynomial> chain_;
};

// Number of distinct real roots of p inside iv. The endpoints themselves must
// not be roots; openness flags therefore never change the answer.
inline std::int64_t sturm_count(const IntPolynomial& p, const RationalInterval& iv) {
    if (p.is_zero()) raise(errc::zero_polynomial, "root count of the zero polynomial");
    if (p.sign_at(iv.lo) == 0 || p.sign_at(iv.hi) == 0)
        raise(errc::endpoint_is_root, "interval endpoint is a root; shrink the interval");
    if (p.degree() == 0) return 0;
    SturmChain chain(p);
    return chain.count_open(iv.lo, iv.hi);
}

// One distinct real root of the polynomial being isolated. Exact rational
// roots surface as degenerate closed intervals with `exact` set; the others
// come as open intervals whose endpoints provably miss every root, with
// `factor` (a square-free divisor) changing sign across the interval.
struct RootBox {
    RationalInterval interval;
    std::int64_t multiplicity;
    IntPolynomial factor;
    bool exact;
    Rat value; // set when exact

    Rat position() const { return exact ? value : interval.midpoint(); }
};

namespace detail {

// One bisection step on a non-exact box; upgrades to exact on a midpoint hit.
inline void halve_box(RootBox& box) {
    if (box.exact) return;
    Rat m = box.interval.midpoint();
    int sm = box.factor.sign_at(m);
    if (sm == 0) {
        box.exact = true;
        box.value = m;
        box.interval = RationalInterval::point(std::move(m));
    } else if (sm == box.factor.sign_at(box.interval.lo)) {
        box.interval = RationalInterval::open(std::move(m), box.interval.hi);
    } else {
        box.interval = RationalInterval::open(box.interval.lo, std::move(m));
    }
}

// Every real root of p has |x| strictly below this bound.
inline Rat cauchy_bound(const IntPolynomial& p) {
    Int lead = p.leading() < 0 ? Int(-p.leading()) : p.leading();
    Int big = 0;
    for (std::int64_t i = 0; i < p.degree(); ++i) {
        Int a = p.coeff(i) < 0 ? Int(-p.coeff(i)) : p.coeff(i);
        if (a > big) big = a;
    }
    return Rat(1) + Rat(big, lead);
}

inline std::vector<Int> small_divisors(Int v) {
    if (v < 0) v = -v;
    std::vector<Int> out;
    for (Int d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
    }
    if (v >= 2) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

struct Isolator {
    const IntPolynomial& q; // square-free, primitive, positive lead
    const SturmChain& chain;
    const Rat& width;
    std::vector<RootBox>* out;
    std::int64_t multiplicity;

    void emit_exact(Rat v) {
        out->push_back({RationalInterval::point(v), multiplicity, q, true, v});
    }

    void emit_interval(Rat a, Rat b) {
        out->push_back({RationalInterval::open(std::move(a), std::move(b)), multiplicity, q, false, Rat(0)});
    }

    // Bisect (a, b), known to hold exactly one simple root, down to the
    // target width; an exact hit at any midpoint short-circuits.
    bool refine(Rat& a, Rat& b, const Rat& target) {
        int sa = q.sign_at(a);
        while (b - a > target) {
            Rat m = (a + b) / 2;
            int sm = q.sign_at(m);
            if (sm == 0) {
                emit_exact(std::move(m));
                return true;
            }
            if (sm == sa)
                a = std::move(m);
            else
                b = std::move(m);
        }
        return false;
    }

    // Rational-root certification on a single-root interval. Integer
    // candidates are always tried; u/v candidates need the denominator to
    // divide the leading coefficient, searched only while it stays small, so
    // a non-monic polynomial with a huge lead may keep a rational root boxed
    // rather than pinned. Char polys are monic and never hit that case.
    void finish_single(Rat a, Rat b) {
        Rat half(1, 2);
        if (refine(a, b, width < half ? width : half)) return;
        Int k = rat_num(a) / rat_den(a); // floor for positive; fix below
        if (a < 0 && rat_num(a) % rat_den(a) != 0) --k;
        Rat candidate(k + 1);
        if (candidate > a && candidate < b && q.sign_at(candidate) == 0) {
            emit_exact(std::move(candidate));
            return;
        }
        const Int& lead = q.leading();
        if (lead >= 2 && lead <= 1000000) {
            for (const Int& v : small_divisors(lead)) {
                Rat spacing(Int(1), v);
                while (b - a >= spacing) {
                    if (refine(a, b, (b - a) / 2)) return;
                }
                Int lo_scaled = rat_num(a) * v / rat_den(a);
                if (a < 0 && (rat_num(a) * v) % rat_den(a) != 0) --lo_scaled;
                Rat uv(lo_scaled + 1, v);
                if (uv > a && uv < b && q.sign_at(uv) == 0) {
                    emit_exact(std::move(uv));
                    return;
                }
            }
        }
        emit_interval(std::move(a), std::move(b));
    }

    void run(Rat lo, Rat hi) {
        std::vector<std::pair<Rat, Rat>> work;
        work.emplace_back(std::move(lo), std::move(hi));
        while (!work.empty()) {
            auto [a, b] = std::move(work.back());
            work.pop_back();
            std::int64_t cnt = chain.count_open(a, b);
            if (cnt == 0) continue;
            if (cnt == 1) {
                finish_single(std::move(a), std::move(b));
                continue;
            }
            Rat m = (a + b) / 2;
            if (q.sign_at(m) != 0) {
                work.emplace_back(a, m);
                work.emplace_back(m, b);
                continue;
            }
            // The midpoint is itself a root: carve out a punched
            // neighbourhood that contains no other root, then recurse on the
            // two sides.
            Rat eps = (b - a) / 4;
            while (q.sign_at(m - eps) == 0 || q.sign_at(m + eps) == 0 ||
                   chain.count_open(m - eps, m + eps) > 1)
                eps /= 2;
            emit_exact(m);
            work.emplace_back(a, m - eps);
            work.emplace_back(m + eps, b);
        }
    }
};

} // namespace detail

// All distinct real roots of p with multiplicities, as disjoint boxes sorted
// ascending. Interval boxes have width at most `width`.
inline std::vector<RootBox> isolate_real_roots(const IntPolynomial& p, const Rat& width) {
    if (p.is_zero()) raise(errc::zero_polynomial, "cannot isolate roots of the zero polynomial");
    if (width <= 0) raise(errc::invalid_range, "isolation width must be positive");
    std::vector<RootBox> boxes;
    SquareFreeDecomposition dec = square_free_decomposition(p);
    for (const auto& [factor, mult] : dec.factors) {
        IntPolynomial q = factor;
        if (q.coeff(0) == 0) {
            // x divides a square-free factor exactly once
            boxes.push_back({RationalInterval::point(Rat(0)), mult, q, true, Rat(0)});
            std::vector<Int> shifted(q.coefficients().begin() + 1, q.coefficients().end());
            q = IntPolynomial(std::move(shifted));
        }
        if (q.degree() < 1) continue;
        SturmChain chain(q);
        detail::Isolator iso{q, chain, width, &boxes, mult};
        Rat bound = detail::cauchy_bound(q);
        iso.run(-bound, bound);
    }

    std::sort(boxes.begin(), boxes.end(),
              [](const RootBox& x, const RootBox& y) { return x.position() < y.position(); });

    // Boxes from different square-free factors can overlap even though their
    // roots differ; shave them down until the layout is provably disjoint.
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (std::size_t i = 0; i < boxes.size(); ++i)
            for (std::size_t j = i + 1; j < boxes.size(); ++j) {
                RootBox& x = boxes[i];
                RootBox& y = boxes[j];
                bool separated;
                if (x.exact && y.exact)
                    separated = true; // coprime factors cannot share a root
                else if (x.exact)
                    separated = !y.interval.contains(x.value);
                else if (y.exact)
                    separated = !x.interval.contains(y.value);
                else
                    separated = x.interval.hi <= y.interval.lo || y.interval.hi <= x.interval.lo;
                if (separated) continue;
                dirty = true;
                detail::halve_box(x);
                detail::halve_box(y);
            }
        if (dirty)
            std::sort(boxes.begin(), boxes.end(),
                      [](const RootBox& x, const RootBox& y) { return x.position() < y.position(); });
    }
    return boxes;
}

} // namespace chainspec
