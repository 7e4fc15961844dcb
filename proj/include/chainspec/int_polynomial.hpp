#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainspec/errors.hpp"
#include "chainspec/int_matrix.hpp"
#include "chainspec/numbers.hpp"

namespace chainspec {

// Integer-coefficient polynomial, coefficients ascending by degree. The zero
// polynomial stores no coefficients; everything else keeps a nonzero lead.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(Int v) {
        IntPolynomial p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static IntPolynomial from_coeffs(std::initializer_list<std::int64_t> ascending) {
        std::vector<Int> c;
        for (std::int64_t v : ascending) c.emplace_back(v);
        return IntPolynomial(std::move(c));
    }

    static IntPolynomial monomial(Int coeff, std::int64_t deg) {
        IntPolynomial p;
        if (coeff != 0) {
            p.c_.assign((std::size_t)deg + 1, Int(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return (std::int64_t)c_.size() - 1; }
    const std::vector<Int>& coefficients() const { return c_; }

    Int coeff(std::int64_t k) const {
        if (k < 0 || k >= (std::int64_t)c_.size()) return Int(0);
        return c_[(std::size_t)k];
    }

    const Int& leading() const {
        if (c_.empty()) raise(errc::zero_polynomial, "zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<Int> c(a.c_);
        for (Int& v : c) v = -v;
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
        if (s == 0) return {};
        std::vector<Int> c(a.c_);
        for (Int& v : c) v *= s;
        return IntPolynomial(std::move(c));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Int> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
        return IntPolynomial(std::move(c));
    }

    // gcd of all coefficients, non-negative; zero only for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const Int& v : c_) {
            g = boost::multiprecision::gcd(g, v);
            if (g == 1) break;
        }
        return g;
    }

    // content removed; keeps the sign of the leading coefficient.
    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        Int g = content();
        std::vector<Int> c(c_);
        for (Int& v : c) v /= g;
        return IntPolynomial(std::move(c));
    }

    Rat evaluate(const Rat& x) const {
        Rat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
        return acc;
    }

    Int evaluate_int(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    int sign_at(const Rat& x) const { return evaluate(x).sign(); }

    // Human-readable form, highest degree first: "x^4 - 14*x^2 + 16".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Int& v = c_[i];
            if (v == 0) continue;
            Int a = v < 0 ? Int(-v) : v;
            if (out.empty())
                out += v < 0 ? "-" : "";
            else
                out += v < 0 ? " - " : " + ";
            bool unit = a == 1 && i > 0;
            if (!unit) out += a.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

// Exact quotient; raises if the division leaves a remainder or fractions.
inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) raise(errc::zero_polynomial, "division by the zero polynomial");
    if (a.is_zero()) return {};
    std::int64_t da = a.degree(), db = b.degree();
    if (da < db) raise(errc::internal, "polynomial division is not exact");
    std::vector<Int> rem(a.coefficients());
    std::vector<Int> quot((std::size_t)(da - db + 1));
    const Int& lead = b.leading();
    for (std::int64_t k = da - db; k >= 0; --k) {
        Int top = rem[(std::size_t)(k + db)];
        if (top == 0) continue;
        if (top % lead != 0) raise(errc::internal, "polynomial division is not exact");
        Int q = top / lead;
        for (std::int64_t j = 0; j <= db; ++j) rem[(std::size_t)(k + j)] -= q * b.coeff(j);
        quot[(std::size_t)k] = std::move(q);
    }
    for (const Int& v : rem)
        if (v != 0) raise(errc::internal, "polynomial division is not exact");
    return IntPolynomial(std::move(quot));
}

namespace detail {

// Pseudo-remainder scaled by a positive power of |lc(b)|, so the result is a
// positive multiple of the true remainder. Sign decisions stay valid.
inline IntPolynomial signed_pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    const Int& d = b.leading();
    std::int64_t total = a.degree() - b.degree() + 1;
    std::int64_t scale_left = total;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPolynomial t = IntPolynomial::monomial(r.leading(), r.degree() - b.degree());
        r = d * r - t * b;
        --scale_left;
    }
    while (scale_left-- > 0) r = d * r;
    // r now equals d^total times the true remainder
    return d < 0 && total % 2 != 0 ? -r : r;
}

} // namespace detail

// Greatest common divisor in Z[x]: primitive-part pseudo-remainder loop,
// result has positive leading coefficient.
inline IntPolynomial gcd_poly(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        const IntPolynomial& p = a.is_zero() ? b : a;
        return p.leading() < 0 ? -p : p;
    }
    Int cont = boost::multiprecision::gcd(a.content(), b.content());
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = detail::signed_pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.leading() < 0) u = -u;
    return cont * u;
}

// Largest square-free divisor, primitive, positive lead.
inline IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "square-free part of the zero polynomial");
    IntPolynomial f = p.primitive_part();
    if (f.leading() < 0) f = -f;
    if (f.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial g = gcd_poly(f, f.derivative());
    return exact_divide(f, g);
}

struct SquareFreeFactor {
    IntPolynomial factor; // primitive, square-free, positive lead, degree >= 1
    std::int64_t multiplicity;
};

struct SquareFreeDecomposition {
    Int unit; // signed content: p = unit * product factor^multiplicity
    std::vector<SquareFreeFactor> factors;

    IntPolynomial reconstruct() const {
        IntPolynomial p = IntPolynomial::constant(unit);
        for (const auto& [q, m] : factors)
            for (std::int64_t i = 0; i < m; ++i) p = p * q;
        return p;
    }
};

// Yun's algorithm on the primitive part; the factors come out square-free and
// pairwise coprime, with all divisions exact in Z[x].
inline SquareFreeDecomposition square_free_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "square-free decomposition of the zero polynomial");
    SquareFreeDecomposition out;
    out.unit = p.content();
    if (p.leading() < 0) out.unit = -out.unit;
    IntPolynomial f = p.primitive_part();
    if (f.leading() < 0) f = -f;
    if (f.degree() == 0) return out;

    IntPolynomial g = gcd_poly(f, f.derivative());
    IntPolynomial w = exact_divide(f, g);
    IntPolynomial y = exact_divide(f.derivative(), g);
    IntPolynomial z = y - w.derivative();
    std::int64_t i = 1;
    while (w.degree() > 0) {
        IntPolynomial gi = gcd_poly(w, z);
        if (gi.degree() > 0) out.factors.push_back({gi, i});
        w = exact_divide(w, gi);
        y = exact_divide(z, gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// det(xI - m) by Faddeev-LeVerrier; every division by k below is exact.
inline IntPolynomial char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::invalid_range, "characteristic polynomial of non-square matrix");
    std::int64_t n = m.rows();
    if (n > 128) raise(errc::size_limit, "matrix order exceeds the characteristic polynomial cap of 128");
    std::vector<Int> c((std::size_t)n + 1);
    c[(std::size_t)n] = 1;
    IntMatrix acc = IntMatrix::identity(n);
    for (std::int64_t k = 1; k <= n; ++k) {
        acc = m * acc;
        Int tr = 0;
        for (std::int64_t i = 0; i < n; ++i) tr += acc.at(i, i);
        Int ck = -tr / k;
        c[(std::size_t)(n - k)] = ck;
        for (std::int64_t i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    return IntPolynomial(std::move(c));
}

// Determinant D_k of the k x k tridiagonal matrix with diagonal c and unit
// off-diagonals, by the three-term recurrence D_k = c D_{k-1} - D_{k-2}.
inline Rat tridiag_det_recurrence(std::int64_t k, const Rat& c) {
    if (k < 0) raise(errc::invalid_range, "negative tridiagonal order");
    Rat prev = 1, cur = c;
    if (k == 0) return prev;
    for (std::int64_t i = 2; i <= k; ++i) {
        Rat next = c * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Closed form (alpha^{k+1} - beta^{k+1}) / (alpha - beta) with
// alpha, beta = (c +- sqrt(c^2-4))/2, evaluated by exact arithmetic on
// u + v*sqrt(d) pairs; d < 0 works the same way formally. At c = +-2 the
// formula degenerates to k+1 times the sign pattern.
inline Rat tridiag_det_closed(std::int64_t k, const Rat& c) {
    if (k < 0) raise(errc::invalid_range, "negative tridiagonal order");
    if (c == 2) return Rat(k + 1);
    if (c == -2) return k % 2 == 0 ? Rat(k + 1) : Rat(-(k + 1));
    Rat d = c * c - 4;
    // alpha^{k+1} = u + v*sqrt(d); beta is the conjugate, so the quotient by
    // alpha - beta = sqrt(d) is exactly 2v.
    Rat u = 1, v = 0;
    Rat bu = c / 2, bv = Rat(1, 2);
    std::int64_t e = k + 1;
    while (e > 0) {
        if (e & 1) {
            Rat nu = u * bu + v * bv * d;
            Rat nv = u * bv + v * bu;
            u = std::move(nu);
            v = std::move(nv);
        }
        Rat su = bu * bu + bv * bv * d;
        Rat sv = 2 * bu * bv;
        bu = std::move(su);
        bv = std::move(sv);
        e >>= 1;
    }
    return 2 * v;
}

} // namespace chainspec
