#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "chainspec/errors.hpp"

namespace chainspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow10(int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// Fixed-point rendering with ties broken toward the even quotient digit.
// The sign is dropped when everything rounds away to zero.
inline std::string decimal_string(const Rat& r, int places) {
    if (places < 0) raise(errc::invalid_range, "negative decimal place count");
    Int scale = int_pow10(places);
    Int num = rat_num(r) * scale;
    Int den = rat_den(r); // canonical form keeps den > 0
    bool neg = num < 0;
    if (neg) num = -num;
    Int q = num / den;
    Int rem = num % den;
    Int twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) != 0)) ++q;
    std::string digits = q.str();
    std::string out;
    if (neg && q != 0) out += '-';
    if (places == 0) {
        out += digits;
        return out;
    }
    if ((int)digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    out += digits.substr(0, digits.size() - places);
    out += '.';
    out += digits.substr(digits.size() - places);
    return out;
}

// Exact values print as integers or reduced fractions, never as floats.
inline std::string rational_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace detail {
inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}
} // namespace detail

// Accepts "p", "-p", "p/q" and decimal literals like "0.25".
inline Rat parse_rational(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    auto bad = [&] { raise(errc::malformed_token, "not a rational literal: '" + text + "'"); };
    if (s.empty()) bad();
    Rat value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!detail::all_digits(p) || !detail::all_digits(q)) bad();
        Int den(q);
        if (den == 0) bad();
        value = Rat(Int(p), den);
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!detail::all_digits(ip) || (!fp.empty() && !detail::all_digits(fp))) bad();
        Int whole(ip);
        Int frac = fp.empty() ? Int(0) : Int(fp);
        Int scale = int_pow10((int)fp.size());
        value = Rat(whole * scale + frac, scale);
    } else {
        if (!detail::all_digits(s)) bad();
        value = Rat(Int(s));
    }
    return neg ? -value : value;
}

// mt19937_64 output is pinned by the standard; the rejection step below keeps
// sampling reproducible where std::uniform_int_distribution would not be.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) raise(errc::invalid_range, "empty sampling range");
        // Accept draws in [2^64 mod n, 2^64); that range covers every residue
        // class mod n equally often.
        std::uint64_t threshold = (-n) % n;
        for (;;) {
            std::uint64_t v = eng_();
            if (v >= threshold) return v % n;
        }
    }

    // Uniform over [lo, hi], both ends included.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) raise(errc::invalid_range, "inverted sampling range");
        return lo + (std::int64_t)below((std::uint64_t)(hi - lo) + 1);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace chainspec
