#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainspec/errors.hpp"
#include "chainspec/numbers.hpp"

namespace chainspec {

// Run-length form 0^{a1} 1^{a2} ... 0^{a_{2h-1}} 1^{a_{2h}} of a connected
// chain graph: whites arrive in blocks of zeros, blacks in blocks of ones,
// and a black is adjacent to exactly the whites written before it.
class ChainString {
public:
    static ChainString from_blocks(std::vector<std::int64_t> blocks) {
        if (blocks.empty()) raise(errc::empty_input, "no blocks");
        if (blocks.size() % 2 != 0)
            raise(errc::odd_block_count, "block count must be even, got " + std::to_string(blocks.size()));
        std::int64_t total = 0;
        for (std::int64_t b : blocks) {
            if (b < 1) raise(errc::malformed_token, "block sizes must be positive");
            if (b > max_order || total > max_order - b) raise(errc::size_limit, "vertex count exceeds cap");
            total += b;
        }
        return ChainString(std::move(blocks), total);
    }

    const std::vector<std::int64_t>& blocks() const { return blocks_; }
    std::int64_t n() const { return n_; }
    std::int64_t h() const { return (std::int64_t)blocks_.size() / 2; }

    // Zero-run sizes a1, a3, ... (white cells) and one-run sizes a2, a4, ...
    std::int64_t white_block(std::int64_t k) const { return blocks_[2 * (k - 1)]; }
    std::int64_t black_block(std::int64_t k) const { return blocks_[2 * k - 1]; }

    std::string bit_string() const {
        std::string s;
        s.reserve((std::size_t)n_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            s.append((std::size_t)blocks_[i], i % 2 == 0 ? '0' : '1');
        return s;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += ' ';
            s += i % 2 == 0 ? "0^" : "1^";
            s += std::to_string(blocks_[i]);
        }
        return s;
    }

    friend bool operator==(const ChainString& a, const ChainString& b) { return a.blocks_ == b.blocks_; }
    friend bool operator!=(const ChainString& a, const ChainString& b) { return !(a == b); }
    friend bool operator<(const ChainString& a, const ChainString& b) { return a.blocks_ < b.blocks_; }

    static constexpr std::int64_t max_order = 1 << 20;

private:
    ChainString(std::vector<std::int64_t> blocks, std::int64_t n) : blocks_(std::move(blocks)), n_(n) {}

    std::vector<std::int64_t> blocks_;
    std::int64_t n_;
};

namespace detail {

inline bool is_bit_word(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c != '0' && c != '1') return false;
    return true;
}

inline std::vector<std::string> split_ws(const std::string& text) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r') ++j;
        if (j > i) words.push_back(text.substr(i, j - i));
        i = j;
    }
    return words;
}

// "0^12" -> {bit 0, count 12}; anything else is a malformed token.
inline std::pair<int, std::int64_t> parse_block_token(const std::string& tok) {
    if (tok.size() < 3 || (tok[0] != '0' && tok[0] != '1') || tok[1] != '^')
        raise(errc::malformed_token, "expected 0^INT or 1^INT, got '" + tok + "'");
    std::int64_t count = 0;
    for (std::size_t i = 2; i < tok.size(); ++i) {
        char c = tok[i];
        if (c < '0' || c > '9') raise(errc::malformed_token, "bad exponent in '" + tok + "'");
        if (count > ChainString::max_order) raise(errc::size_limit, "exponent exceeds cap in '" + tok + "'");
        count = count * 10 + (c - '0');
    }
    if (count == 0) raise(errc::malformed_token, "bad exponent in '" + tok + "'");
    return {tok[0] - '0', count};
}

} // namespace detail

// Accepts block notation "0^a1 1^a2 ..." or a raw bit string. Adjacent blocks
// over the same symbol are merged, so the result is always run-length normal.
inline ChainString parse_chain_string(const std::string& text) {
    std::vector<std::string> words = detail::split_ws(text);
    if (words.empty()) raise(errc::empty_input, "no input");

    std::vector<std::pair<int, std::int64_t>> runs;
    auto push_run = [&](int bit, std::int64_t count) {
        if (!runs.empty() && runs.back().first == bit)
            runs.back().second += count;
        else
            runs.emplace_back(bit, count);
    };

    if (words.size() == 1 && detail::is_bit_word(words[0])) {
        for (char c : words[0]) push_run(c - '0', 1);
    } else {
        for (const std::string& tok : words) {
            auto [bit, count] = detail::parse_block_token(tok);
            push_run(bit, count);
        }
    }

    if (runs.front().first != 0)
        raise(errc::not_connected, "leading 1-run: first black vertex would have no neighbor");
    if (runs.back().first != 1)
        raise(errc::not_connected, "trailing 0-run: final white vertex would have no neighbor");

    std::vector<std::int64_t> blocks;
    blocks.reserve(runs.size());
    for (auto [bit, count] : runs) blocks.push_back(count);
    return ChainString::from_blocks(std::move(blocks));
}

// Reverse the bit string and flip every bit; in block form the sequence
// simply reverses. Always lands back on a valid chain string.
inline ChainString reverse_complement(const ChainString& g) {
    std::vector<std::int64_t> blocks(g.blocks().rbegin(), g.blocks().rend());
    return ChainString::from_blocks(std::move(blocks));
}

namespace detail {

// Lexicographic comparison of the two bit strings straight off the run-length
// form, so huge blocks never get expanded.
inline int compare_bits(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::size_t ia = 0, ib = 0;
    std::int64_t ra = a.empty() ? 0 : a[0];
    std::int64_t rb = b.empty() ? 0 : b[0];
    while (ia < a.size() && ib < b.size()) {
        int bit_a = (int)(ia % 2), bit_b = (int)(ib % 2);
        if (bit_a != bit_b) return bit_a < bit_b ? -1 : 1;
        std::int64_t step = ra < rb ? ra : rb;
        ra -= step;
        rb -= step;
        if (ra == 0 && ++ia < a.size()) ra = a[ia];
        if (rb == 0 && ++ib < b.size()) rb = b[ib];
    }
    if (ia == a.size() && ib == b.size()) return 0;
    return ia == a.size() ? -1 : 1;
}

} // namespace detail

// The smaller of g and reverse_complement(g) under '0' < '1' bit-string order.
inline ChainString canonical_form(const ChainString& g) {
    ChainString rc = reverse_complement(g);
    return detail::compare_bits(g.blocks(), rc.blocks()) <= 0 ? g : rc;
}

// Connected chain graphs are isomorphic exactly when their bit strings are
// equal or reverse-complements of each other.
inline bool is_isomorphic(const ChainString& g, const ChainString& h) {
    return canonical_form(g) == canonical_form(h);
}

// Streams every composition of n into 2h positive parts, h ascending and
// compositions in lexicographic order within each h. With dedup set, only
// strings that are their own canonical form come through, one per
// isomorphism class.
class ChainEnumerator {
public:
    ChainEnumerator(std::int64_t n, std::optional<std::int64_t> h, bool dedup)
        : n_(n), fixed_h_(h), dedup_(dedup) {
        if (n < 2) raise(errc::invalid_range, "need n >= 2");
        if (h) {
            if (*h < 1 || 2 * *h > n) raise(errc::invalid_range, "need 1 <= 2h <= n");
            cur_h_ = *h;
        } else {
            cur_h_ = 1;
        }
        parts_ = first_composition(cur_h_);
    }

    std::optional<ChainString> next() {
        while (!done_) {
            std::vector<std::int64_t> out = parts_;
            advance();
            ChainString g = ChainString::from_blocks(std::move(out));
            if (!dedup_ || canonical_form(g) == g) return g;
        }
        return std::nullopt;
    }

private:
    std::vector<std::int64_t> first_composition(std::int64_t h) const {
        std::vector<std::int64_t> p((std::size_t)(2 * h), 1);
        p.back() = n_ - 2 * h + 1;
        return p;
    }

    // Next composition in lex order: bump the rightmost part that still has
    // slack to its left, pushing the surplus to the end.
    void advance() {
        std::size_t m = parts_.size();
        std::size_t i = m - 1;
        while (i > 0 && parts_[i] == 1) --i;
        if (i == 0) {
            if (fixed_h_ || 2 * (cur_h_ + 1) > n_) {
                done_ = true;
                return;
            }
            ++cur_h_;
            parts_ = first_composition(cur_h_);
            return;
        }
        std::int64_t tail = parts_[i] - 1;
        parts_[i] = 1;
        parts_[i - 1] += 1;
        parts_[m - 1] = tail;
    }

    std::int64_t n_;
    std::optional<std::int64_t> fixed_h_;
    bool dedup_;
    std::int64_t cur_h_ = 1;
    std::vector<std::int64_t> parts_;
    bool done_ = false;
};

inline std::vector<ChainString> enumerate_chain_strings(std::int64_t n, std::optional<std::int64_t> h, bool dedup) {
    ChainEnumerator e(n, h, dedup);
    std::vector<ChainString> out;
    while (auto g = e.next()) out.push_back(*g);
    return out;
}

// Uniform composition of n into 2h positive parts: sample 2h-1 distinct cut
// points in {1,...,n-1} and take the gaps. Fixed seed, fixed output.
inline ChainString random_chain_string(std::int64_t n, std::int64_t h, std::uint64_t seed) {
    if (n < 2 || h < 1 || 2 * h > n) raise(errc::invalid_range, "need 1 <= 2h <= n");
    Rng rng(seed);
    std::int64_t parts = 2 * h;
    std::vector<std::int64_t> pool((std::size_t)(n - 1));
    for (std::int64_t i = 0; i < n - 1; ++i) pool[(std::size_t)i] = i + 1;
    std::vector<std::int64_t> cuts;
    for (std::int64_t i = 0; i < parts - 1; ++i) {
        std::size_t j = (std::size_t)i + (std::size_t)rng.below((std::uint64_t)(pool.size() - (std::size_t)i));
        std::swap(pool[(std::size_t)i], pool[j]);
        cuts.push_back(pool[(std::size_t)i]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    std::vector<std::int64_t> blocks;
    std::int64_t prev = 0;
    for (std::int64_t c : cuts) {
        blocks.push_back(c - prev);
        prev = c;
    }
    return ChainString::from_blocks(std::move(blocks));
}

} // namespace chainspec
