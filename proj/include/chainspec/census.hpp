#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chainspec/chain_string.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/graph_matrices.hpp"
#include "chainspec/int_polynomial.hpp"
#include "chainspec/numbers.hpp"
#include "chainspec/spectrum.hpp"

namespace chainspec {

// One census row: everything needed to bucket, compare, and later mine a
// canonical string without recomputing its spectra.
struct CensusRecord {
    std::string canonical;
    std::int64_t n = 0;
    std::int64_t h = 0;
    std::vector<Int> adjacency_char; // ascending coefficients, exact
    std::vector<Int> seidel_char;
    std::uint64_t adjacency_digest = 0; // bucketing accelerator, never an equality proof
    std::uint64_t seidel_digest = 0;
    std::int64_t ms = 0; // distinct Seidel eigenvalues
    Inertia seidel_inertia{0, 0, 0};
};

namespace detail {

// FNV-1a over the decimal serialization of the coefficients. Collisions only
// cost a wasted comparison; equality is always decided on the coefficients.
inline std::uint64_t coeff_digest(const std::vector<Int>& coeffs) {
    std::uint64_t hash = 1469598103934665603ull;
    auto mix = [&](char c) {
        hash ^= (unsigned char)c;
        hash *= 1099511628211ull;
    };
    for (const Int& c : coeffs) {
        for (char ch : c.str()) mix(ch);
        mix(',');
    }
    return hash;
}

// Distinct Seidel eigenvalues, counted on the quotient: vertex duplicates
// only ever add copies of -1.
inline std::int64_t distinct_seidel_count(const ChainString& g) {
    IntPolynomial q = char_poly(quotient_seidel(g));
    std::int64_t count = square_free_part(q).degree();
    if (g.n() > 2 * g.h() && q.sign_at(Rat(-1)) != 0) ++count;
    return count;
}

} // namespace detail

inline CensusRecord census_record(const ChainString& g) {
    ChainString c = canonical_form(g);
    CensusRecord r;
    r.canonical = c.to_string();
    r.n = c.n();
    r.h = c.h();
    r.adjacency_char = detail::full_char_poly(c, MatrixKind::adjacency).coefficients();
    r.seidel_char = detail::full_char_poly(c, MatrixKind::seidel).coefficients();
    r.adjacency_digest = detail::coeff_digest(r.adjacency_char);
    r.seidel_digest = detail::coeff_digest(r.seidel_char);
    r.ms = detail::distinct_seidel_count(c);
    r.seidel_inertia = inertia_of(spectrum_of(quotient_seidel(c)));
    r.seidel_inertia.n_minus += c.n() - 2 * c.h();
    return r;
}

// All non-isomorphic pairs of canonical strings of order n sharing a
// characteristic polynomial, ordered lexicographically by blocks. Digests
// pre-bucket; candidate pairs are re-verified on exact coefficients.
inline std::vector<std::pair<ChainString, ChainString>> find_cospectral_pairs(
    std::int64_t n, MatrixKind kind, std::optional<std::int64_t> h = std::nullopt) {
    if (n < 2) raise(errc::invalid_range, "find_cospectral_pairs: needs n >= 2");
    std::vector<ChainString> all = enumerate_chain_strings(n, h, true);
    std::sort(all.begin(), all.end());

    std::vector<std::vector<Int>> coeffs(all.size());
    std::map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < all.size(); ++i) {
        coeffs[i] = detail::full_char_poly(all[i], kind).coefficients();
        buckets[detail::coeff_digest(coeffs[i])].push_back(i);
    }

    std::vector<std::pair<ChainString, ChainString>> out;
    for (const auto& [digest, members] : buckets)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                std::size_t i = members[a], j = members[b];
                if (coeffs[i] != coeffs[j]) continue;
                if (are_cospectral(all[i], all[j], kind) && !is_isomorphic(all[i], all[j]))
                    out.emplace_back(all[i], all[j]);
            }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
    });
    return out;
}

// Canonical strings with h+1 < M_S < 2h. The band is empty for h <= 2, so
// those calls are rejected rather than silently returning nothing.
inline std::vector<ChainString> find_ms_gap_examples(std::int64_t n, std::int64_t h) {
    if (h < 3)
        raise(errc::invalid_range, "find_ms_gap_examples: the band h+1 < M < 2h is empty for h < 3");
    if (2 * h > n) raise(errc::invalid_range, "find_ms_gap_examples: needs 2h <= n");
    std::vector<ChainString> out;
    for (ChainString& g : enumerate_chain_strings(n, h, true)) {
        std::int64_t ms = detail::distinct_seidel_count(g);
        if (h + 1 < ms && ms < 2 * h) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Adjacency-cospectral non-isomorphic pair found by the census. family is set
// when the pair is the h = 2 block-swap construction: blocks (a1,a2,a3,a4)
// against (a2,a1,a4,a3) with a1 a4 = a2 a3. Anything else is novel.
struct CensusPair {
    ChainString first;
    ChainString second;
    bool family = false;
};

struct CensusResult {
    std::vector<CensusRecord> records; // sorted by order, then blocks
    std::vector<CensusPair> pairs;
};

namespace detail {

inline bool is_family_pair(const ChainString& g, const ChainString& p) {
    if (g.h() != 2 || p.h() != 2) return false;
    const std::vector<std::int64_t>& a = g.blocks();
    if (a[0] * a[3] != a[1] * a[2]) return false;
    return is_isomorphic(p, ChainString::from_blocks({a[1], a[0], a[3], a[2]}));
}

struct CensusUnit {
    std::int64_t n;
    std::int64_t a1;

    friend auto operator<=>(const CensusUnit&, const CensusUnit&) = default;
};

// Canonical strings of order n with leading block a1, walked as compositions
// of the remaining weight (cut-position bitmask).
inline std::vector<ChainString> unit_strings(std::int64_t n, std::int64_t a1) {
    std::vector<ChainString> out;
    const std::int64_t m = n - a1;
    if (m < 1) return out;
    if (m > 63) raise(errc::size_limit, "unit_strings: composition mask limited to n - a1 <= 63");
    std::vector<std::int64_t> blocks;
    for (std::uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
        blocks.assign(1, a1);
        std::int64_t run = 1;
        for (std::int64_t bit = 0; bit + 1 < m; ++bit) {
            if (mask >> bit & 1) {
                blocks.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        blocks.push_back(run);
        if (blocks.size() % 2 != 0) continue;
        ChainString g = ChainString::from_blocks(blocks);
        if (g == canonical_form(g)) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline nlohmann::json record_to_json(const CensusRecord& r) {
    auto coeff_strings = [](const std::vector<Int>& cs) {
        std::vector<std::string> out;
        out.reserve(cs.size());
        for (const Int& c : cs) out.push_back(c.str());
        return out;
    };
    nlohmann::json j;
    j["type"] = "record";
    j["string"] = r.canonical;
    j["n"] = r.n;
    j["h"] = r.h;
    j["adjacency_char"] = coeff_strings(r.adjacency_char);
    j["seidel_char"] = coeff_strings(r.seidel_char);
    j["adjacency_digest"] = r.adjacency_digest;
    j["seidel_digest"] = r.seidel_digest;
    j["ms"] = r.ms;
    j["inertia"] = {r.seidel_inertia.n_plus, r.seidel_inertia.n_zero, r.seidel_inertia.n_minus};
    return j;
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
    auto coeffs = [](const nlohmann::json& arr) {
        std::vector<Int> out;
        out.reserve(arr.size());
        for (const auto& v : arr) out.emplace_back(v.get<std::string>());
        return out;
    };
    CensusRecord r;
    r.canonical = j.at("string").get<std::string>();
    r.n = j.at("n").get<std::int64_t>();
    r.h = j.at("h").get<std::int64_t>();
    r.adjacency_char = coeffs(j.at("adjacency_char"));
    r.seidel_char = coeffs(j.at("seidel_char"));
    r.adjacency_digest = j.at("adjacency_digest").get<std::uint64_t>();
    r.seidel_digest = j.at("seidel_digest").get<std::uint64_t>();
    r.ms = j.at("ms").get<std::int64_t>();
    const auto& in = j.at("inertia");
    r.seidel_inertia = {in.at(0).get<std::int64_t>(), in.at(1).get<std::int64_t>(),
                        in.at(2).get<std::int64_t>()};
    return r;
}

struct CensusLogState {
    bool has_content = false; // at least the header survives after recovery
    bool trusted = true;      // interior damage voids the replay, never the run
    std::set<CensusUnit> done;
    std::map<CensusUnit, std::vector<CensusRecord>> loaded;
};

// Replays the append-only log. A damaged final line is an interrupted append:
// the file is truncated back to the last intact line, which forgets at most
// one unfinished unit. Damage anywhere earlier discards the whole replay --
// every unit recomputes, which costs time but never correctness. Records are
// only honored for units whose completion marker survived.
inline CensusLogState load_census_log(const std::string& path) {
    CensusLogState state;
    std::ifstream in(path, std::ios::binary);
    if (!in) return state;
    std::string content;
    try {
        content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } catch (const std::exception&) {
        raise(errc::persistence_failure, "cannot read census log: " + path);
    }
    in.close();
    if (content.empty()) return state;

    std::map<CensusUnit, std::map<std::string, CensusRecord>> staged;
    std::size_t pos = 0, good_end = 0;
    bool first = true;
    while (pos < content.size()) {
        std::size_t nl = content.find('\n', pos);
        bool complete = nl != std::string::npos;
        std::string line = content.substr(pos, complete ? nl - pos : std::string::npos);
        pos = complete ? nl + 1 : content.size();

        bool ok = complete;
        if (ok) {
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            ok = !j.is_discarded() && j.is_object();
            if (ok) {
                try {
                    if (first) {
                        if (j.at("schema").get<std::int64_t>() != 1)
                            raise(errc::persistence_failure,
                                  "unsupported census log schema in " + path);
                    } else if (j.value("type", "") == "record") {
                        CensusRecord r = record_from_json(j);
                        CensusUnit u{r.n, parse_chain_string(r.canonical).blocks()[0]};
                        staged[u][r.canonical] = std::move(r);
                    } else if (j.value("type", "") == "done") {
                        state.done.insert(
                            {j.at("n").get<std::int64_t>(), j.at("a1").get<std::int64_t>()});
                    } else {
                        ok = false;
                    }
                } catch (const nlohmann::json::exception&) {
                    ok = false;
                }
            }
        }
        if (!ok) {
            if (first && !complete) { // lone torn header: start over
                std::filesystem::resize_file(path, 0);
                return CensusLogState{};
            }
            if (first)
                raise(errc::persistence_failure, "census log header malformed in " + path);
            if (pos >= content.size()) {
                std::filesystem::resize_file(path, good_end); // torn tail
                break;
            }
            // Interior damage. Seal a torn tail so appends stay on fresh lines.
            if (content.back() != '\n') std::ofstream(path, std::ios::app) << '\n';
            return CensusLogState{true, false, {}, {}};
        }
        good_end = pos;
        first = false;
    }
    state.has_content = true;

    for (const CensusUnit& u : state.done) {
        auto it = staged.find(u);
        std::vector<CensusRecord>& rs = state.loaded[u];
        if (it != staged.end())
            for (auto& [key, record] : it->second) rs.push_back(std::move(record));
    }
    return state;
}

} // namespace detail

inline nlohmann::json census_to_json(const CensusResult& r) {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const CensusRecord& rec : r.records) j["records"].push_back(detail::record_to_json(rec));
    j["pairs"] = nlohmann::json::array();
    for (const CensusPair& p : r.pairs)
        j["pairs"].push_back({{"first", p.first.to_string()},
                              {"second", p.second.to_string()},
                              {"family", p.family}});
    return j;
}

// Records every canonical string with n <= n_max and collects all
// adjacency-cospectral non-isomorphic pairs. Work is sharded by (n, leading
// block); workers share nothing, and a single writer appends finished units
// to the log in ascending unit order, so the log bytes do not depend on jobs.
// Units already completed in the log replay instead of recomputing.
inline CensusResult conjecture_census(std::int64_t n_max, std::int64_t jobs,
                                      const std::string& log_path) {
    if (n_max < 2) raise(errc::invalid_range, "conjecture_census: needs n_max >= 2");
    if (jobs < 1) raise(errc::invalid_range, "conjecture_census: needs jobs >= 1");

    detail::CensusLogState past = detail::load_census_log(log_path);

    std::vector<detail::CensusUnit> todo;
    for (std::int64_t n = 2; n <= n_max; ++n)
        for (std::int64_t a1 = 1; a1 < n; ++a1)
            if (!past.done.count({n, a1})) todo.push_back({n, a1});

    std::ofstream out(log_path, std::ios::app | std::ios::binary);
    if (!out) raise(errc::persistence_failure, "cannot open census log: " + log_path);
    if (!past.has_content) {
        out << nlohmann::json{{"schema", 1}}.dump() << '\n';
        out.flush();
        if (!out) raise(errc::persistence_failure, "cannot write census log: " + log_path);
    }

    std::mutex mu;
    std::condition_variable cv;
    std::map<detail::CensusUnit, std::vector<CensusRecord>> finished;
    std::atomic<std::size_t> next{0};
    std::exception_ptr worker_error;

    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            try {
                std::vector<CensusRecord> rs;
                for (const ChainString& g : detail::unit_strings(todo[i].n, todo[i].a1))
                    rs.push_back(census_record(g));
                std::lock_guard<std::mutex> lock(mu);
                finished[todo[i]] = std::move(rs);
                cv.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!worker_error) worker_error = std::current_exception();
                cv.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve((std::size_t)jobs);
    for (std::int64_t j = 0; j < jobs; ++j) pool.emplace_back(work);

    std::vector<CensusRecord> all_records;
    std::exception_ptr writer_error;
    try {
        std::unique_lock<std::mutex> lock(mu);
        for (const detail::CensusUnit& u : todo) {
            cv.wait(lock, [&] { return worker_error || finished.count(u); });
            if (worker_error) break;
            std::vector<CensusRecord> rs = std::move(finished[u]);
            finished.erase(u);
            for (const CensusRecord& r : rs) out << detail::record_to_json(r).dump() << '\n';
            out << nlohmann::json{{"type", "done"}, {"n", u.n}, {"a1", u.a1}}.dump() << '\n';
            out.flush();
            if (!out) raise(errc::persistence_failure, "cannot write census log: " + log_path);
            for (CensusRecord& r : rs) all_records.push_back(std::move(r));
        }
    } catch (...) {
        writer_error = std::current_exception();
    }
    for (std::thread& t : pool) t.join();
    if (writer_error) std::rethrow_exception(writer_error);
    if (worker_error) std::rethrow_exception(worker_error);

    for (auto& [u, rs] : past.loaded)
        for (CensusRecord& r : rs) all_records.push_back(std::move(r));

    std::vector<std::pair<ChainString, std::size_t>> order;
    order.reserve(all_records.size());
    for (std::size_t i = 0; i < all_records.size(); ++i)
        order.emplace_back(parse_chain_string(all_records[i].canonical), i);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        return x.first.n() != y.first.n() ? x.first.n() < y.first.n() : x.first < y.first;
    });

    CensusResult result;
    result.records.reserve(all_records.size());
    for (const auto& [g, i] : order) result.records.push_back(std::move(all_records[i]));

    // pair search per order: digest pre-bucket, exact coefficients, re-verified
    std::size_t lo = 0;
    while (lo < order.size()) {
        std::size_t hi = lo;
        while (hi < order.size() && order[hi].first.n() == order[lo].first.n()) ++hi;
        std::map<std::uint64_t, std::vector<std::size_t>> buckets;
        for (std::size_t i = lo; i < hi; ++i)
            buckets[result.records[i].adjacency_digest].push_back(i);
        for (const auto& [digest, members] : buckets)
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    std::size_t i = members[a], j = members[b];
                    if (result.records[i].adjacency_char != result.records[j].adjacency_char)
                        continue;
                    ChainString gi = parse_chain_string(result.records[i].canonical);
                    ChainString gj = parse_chain_string(result.records[j].canonical);
                    if (are_cospectral(gi, gj, MatrixKind::adjacency) && !is_isomorphic(gi, gj)) {
                        bool family = detail::is_family_pair(gi, gj);
                        result.pairs.push_back({std::move(gi), std::move(gj), family});
                    }
                }
        lo = hi;
    }
    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const CensusPair& x, const CensusPair& y) {
                  if (x.first.n() != y.first.n()) return x.first.n() < y.first.n();
                  return x.first != y.first ? x.first < y.first : x.second < y.second;
              });
    return result;
}

} // namespace chainspec
