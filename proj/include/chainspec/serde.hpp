#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainspec/graph_matrices.hpp"
#include "chainspec/int_matrix.hpp"
#include "chainspec/int_polynomial.hpp"
#include "chainspec/numbers.hpp"
#include "chainspec/spectrum.hpp"
#include "chainspec/theorems.hpp"

// JSON and plain-text renderers for every value the command line can emit.
// Exact integers render as decimal strings (arbitrary precision survives any
// parser); machine-sized counts render as JSON numbers; approximations render
// as half-even rounded decimals at the caller's precision, never as JSON
// floats. Objects serialize with sorted keys, so parse + re-dump is
// byte-identical.
namespace chainspec {

inline nlohmann::json json_of(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

inline nlohmann::json json_of(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::int64_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json json_of(const Spectrum& s, int precision) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RootBox& b : s.entries()) {
        nlohmann::json e;
        e["multiplicity"] = b.multiplicity;
        e["exact"] = b.exact;
        if (b.exact) {
            e["value"] = rational_string(b.value);
        } else {
            e["value"] = decimal_string(b.position(), precision);
            e["interval"] = {rational_string(b.interval.lo), rational_string(b.interval.hi)};
        }
        arr.push_back(std::move(e));
    }
    return arr;
}

inline nlohmann::json json_of(const DegreeSequence& d) {
    nlohmann::json j;
    j["degrees"] = d.expanded();
    j["vertices"] = d.vertex_count();
    j["edges"] = d.edge_count();
    return j;
}

inline nlohmann::json json_of(const TheoremReport& r) {
    nlohmann::json j;
    j["claim_id"] = r.claim_id;
    j["instance"] = r.instance;
    j["verdict"] = verdict_name(r.verdict);
    nlohmann::json w = nlohmann::json::array();
    for (const auto& [key, value] : r.witness) w.push_back({key, value});
    j["witness"] = std::move(w);
    return j;
}

// "{13.7446, 7, 2.2554, [-1]^13, [-5]^2}": descending, exact values as
// integers or fractions, approximations rounded half-even.
inline std::string text_of(const Spectrum& s, int precision) {
    std::string out = "{";
    bool first = true;
    for (const RootBox& b : s.entries()) {
        if (!first) out += ", ";
        first = false;
        std::string v = b.exact ? rational_string(b.value) : decimal_string(b.position(), precision);
        if (b.multiplicity > 1)
            out += "[" + v + "]^" + std::to_string(b.multiplicity);
        else
            out += v;
    }
    return out + "}";
}

inline std::string text_of(const IntMatrix& m) {
    std::size_t width = 1;
    for (std::int64_t i = 0; i < m.rows(); ++i)
        for (std::int64_t j = 0; j < m.cols(); ++j)
            width = std::max(width, m.at(i, j).str().size());
    std::string out;
    for (std::int64_t i = 0; i < m.rows(); ++i) {
        for (std::int64_t j = 0; j < m.cols(); ++j) {
            std::string cell = m.at(i, j).str();
            out += std::string(width - cell.size() + (j ? 1 : 0), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

inline std::string text_of(const DegreeSequence& d) {
    std::string out = "(";
    bool first = true;
    for (std::int64_t deg : d.expanded()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(deg);
    }
    return out + ")";
}

inline std::string text_of(const TheoremReport& r) {
    std::string out = r.claim_id + ": " + verdict_name(r.verdict);
    for (const auto& [key, value] : r.witness) out += "\n  " + key + ": " + value;
    return out;
}

} // namespace chainspec
