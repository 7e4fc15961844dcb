#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainspec/census.hpp"
#include "chainspec/serde.hpp"
#include "chainspec/theorems.hpp"

namespace chainspec::cli {

// Everything the dispatcher needs after argv parsing: the single chosen
// subcommand, its positional arguments, and the validated global flags.
struct CliInvocation {
    std::string subcommand;
    std::vector<std::string> arguments;
    bool json = false;
    int precision = 4;
    std::uint64_t seed = 0; // reserved for randomized sweeps
    std::int64_t jobs = 0;
    Rat width;
};

namespace detail {

// 0 success or holds, 1 fails verdict, 2 usage, 3 internal.
inline int exit_code_for(errc c) {
    switch (c) {
        case errc::empty_input:
        case errc::malformed_token:
        case errc::not_connected:
        case errc::odd_block_count:
        case errc::invalid_range:
        case errc::size_limit:
        case errc::precondition_violated:
            return 2;
        default:
            return 3;
    }
}

inline int log_verbosity() {
    const char* v = std::getenv("CHAINSPEC_LOG");
    if (v == nullptr || *v == '\0') return 0;
    if (chainspec::detail::all_digits(v)) return std::atoi(v);
    return 1;
}

inline void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump() << '\n'; }

inline nlohmann::json quotient_side_json(const QuotientMatrix& q) {
    nlohmann::json j;
    j["matrix"] = json_of(q);
    j["char"] = json_of(char_poly(q));
    return j;
}

} // namespace detail

// Runs one subcommand against out/err and returns the process exit code.
// JSON mode writes exactly one document to out.
inline int execute(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const int verbosity = detail::log_verbosity();
    const auto started = std::chrono::steady_clock::now();

    CliInvocation inv;
    inv.jobs = (std::int64_t)std::thread::hardware_concurrency();
    if (inv.jobs < 1) inv.jobs = 1;
    std::string width_text = "1/1000000";

    CLI::App app{"chain graph spectra workbench"};
    app.name("chainspec");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", inv.json, "emit one JSON document on standard output");
    app.add_option("--precision", inv.precision, "decimal places for rounded eigenvalues")
        ->capture_default_str();
    app.add_option("--seed", inv.seed, "seed for randomized sweeps (reserved)");
    app.add_option("--jobs", inv.jobs, "worker threads for the census")->capture_default_str();
    app.add_option("--width", width_text, "isolating-interval width bound, a rational")
        ->capture_default_str();

    std::string chain_text, claim, c_text, out_path;
    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, n = 0, h = 0, k = 0, n_max = 0;

    auto add_chain = [&](CLI::App* sub) {
        sub->add_option("string", chain_text, "chain string, block form \"0^a 1^b ...\" or bits")
            ->required();
        sub->fallthrough();
        return sub;
    };
    add_chain(app.add_subcommand("spectrum", "adjacency spectrum of a chain graph"));
    add_chain(app.add_subcommand("seidel", "Seidel spectrum of a chain graph"));
    add_chain(app.add_subcommand("quotient", "divisor matrices and their characteristic polynomials"));
    add_chain(app.add_subcommand("degrees", "degree sequence"));
    add_chain(app.add_subcommand("canon", "canonical representative of the isomorphism class"));

    CLI::App* pair = app.add_subcommand("cospectral-pair",
                                        "build the block-swap cospectral pair from a1 a2 a3 a4");
    pair->add_option("a1", a1)->required();
    pair->add_option("a2", a2)->required();
    pair->add_option("a3", a3)->required();
    pair->add_option("a4", a4)->required();
    pair->fallthrough();

    CLI::App* verify = app.add_subcommand("verify", "check one claim or all of them on a string");
    verify->add_option("claim", claim, "claim id or 'all'")->required();
    verify->add_option("string", chain_text)->required();
    verify->fallthrough();

    CLI::App* census = app.add_subcommand("census", "cospectral-pair census up to an order bound");
    census->add_option("--n-max", n_max, "largest order to enumerate")->required();
    census->add_option("--out", out_path, "append-only JSON-lines log")->required();
    census->fallthrough();

    CLI::App* gap = app.add_subcommand("ms-gap", "strings with h+1 < M_S < 2h at fixed n and h");
    gap->set_help_flag("--help", "print help and exit"); // frees -h for the --h option
    gap->add_option("--n", n)->required();
    gap->add_option("--h", h)->required();
    gap->fallthrough();

    CLI::App* dk = app.add_subcommand("dk", "tridiagonal determinant D_k(c), closed form");
    dk->add_option("--k", k)->required();
    dk->add_option("--c", c_text, "diagonal value, a rational")->required();
    dk->fallthrough();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("chainspec");
    for (std::string& a : args) argv_storage.push_back(std::move(a));
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << e.what() << '\n';
        err << "run 'chainspec --help' for the grammar\n";
        return 2;
    }

    inv.subcommand = app.get_subcommands().at(0)->get_name();
    inv.arguments = std::move(argv_storage);
    if (verbosity >= 1) err << "[chainspec] subcommand '" << inv.subcommand << "'\n";

    int code = 0;
    try {
        inv.width = parse_rational(width_text);
        if (!(inv.width > 0)) raise(errc::invalid_range, "--width must be positive");
        if (inv.precision < 0 || inv.precision > 1000)
            raise(errc::invalid_range, "--precision out of range");
        if (inv.jobs < 1) raise(errc::invalid_range, "--jobs must be at least 1");

        if (inv.subcommand == "spectrum" || inv.subcommand == "seidel") {
            bool adjacency = inv.subcommand == "spectrum";
            ChainString g = parse_chain_string(chain_text);
            Spectrum s = adjacency ? adjacency_spectrum(g, inv.width)
                                   : seidel_spectrum(g, inv.width);
            if (inv.json) {
                nlohmann::json doc;
                doc["string"] = g.to_string();
                doc["n"] = g.n();
                doc["h"] = g.h();
                doc["matrix"] = adjacency ? "adjacency" : "seidel";
                doc["spectrum"] = json_of(s, inv.precision);
                detail::emit(out, doc);
            } else {
                out << "G = " << g.to_string() << "  (n = " << g.n() << ", h = " << g.h()
                    << ")\n";
                out << (adjacency ? "adjacency" : "Seidel") << " spectrum: "
                    << text_of(s, inv.precision) << '\n';
            }
        } else if (inv.subcommand == "quotient") {
            ChainString g = parse_chain_string(chain_text);
            QuotientMatrix qa = quotient_adjacency(g), qs = quotient_seidel(g);
            if (inv.json) {
                nlohmann::json doc;
                doc["string"] = g.to_string();
                doc["adjacency"] = detail::quotient_side_json(qa);
                doc["seidel"] = detail::quotient_side_json(qs);
                detail::emit(out, doc);
            } else {
                out << "G = " << g.to_string() << '\n';
                out << "adjacency divisor matrix:\n" << text_of(qa);
                out << "char: " << char_poly(qa).to_string() << '\n';
                out << "Seidel divisor matrix:\n" << text_of(qs);
                out << "char: " << char_poly(qs).to_string() << '\n';
            }
        } else if (inv.subcommand == "degrees") {
            ChainString g = parse_chain_string(chain_text);
            DegreeSequence d = degree_sequence(g);
            if (inv.json) {
                nlohmann::json doc = json_of(d);
                doc["string"] = g.to_string();
                detail::emit(out, doc);
            } else {
                out << "degrees: " << text_of(d) << '\n';
                out << "vertices: " << d.vertex_count() << ", edges: " << d.edge_count() << '\n';
            }
        } else if (inv.subcommand == "canon") {
            ChainString g = parse_chain_string(chain_text);
            ChainString c = canonical_form(g);
            if (inv.json) {
                nlohmann::json doc;
                doc["input"] = g.to_string();
                doc["canonical"] = c.to_string();
                doc["bit_string"] = c.bit_string();
                doc["already_canonical"] = g == c;
                detail::emit(out, doc);
            } else {
                out << c.to_string() << '\n';
            }
        } else if (inv.subcommand == "cospectral-pair") {
            CospectralPair p = construct_cospectral_pair(a1, a2, a3, a4);
            if (inv.json) {
                nlohmann::json doc;
                doc["first"] = p.first.to_string();
                doc["second"] = p.second.to_string();
                doc["report"] = json_of(p.report);
                detail::emit(out, doc);
            } else {
                out << "G = " << p.first.to_string() << '\n';
                out << "H = " << p.second.to_string() << '\n';
                out << text_of(p.report) << '\n';
            }
            if (p.report.verdict == Verdict::fails) code = 1;
        } else if (inv.subcommand == "verify") {
            ChainString g = parse_chain_string(chain_text);
            std::vector<TheoremReport> reports;
            if (claim == "all")
                reports = run_all_claims(g);
            else
                reports.push_back(run_claim(claim, g));
            if (inv.json) {
                if (claim == "all") {
                    nlohmann::json doc = nlohmann::json::array();
                    for (const TheoremReport& r : reports) doc.push_back(json_of(r));
                    detail::emit(out, doc);
                } else {
                    detail::emit(out, json_of(reports.front()));
                }
            } else {
                for (const TheoremReport& r : reports) out << text_of(r) << '\n';
            }
            for (const TheoremReport& r : reports)
                if (r.verdict == Verdict::fails) code = 1;
        } else if (inv.subcommand == "census") {
            CensusResult result = conjecture_census(n_max, inv.jobs, out_path);
            if (inv.json) {
                nlohmann::json doc = census_to_json(result);
                doc["log"] = out_path;
                detail::emit(out, doc);
            } else {
                out << "records: " << result.records.size() << '\n';
                out << "pairs: " << result.pairs.size() << '\n';
                for (const CensusPair& p : result.pairs)
                    out << "  " << p.first.to_string() << "  ~  " << p.second.to_string()
                        << (p.family ? "  (family)" : "  (novel)") << '\n';
                out << "log: " << out_path << '\n';
            }
        } else if (inv.subcommand == "ms-gap") {
            std::vector<ChainString> hits = find_ms_gap_examples(n, h);
            if (inv.json) {
                nlohmann::json doc;
                doc["n"] = n;
                doc["h"] = h;
                nlohmann::json arr = nlohmann::json::array();
                for (const ChainString& g : hits) arr.push_back(g.to_string());
                doc["strings"] = std::move(arr);
                detail::emit(out, doc);
            } else {
                if (hits.empty()) out << "(none)\n";
                for (const ChainString& g : hits) out << g.to_string() << '\n';
            }
        } else if (inv.subcommand == "dk") {
            Rat c = parse_rational(c_text);
            Rat closed = tridiag_det_closed(k, c);
            Rat recurrence = tridiag_det_recurrence(k, c);
            if (closed != recurrence)
                raise(errc::cross_check_failed, "closed form disagrees with the recurrence");
            if (inv.json) {
                nlohmann::json doc;
                doc["k"] = k;
                doc["c"] = rational_string(c);
                doc["value"] = rational_string(closed);
                detail::emit(out, doc);
            } else {
                out << "D_" << k << "(" << rational_string(c) << ") = " << rational_string(closed)
                    << '\n';
            }
        } else {
            raise(errc::internal, "unmapped subcommand " + inv.subcommand);
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        code = detail::exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        code = 3;
    }

    if (verbosity >= 1) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        err << "[chainspec] exit " << code << " after " << elapsed.count() << " ms\n";
    }
    return code;
}

} // namespace chainspec::cli
