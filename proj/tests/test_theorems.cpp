#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chainspec/theorems.hpp"

using namespace chainspec;

namespace {

IntPolynomial P(std::initializer_list<std::int64_t> ascending) {
    return IntPolynomial::from_coeffs(ascending);
}

ChainString cs(std::initializer_list<std::int64_t> blocks) {
    return ChainString::from_blocks(std::vector<std::int64_t>(blocks));
}

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::internal;
}

std::string dump(const TheoremReport& r) {
    std::string out = r.claim_id + " on " + r.instance + " -> " + verdict_name(r.verdict);
    for (const auto& [key, value] : r.witness) out += "\n  " + key + ": " + value;
    return out;
}

void require_verdict(const TheoremReport& r, Verdict want) {
    if (r.verdict != want) FAIL(dump(r));
    CHECK(r.verdict == want);
}

std::optional<std::string> witness_value(const TheoremReport& r, const std::string& key) {
    for (const auto& [k, v] : r.witness)
        if (k == key) return v;
    return std::nullopt;
}

} // namespace

TEST_CASE("adjacency laws hold on pinned strings") {
    TheoremReport r = verify_adjacency_laws(cs({1, 2, 2, 4}));
    require_verdict(r, Verdict::holds);
    CHECK(r.claim_id == "adjacency-laws");
    CHECK(r.instance == "0^1 1^2 0^2 1^4");
    CHECK(witness_value(r, "spectrum").has_value());

    require_verdict(verify_adjacency_laws(cs({1, 1})), Verdict::holds);
    require_verdict(verify_adjacency_laws(cs({2, 4, 2, 6, 2, 2})), Verdict::holds);
}

TEST_CASE("simple adjacency spectra are classified by block shape") {
    TheoremReport flat = classify_distinct_adjacency(cs({1, 1, 1, 1}));
    require_verdict(flat, Verdict::holds);
    CHECK(witness_value(flat, "blocks predict a simple spectrum") == "true");
    CHECK(witness_value(flat, "distinct eigenvalues") == "4 of 4");

    TheoremReport one_two = classify_distinct_adjacency(cs({2, 1}));
    require_verdict(one_two, Verdict::holds);
    CHECK(witness_value(one_two, "blocks predict a simple spectrum") == "true");

    TheoremReport two_twos = classify_distinct_adjacency(cs({2, 2}));
    require_verdict(two_twos, Verdict::holds);
    CHECK(witness_value(two_twos, "blocks predict a simple spectrum") == "false");
    CHECK(witness_value(two_twos, "distinct eigenvalues") == "3 of 4");
}

TEST_CASE("h=2 quartic closed form") {
    CHECK(quartic_charpoly_h2(1, 2, 2, 4) == P({16, 0, -14, 0, 1}));
    CHECK(quartic_charpoly_h2(2, 1, 4, 2) == P({16, 0, -14, 0, 1}));
    CHECK(quartic_charpoly_h2(1, 1, 1, 1) == P({1, 0, -3, 0, 1}));

    IntPolynomial big = quartic_charpoly_h2(1000, 2000, 3000, 6000);
    CHECK(big.coeff(2) == Int(-26000000));
    CHECK(big.coeff(0) == Int("36000000000000"));

    CHECK(code_of([] { quartic_charpoly_h2(0, 1, 1, 1); }) == errc::precondition_violated);
}

TEST_CASE("h=2 quartic claim runner") {
    TheoremReport r = run_claim(claims::h2_quartic, cs({1, 2, 2, 4}));
    require_verdict(r, Verdict::holds);
    CHECK(witness_value(r, "quartic") == "x^4 - 14*x^2 + 16");

    TheoremReport na = run_claim(claims::h2_quartic, cs({2, 3}));
    require_verdict(na, Verdict::not_applicable);
    CHECK(witness_value(na, "reason") == "needs h = 2");
}

TEST_CASE("swap family produces a certified cospectral pair") {
    CospectralPair pair = construct_cospectral_pair(1, 2, 2, 4);
    require_verdict(pair.report, Verdict::holds);
    CHECK(pair.first.to_string() == "0^1 1^2 0^2 1^4");
    CHECK(pair.second.to_string() == "0^2 1^1 0^4 1^2");
    CHECK(witness_value(pair.report, "degrees of the first") == "(1,1,3,3,3,3,4,4,6)");
    CHECK(witness_value(pair.report, "degrees of the second") == "(2,2,2,2,2,3,3,6,6)");
    CHECK(witness_value(pair.report, "isomorphic") == "false");
    CHECK(witness_value(pair.report, "seidel-cospectral") == "false");
    CHECK(are_cospectral(pair.first, pair.second, MatrixKind::adjacency));
    CHECK_FALSE(is_isomorphic(pair.first, pair.second));
}

TEST_CASE("swap family degenerate and larger instances") {
    CospectralPair same = construct_cospectral_pair(2, 2, 2, 2);
    require_verdict(same.report, Verdict::holds);
    CHECK(witness_value(same.report, "isomorphic") == "true");

    CospectralPair big = construct_cospectral_pair(1, 3, 2, 6);
    require_verdict(big.report, Verdict::holds);
    CHECK(witness_value(big.report, "isomorphic") == "false");

    // a1 = a3 forces the reverse-complement pairing
    CospectralPair flip = construct_cospectral_pair(2, 3, 2, 3);
    require_verdict(flip.report, Verdict::holds);
    CHECK(witness_value(flip.report, "isomorphic") == "true");

    CHECK(code_of([] { construct_cospectral_pair(1, 2, 3, 4); }) == errc::precondition_violated);
    CHECK(code_of([] { construct_cospectral_pair(1, 2, 2, 0); }) == errc::precondition_violated);
}

TEST_CASE("swap family claim runner skips inapplicable strings") {
    TheoremReport na_h = run_claim(claims::cospectral_family, cs({1, 1}));
    require_verdict(na_h, Verdict::not_applicable);
    CHECK(witness_value(na_h, "reason") == "needs h = 2");

    TheoremReport na_ratio = run_claim(claims::cospectral_family, cs({1, 2, 3, 4}));
    require_verdict(na_ratio, Verdict::not_applicable);
    CHECK(witness_value(na_ratio, "reason") == "needs a1 a4 = a2 a3");

    require_verdict(run_claim(claims::cospectral_family, cs({1, 2, 2, 4})), Verdict::holds);
}

TEST_CASE("h=1 strings are determined by their spectrum") {
    TheoremReport six = verify_h1_uniqueness(6);
    require_verdict(six, Verdict::holds);
    CHECK(witness_value(six, "strings") == "5");
    CHECK(witness_value(six, "cospectral pairs, all isomorphic") == "2");

    TheoremReport two = verify_h1_uniqueness(2);
    require_verdict(two, Verdict::holds);
    CHECK(witness_value(two, "cospectral pairs, all isomorphic") == "0");

    require_verdict(verify_h1_uniqueness(12), Verdict::holds);
    CHECK(code_of([] { verify_h1_uniqueness(1); }) == errc::invalid_range);

    require_verdict(run_claim(claims::h1_uniqueness, cs({2, 3})), Verdict::holds);
    require_verdict(run_claim(claims::h1_uniqueness, cs({1, 1, 1, 1})), Verdict::not_applicable);
}

TEST_CASE("elimination on the shifted Seidel quotient, h=1") {
    FMatrixResult res = build_F_matrix(cs({1, 1}));
    require_verdict(res.report, Verdict::holds);
    REQUIRE(res.f.order() == 2);
    CHECK(res.f.at(0, 0) == P({1, 1}));
    CHECK(res.f.at(0, 1) == P({1, 1}));
    CHECK(res.f.at(1, 0) == P({-1, 1}));
    CHECK(res.f.at(1, 1) == P({1, -1}));
    CHECK(witness_value(res.report, "layout").has_value());

    FMatrixResult wide = build_F_matrix(cs({2, 3}));
    require_verdict(wide.report, Verdict::holds);
    // det F = 2 (1+x)(a1+a2-1-x)
    CHECK(det_polynomial_matrix(wide.f) == P({2, 2}) * P({4, -1}));
}

TEST_CASE("elimination lands on the banded layout for h >= 2") {
    FMatrixResult res = build_F_matrix(cs({1, 2, 2, 4}));
    require_verdict(res.report, Verdict::holds);
    REQUIRE(res.f.order() == 4);
    CHECK(res.f.at(0, 0) == P({1, 1}));
    CHECK(res.f.at(0, 3) == P({1, 1}));
    CHECK(res.f.at(0, 1) == IntPolynomial());
    CHECK(res.f.at(1, 1) == P({4}));
    CHECK(res.f.at(2, 2) == P({4}));
    CHECK(res.f.at(3, 0) == P({-2}));
    CHECK(res.f.at(3, 1) == P({-1, -1}));
    CHECK(res.f.at(3, 2) == P({1, 1}));
    CHECK(res.f.at(3, 3) == P({8}));

    require_verdict(build_F_matrix(cs({2, 4, 2, 6, 2, 2})).report, Verdict::holds);
}

TEST_CASE("elimination report sees the repeated quotient eigenvalues") {
    FMatrixResult res = build_F_matrix(cs({1, 2, 2, 2, 2, 1}));
    require_verdict(res.report, Verdict::holds);
    CHECK(witness_value(res.report, "multiplicity of eigenvalue 1") == "1");

    FMatrixResult plain = build_F_matrix(cs({2, 3}));
    CHECK(witness_value(plain.report, "multiplicity of eigenvalue 1") == "0");
}

TEST_CASE("seidel laws hold on pinned strings") {
    TheoremReport small = verify_seidel_laws(cs({2, 3}));
    require_verdict(small, Verdict::holds);
    CHECK(witness_value(small, "distinct eigenvalues") == "2");

    TheoremReport wide = verify_seidel_laws(cs({2, 4, 2, 6, 2, 2}));
    require_verdict(wide, Verdict::holds);
    CHECK(witness_value(wide, "distinct eigenvalues") == "5");

    // lambda_1(S) = 1 meets the shifted bound -1 - 2 lambda_2(A) = 1 exactly
    require_verdict(verify_seidel_laws(cs({1, 1})), Verdict::holds);

    require_verdict(verify_seidel_laws(cs({1, 2, 2, 2, 2, 1})), Verdict::holds);
}

TEST_CASE("simple Seidel spectra are classified by block shape") {
    TheoremReport flat = classify_distinct_seidel(cs({1, 1, 1, 1}));
    require_verdict(flat, Verdict::holds);
    CHECK(witness_value(flat, "blocks predict a simple spectrum") == "true");
    CHECK(witness_value(flat, "distinct eigenvalues") == "4 of 4");

    TheoremReport rough = classify_distinct_seidel(cs({2, 1}));
    require_verdict(rough, Verdict::holds);
    CHECK(witness_value(rough, "blocks predict a simple spectrum") == "false");
    CHECK(witness_value(rough, "distinct eigenvalues") == "2 of 3");
}

TEST_CASE("claim registry drives the dispatcher") {
    const auto& table = claim_registry();
    REQUIRE(table.size() == 8);

    std::set<std::string_view> ids;
    ChainString g = cs({1, 2, 2, 4});
    for (const ClaimInfo& c : table) {
        CHECK(!c.summary.empty());
        ids.insert(c.id);
        TheoremReport r = run_claim(c.id, g);
        CHECK(r.claim_id == c.id);
    }
    CHECK(ids.size() == 8);

    CHECK(code_of([&] { run_claim("no-such-claim", cs({1, 1})); }) == errc::malformed_token);
}

TEST_CASE("run_all_claims covers the registry in order") {
    std::vector<TheoremReport> reports = run_all_claims(cs({1, 2, 2, 4}));
    REQUIRE(reports.size() == 8);
    std::int64_t inapplicable = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].claim_id == claim_registry()[i].id);
        if (reports[i].verdict == Verdict::not_applicable)
            ++inapplicable;
        else
            require_verdict(reports[i], Verdict::holds);
    }
    // only the h=1 claim steps aside on an h=2 string
    CHECK(inapplicable == 1);
}

TEST_CASE("failed checks always leave a witness") {
    TheoremReport r{"synthetic", "none"};
    CHECK(r.holds());
    r.check(true, "kept");
    CHECK(r.witness.empty());
    r.check(false, "dropped", "detail");
    CHECK(r.verdict == Verdict::fails);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0].first == "violated: dropped");
    CHECK(r.witness[0].second == "detail");
}

TEST_CASE("every claim holds on every small string") {
    for (std::int64_t n = 2; n <= 8; ++n)
        for (const ChainString& g : enumerate_chain_strings(n, std::nullopt, true))
            for (const TheoremReport& r : run_all_claims(g))
                if (r.verdict == Verdict::fails) FAIL(dump(r));
    SUCCEED();
}

TEST_CASE("every claim holds on random larger strings") {
    Rng rng(777001);
    for (int trial = 0; trial < 60; ++trial) {
        std::int64_t n = 4 + (std::int64_t)rng.below(13); // 4..16
        std::int64_t h = 1 + (std::int64_t)rng.below((std::uint64_t)(n / 2));
        ChainString g = random_chain_string(n, h, rng.below(1u << 30));
        for (const TheoremReport& r : run_all_claims(g))
            if (r.verdict == Verdict::fails) FAIL(dump(r));
    }
    SUCCEED();
}
