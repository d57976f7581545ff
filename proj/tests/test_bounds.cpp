#include "doctest.h"

#include "sumch/bounds.hpp"
#include "sumch/constructions.hpp"

using namespace sumch;

TEST_CASE("unit-type pair counts") {
    CHECK(unit_pair_count(1) == 4);
    CHECK(unit_pair_count(2) == 4); // degenerate: complements coincide
    CHECK(unit_pair_count(3) == 12);
    CHECK(unit_pair_count(4) == 16);
}

TEST_CASE("two-deletion cover at the degenerate block length") {
    CliqueCover c = build_clique_cover_2del(2, 2);
    CHECK(c.singletons.size() == 12);
    CHECK(c.cliques.size() == 2);
    CHECK(BigInt(c.size()) == clique_cover_size_formula(2, 2));
    for (const auto& q : c.cliques) CHECK(q.size() == 2);
    CHECK(verify_clique_cover(c, 2, ErrorType::D).ok);
}

TEST_CASE("two-deletion cover structure and size formula") {
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{
             {4, 2}, {4, 4}, {6, 3}}) {
        CliqueCover c = build_clique_cover_2del(n, k);
        CHECK(BigInt(c.size()) == clique_cover_size_formula(n, k));
        for (const auto& q : c.cliques) CHECK(q.size() == k);
        // Every clique shares one parity row.
        for (const auto& q : c.cliques) {
            BitWord pr = sum_matrix(CodeMatrix::from_index(q[0], 2, n)).parity_row();
            for (std::uint64_t v : q)
                CHECK(sum_matrix(CodeMatrix::from_index(v, 2, n)).parity_row() == pr);
        }
    }
    CHECK(verify_clique_cover(build_clique_cover_2del(4, 2), 2, ErrorType::D).ok);
    CHECK_THROWS_AS(build_clique_cover_2del(6, 4), invalid_argument);
    CHECK(clique_cover_size_formula(5, 1) == BigInt(1) << 10);
}

TEST_CASE("verification catches coverage gaps") {
    CliqueCover c = build_clique_cover_2del(4, 2);
    REQUIRE(!c.singletons.empty());
    c.singletons.pop_back();
    CoverCheck check = verify_clique_cover(c, 2, ErrorType::D);
    CHECK_FALSE(check.ok);
    CHECK(check.detail.find("uncovered") != std::string::npos);
}

TEST_CASE("upper bound report") {
    for (std::size_t n : {2ull, 4ull, 6ull, 8ull, 64ull}) {
        BoundReport r = upper_bound_A_2del(n);
        CHECK(r.value <= BigInt(1) << (2 * n));
        CHECK(r.to_json().find("\"schema\":1") != std::string::npos);
        CHECK(r.to_csv_row().find(r.value.str()) != std::string::npos);
    }
    BoundReport r64 = upper_bound_A_2del(64);
    BigInt best = r64.value;
    for (std::size_t k : {2ull, 4ull, 8ull})
        CHECK(best <= clique_cover_size_formula(64, k));
}

TEST_CASE("edit cover partitions the space") {
    for (std::size_t n = 2; n <= 5; ++n) {
        CliqueCover c = build_clique_cover_edit(n);
        CHECK(c.size() == (1ull << (2 * n - 2)));
        std::vector<char> seen(1ull << (2 * n), 0);
        for (const auto& q : c.cliques) {
            CHECK(q.size() == 4);
            for (std::uint64_t v : q) {
                CHECK_FALSE(seen[v]);
                seen[v] = 1;
            }
            // Sum matrices of clique members differ in exactly two entries.
            for (std::size_t a = 0; a < 4; ++a) {
                SumMatrix sa = sum_matrix(CodeMatrix::from_index(q[a], 2, n));
                for (std::size_t b = a + 1; b < 4; ++b) {
                    SumMatrix sb = sum_matrix(CodeMatrix::from_index(q[b], 2, n));
                    std::size_t d = hamming_distance(sa.base(), sb.base()) +
                                    hamming_distance(sa.parity_row(), sb.parity_row());
                    CHECK(d == 2);
                }
            }
        }
        for (char s : seen) CHECK(s);
    }
    CHECK(verify_clique_cover(build_clique_cover_edit(3), 1, ErrorType::SID).ok);
}

TEST_CASE("sphere packing bound for single edits") {
    CHECK(sphere_packing_edit_bound(1, 1) == 1);
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(sphere_packing_edit_bound(3, n) == BigInt(1) << (3 * n - 2));
    for (std::size_t l = 2; l <= 5; ++l) {
        for (std::size_t n = 2; n <= 3; ++n) {
            Construction4Params p = Construction4Params::make(l, n);
            CHECK(BigInt(c4_enumerate(p).size()) <= sphere_packing_edit_bound(l, n));
        }
    }
}

TEST_CASE("exact maximum code search") {
    // t = 0: everything is a code.
    CHECK(exact_max_code(2, 2, 0, ErrorType::S).size == 16);

    auto r = exact_max_code(2, 2, 1, ErrorType::SID);
    CHECK(r.size == 4);
    CHECK(is_correcting_code(r.codebook, 1, ErrorType::SID).correcting);

    auto d = exact_max_code(2, 3, 2, ErrorType::D);
    CHECK(is_correcting_code(d.codebook, 2, ErrorType::D).correcting);
    CHECK(BigInt(d.size) <= clique_cover_size_formula(3, 1));
    CHECK(BigInt(d.size) <= clique_cover_size_formula(3, 3));

    CHECK_THROWS_AS(exact_max_code(2, 8, 1, ErrorType::S), resource_limit);
}

TEST_CASE("covers dominate enumerated codes") {
    auto code = c3_enumerate(Construction3Params::make(4, 0, 0));
    CliqueCover cover = build_clique_cover_edit(4);
    CHECK(code.size() <= cover.size());
    CHECK(code.size() == cover.size()); // this construction is optimal
}
