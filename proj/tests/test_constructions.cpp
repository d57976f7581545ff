#include "doctest.h"

#include <map>
#include <set>

#include "sumch/constructions.hpp"

using namespace sumch;

namespace {

BitWord w(const char* s) { return BitWord::from_string(s); }

ReceivedMatrix drop(const CodeMatrix& x, std::vector<ErrorEvent> events) {
    return apply_errors(sum_matrix(x), events);
}

} // namespace

TEST_CASE("construction 1 membership") {
    // n = 6 keeps k = P - 1 = 5 < n with slack 2.
    Construction1Params p = Construction1Params::make(6, 2, 0, 0, 0, 0);
    CHECK(p.window == 6);
    CHECK(p.k == 5);
    CHECK_FALSE(c1_member(CodeMatrix({w("101101"), w("101101")}), p));
    CHECK_THROWS_AS(c1_member(CodeMatrix({w("1011"), w("0110")}), p),
                    invalid_argument);
    for (const auto& x : c1_enumerate(p)) {
        CHECK(parity(x.row(1)) == p.svt1.b);
        CHECK(parity(x.row(2)) == p.svt2.b);
        CHECK(in_P_plus(x, p.k));
    }
    CHECK_THROWS_AS(Construction1Params::make(4, 3, 0, 0, 0, 0), invalid_argument);
}

TEST_CASE("construction 1 cosets partition the constrained set") {
    const std::size_t n = 6;
    const unsigned slack = 2;
    std::uint64_t constrained = 0;
    for (std::uint64_t v = 0; v < (1ull << (2 * n)); ++v) {
        if (in_P_plus(CodeMatrix::from_index(v, 2, n), 5)) ++constrained;
    }
    auto best = c1_search_coset(n, slack);
    CHECK(best.constrained_total == constrained);
    std::size_t coset_sum = 0;
    for (std::uint64_t c1 = 0; c1 < 6; ++c1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (std::uint64_t c2 = 0; c2 < 6; ++c2)
                for (int b2 = 0; b2 < 2; ++b2)
                    coset_sum +=
                        c1_enumerate(Construction1Params::make(n, slack, c1, b1, c2, b2))
                            .size();
    CHECK(coset_sum == constrained);
    CHECK(best.size * 4 * 6 * 6 >= constrained); // pigeonhole floor
}

TEST_CASE("construction 1 decoder easy cases") {
    Construction1Params p = Construction1Params::make(6, 2, 0, 0, 0, 0);
    auto code = c1_enumerate(p);
    REQUIRE(!code.empty());
    const CodeMatrix& x = code.front();

    DecodeTrace tr;
    CHECK(c1_decode(sum_matrix(x).as_received(), p, &tr) == x);
    CHECK(tr.case_name == "aligned");

    // Both deletions in the parity row.
    CHECK(c1_decode(drop(x, {{3, ErrorKind::Delete, 1, 0}, {3, ErrorKind::Delete, 1, 0}}),
                    p) == x);
    // Both deletions in one data row.
    CHECK(c1_decode(drop(x, {{2, ErrorKind::Delete, 2, 0}, {2, ErrorKind::Delete, 4, 0}}),
                    p) == x);
    // One deletion.
    for (std::size_t r = 1; r <= 3; ++r)
        CHECK(c1_decode(drop(x, {{r, ErrorKind::Delete, 1, 0}}), p) == x);

    // Three deletions fall outside the model.
    CHECK_THROWS_AS(c1_decode(drop(x, {{1, ErrorKind::Delete, 1, 0},
                                       {2, ErrorKind::Delete, 1, 0},
                                       {3, ErrorKind::Delete, 1, 0}}),
                              p),
                    decode_failure);
    CHECK_THROWS_AS(c1_decode(ReceivedMatrix({w("101"), w("011")}, 3), p),
                    invalid_argument);
}

TEST_CASE("construction 1 round trip at n = 6") {
    auto best = c1_search_coset(6, 2);
    auto code = c1_enumerate(best.params);
    REQUIRE(code.size() == best.size);
    for (const auto& x : code) {
        SumMatrix xp = sum_matrix(x);
        for (const auto& events : distinct_row_deletion_pairs(xp)) {
            CHECK(c1_decode(apply_errors(xp, events), best.params) == x);
        }
    }
}

TEST_CASE("construction 2 membership partitions like construction 1") {
    const std::size_t n = 6;
    Construction2Params p = Construction2Params::make(2, n, 2, {0}, {0});
    CHECK(p.window == 6);
    CHECK(p.h == 3);
    CHECK(p.mds.field_degree == 4);
    CHECK_FALSE(c2_member(CodeMatrix({w("101101"), w("101101")}), p));

    std::uint64_t constrained = 0;
    for (std::uint64_t v = 0; v < (1ull << (2 * n)); ++v)
        if (in_P_plus(CodeMatrix::from_index(v, 2, n), p.k)) ++constrained;
    std::size_t coset_sum = 0;
    for (std::uint32_t s0 = 0; s0 < 16; ++s0)
        for (std::uint32_t s1 = 0; s1 < 16; ++s1)
            coset_sum += c2_enumerate(Construction2Params::make(2, n, 2, {s0}, {s1})).size();
    CHECK(coset_sum == constrained);
}

TEST_CASE("construction 2 round trip and agreement with the two-row decoder") {
    const std::size_t n = 6;
    // Pick the largest sigma coset at l = 2.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> sizes;
    for (std::uint32_t s0 = 0; s0 < 16; ++s0)
        for (std::uint32_t s1 = 0; s1 < 16; ++s1)
            sizes[{s0, s1}] =
                c2_enumerate(Construction2Params::make(2, n, 2, {s0}, {s1})).size();
    auto bestc = sizes.begin();
    for (auto it = sizes.begin(); it != sizes.end(); ++it)
        if (it->second > bestc->second) bestc = it;
    Construction2Params p =
        Construction2Params::make(2, n, 2, {bestc->first.first}, {bestc->first.second});
    auto code = c2_enumerate(p);
    REQUIRE(code.size() == bestc->second);
    REQUIRE(!code.empty());
    for (const auto& x : code) {
        SumMatrix xp = sum_matrix(x);
        CHECK(c2_decode(xp.as_received(), p) == x);
        for (const auto& events : distinct_row_deletion_pairs(xp)) {
            CHECK(c2_decode(apply_errors(xp, events), p) == x);
        }
        // The matching two-row code decodes the same outputs.
        auto [syn1, b1] = sigma_unpack(sigma(x.row(1), p.h), p.h);
        auto [syn2, b2] = sigma_unpack(sigma(x.row(2), p.h), p.h);
        Construction1Params q{n, 2, p.window, p.k,
                              SVTParams::make(n, p.window, syn1, b1, 1ull << p.h),
                              SVTParams::make(n, p.window, syn2, b2, 1ull << p.h)};
        for (const auto& events : distinct_row_deletion_pairs(xp)) {
            CHECK(c1_decode(apply_errors(xp, events), q) == x);
        }
    }
}

TEST_CASE("construction 3 sizes and membership") {
    for (std::size_t n = 3; n <= 6; ++n) {
        std::size_t total = 0;
        for (int b1 = 0; b1 < 2; ++b1) {
            for (int b2 = 0; b2 < 2; ++b2) {
                auto code = c3_enumerate(Construction3Params::make(n, b1, b2));
                CHECK(code.size() == (1ull << (2 * n - 2)));
                total += code.size();
            }
        }
        CHECK(total == (1ull << (2 * n)));
    }
    CHECK(c3_member(CodeMatrix({w("0000"), w("0000")}), Construction3Params::make(4, 0, 0)));
}

TEST_CASE("construction 3 decoder") {
    Construction3Params p = Construction3Params::make(4, 0, 0);
    auto code = c3_enumerate(p);
    REQUIRE(code.size() == 64);
    for (const auto& x : code) {
        SumMatrix xp = sum_matrix(x);
        CHECK(c3_decode(xp.as_received(), p) == x);
        for (std::size_t r = 1; r <= 3; ++r) {
            for (std::size_t j = 1; j <= 4; ++j) {
                // Substitution.
                CHECK(c3_decode(drop(x, {{r, ErrorKind::Substitute, j,
                                          xp.row(r).bit(j) ^ 1}}),
                                p) == x);
                // Deletion.
                CHECK(c3_decode(drop(x, {{r, ErrorKind::Delete, j, 0}}), p) == x);
                // Insertions (both values).
                for (int v = 0; v < 2; ++v)
                    CHECK(c3_decode(drop(x, {{r, ErrorKind::Insert, j, v}}), p) == x);
            }
        }
    }
}

TEST_CASE("construction 4 sizes and reduction to construction 3") {
    for (std::size_t l : {3ull, 4ull, 5ull}) {
        for (std::size_t n = 2; n <= 3; ++n) {
            Construction4Params p = Construction4Params::make(l, n);
            auto code = c4_enumerate(p);
            CHECK(code.size() == (1ull << (n * l - p.ham.r)));
        }
    }
    // l = 2 with coset syndrome b1 + 2*b2 pins the two row parities.
    for (int b1 = 0; b1 < 2; ++b1) {
        for (int b2 = 0; b2 < 2; ++b2) {
            auto four = c4_enumerate(Construction4Params::make(
                2, 4, static_cast<std::uint32_t>(b1 | (b2 << 1))));
            auto three = c3_enumerate(Construction3Params::make(4, b1, b2));
            CHECK(four == three);
        }
    }
}

TEST_CASE("construction 4 decoder at l = 3") {
    Construction4Params p = Construction4Params::make(3, 3);
    auto code = c4_enumerate(p);
    REQUIRE(code.size() == (1ull << (9 - 2)));
    for (const auto& x : code) {
        SumMatrix xp = sum_matrix(x);
        CHECK(c4_decode(xp.as_received(), p) == x);
        for (std::size_t r = 1; r <= 4; ++r) {
            for (std::size_t j = 1; j <= 3; ++j) {
                CHECK(c4_decode(drop(x, {{r, ErrorKind::Substitute, j,
                                          xp.row(r).bit(j) ^ 1}}),
                                p) == x);
                CHECK(c4_decode(drop(x, {{r, ErrorKind::Delete, j, 0}}), p) == x);
                for (int v = 0; v < 2; ++v)
                    CHECK(c4_decode(drop(x, {{r, ErrorKind::Insert, j, v}}), p) == x);
            }
        }
    }
}

TEST_CASE("index encoding is a bijection") {
    auto code = c3_enumerate(Construction3Params::make(5, 0, 0));
    REQUIRE(code.size() == 256);
    CHECK(encode_index(0, code) == code.front());
    for (std::uint64_t i = 0; i < code.size(); ++i)
        CHECK(decode_index(encode_index(i, code), code) == i);
    CHECK_THROWS_AS(encode_index(code.size(), code), invalid_argument);
    CHECK_THROWS_AS(decode_index(CodeMatrix({w("10000"), w("00000")}), code),
                    invalid_argument);
}

TEST_CASE("distinct-row deletion patterns") {
    CodeMatrix x({w("1100"), w("1010")});
    SumMatrix xp = sum_matrix(x); // rows 1100, 1010, 0110: 2, 4, 3 runs
    auto patterns = distinct_row_deletion_pairs(xp);
    CHECK(patterns.size() == 2 * 4 + 2 * 3 + 4 * 3);
    std::set<std::string> outputs;
    for (const auto& ev : patterns) {
        REQUIRE(ev.size() == 2);
        CHECK(ev[0].row < ev[1].row);
        outputs.insert(matrix_key(apply_errors(xp, ev)));
    }
    CHECK(outputs.size() == patterns.size()); // run starts are canonical
}
