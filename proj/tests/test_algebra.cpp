#include "doctest.h"

#include <map>

#include "sumch/algebra.hpp"

using namespace sumch;

namespace {
BitWord w(const char* s) { return BitWord::from_string(s); }
} // namespace

TEST_CASE("weighted syndrome") {
    CHECK(syndrome(BitWord::zeros(8), 7) == 0);
    for (std::size_t j = 1; j <= 6; ++j) CHECK(syndrome(BitWord::unit(6, j), 4) == j % 4);
    CHECK(syndrome(w("1101"), 5) == 2);
    CHECK_THROWS_AS(syndrome(w("1101"), 1), invalid_argument);
}

TEST_CASE("svt membership and coset partition") {
    SVTParams p00 = SVTParams::make(6, 4, 0, 0);
    CHECK(svt_member(BitWord::zeros(6), p00));
    CHECK_FALSE(svt_member(BitWord::zeros(6), SVTParams::make(6, 4, 0, 1)));
    CHECK_THROWS_AS(svt_member(BitWord::zeros(5), p00), invalid_argument);

    std::size_t total = 0;
    for (std::uint64_t c = 0; c < 5; ++c) {
        for (int b = 0; b < 2; ++b) {
            SVTParams p = SVTParams::make(8, 5, c, b, 5);
            for (std::uint64_t v = 0; v < 256; ++v) {
                if (svt_member(BitWord::from_index(v, 8), p)) ++total;
            }
        }
    }
    CHECK(total == 256);
}

TEST_CASE("svt coset sizes meet the pigeonhole floor") {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (std::size_t P = 2; P <= n; ++P) {
            std::map<std::pair<std::uint64_t, int>, std::size_t> sizes;
            for (std::uint64_t v = 0; v < (1ull << n); ++v) {
                BitWord x = BitWord::from_index(v, n);
                ++sizes[{syndrome(x, P), parity(x)}];
            }
            std::size_t best = 0;
            for (const auto& [key, s] : sizes) best = std::max(best, s);
            CHECK(best * 2 * P >= (1ull << n));
        }
    }
}

TEST_CASE("svt decoding basics") {
    SVTParams p = SVTParams::make(7, 4, 0, 0);
    CHECK(svt_decode(BitWord::zeros(6), p, {2, 5}) == BitWord::zeros(7));
    // Inserting the forced bit 0 into the zero word cannot reach syndrome 5.
    SVTParams unreachable = SVTParams::make(7, 4, 5, 0, 8);
    CHECK_THROWS_AS(svt_decode(BitWord::zeros(6), unreachable, {1, 4}), decode_failure);
    CHECK_THROWS_AS(svt_decode(BitWord::zeros(5), p, {1, 4}), invalid_argument);
    CHECK_THROWS_AS(svt_decode(BitWord::zeros(6), p, {5, 4}), invalid_argument);
}

TEST_CASE("svt round-trip oracle at small lengths") {
    for (std::size_t n = 2; n <= 9; ++n) {
        for (std::size_t P = 2; P <= n; ++P) {
            for (std::uint64_t v = 0; v < (1ull << n); ++v) {
                BitWord x = BitWord::from_index(v, n);
                SVTParams p = SVTParams::make(n, P, syndrome(x, P), parity(x));
                for (std::size_t pos = 1; pos <= n; ++pos) {
                    BitWord y = x.with_deletion(pos);
                    std::size_t lo = pos >= P ? pos - P + 1 : 1;
                    for (std::size_t s = lo; s <= pos; ++s) {
                        CHECK(svt_decode(y, p, {s, s + P - 1}) == x);
                    }
                }
            }
        }
    }
}

TEST_CASE("sigma packs syndrome and parity injectively") {
    CHECK(sigma(BitWord::zeros(6), 3) == FieldElement{0});
    CHECK(sigma(BitWord::unit(5, 1), 2) == FieldElement{0b101});
    for (unsigned h = 1; h <= 6; ++h) {
        for (std::uint64_t v = 0; v < 64; ++v) {
            BitWord x = BitWord::from_index(v, 6);
            auto [syn, par] = sigma_unpack(sigma(x, h), h);
            CHECK(syn == syndrome(x, 1ull << h));
            CHECK(par == parity(x));
        }
    }
}

TEST_CASE("two-check erasure code") {
    // Length 3 over GF(8): enumerate the (s0,s1) = (3,5) coset directly.
    GaloisField f(3);
    MDSCodeParams p = MDSCodeParams::make(3, 3, f.element(3), f.element(5));
    std::vector<std::vector<FieldElement>> words;
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b)
            for (std::uint32_t c = 0; c < 8; ++c) {
                std::vector<FieldElement> s{f.element(a), f.element(b), f.element(c)};
                if (mds_check_sum(s, p) == p.s0 && mds_check_weighted(s, p) == p.s1)
                    words.push_back(s);
            }
    CHECK(words.size() == 8); // one free symbol

    for (const auto& cw : words) {
        std::vector<std::uint32_t> raw{cw[0].coeffs, cw[1].coeffs, cw[2].coeffs};
        CHECK(mds_erasure_decode(raw, p) == cw);
        for (std::size_t i = 0; i < 3; ++i) {
            auto one = raw;
            one[i] = kErasedSymbol;
            CHECK(mds_erasure_decode(one, p) == cw);
            for (std::size_t j = i + 1; j < 3; ++j) {
                auto two = raw;
                two[i] = kErasedSymbol;
                two[j] = kErasedSymbol;
                CHECK(mds_erasure_decode(two, p) == cw);
            }
        }
    }

    std::vector<std::uint32_t> bad{words[0][0].coeffs ^ 1, words[0][1].coeffs,
                                   words[0][2].coeffs};
    CHECK_THROWS_AS(mds_erasure_decode(bad, p), decode_failure);
    std::vector<std::uint32_t> over{kErasedSymbol, kErasedSymbol, kErasedSymbol};
    CHECK_THROWS_AS(mds_erasure_decode(over, p), invalid_argument);
}

TEST_CASE("shortened hamming coset codes") {
    // l = 3, zero coset: {000, 111}, distance 3.
    HammingParams h3 = HammingParams::make(3, 0);
    std::vector<BitWord> code;
    for (std::uint64_t v = 0; v < 8; ++v) {
        BitWord b = BitWord::from_index(v, 3);
        if (hamming_member(b, h3)) code.push_back(b);
    }
    REQUIRE(code.size() == 2);
    CHECK(code[0] == w("000"));
    CHECK(code[1] == w("111"));
    CHECK(hamming_distance(code[0], code[1]) == 3);

    // Cosets partition F_2^l.
    for (std::size_t l = 3; l <= 7; ++l) {
        HammingParams probe = HammingParams::make(l, 0);
        std::size_t total = 0;
        for (std::uint32_t s = 0; s < (1u << probe.r); ++s) {
            HammingParams p = HammingParams::make(l, s);
            for (std::uint64_t v = 0; v < (1ull << l); ++v)
                if (hamming_member(BitWord::from_index(v, l), p)) ++total;
        }
        CHECK(total == (1ull << l));
    }
}

TEST_CASE("hamming decode single-flip oracle") {
    for (std::size_t l : {3ull, 7ull, 15ull}) {
        HammingParams p = HammingParams::make(l, l == 3 ? 2u : 0u);
        for (std::uint64_t v = 0; v < (1ull << l); ++v) {
            BitWord b = BitWord::from_index(v, l);
            if (!hamming_member(b, p)) continue;
            auto clean = hamming_decode(b, p);
            CHECK(clean.corrected == b);
            CHECK_FALSE(clean.flipped_position.has_value());
            for (std::size_t j = 1; j <= l; ++j) {
                auto fixed = hamming_decode(b.with_flip(j), p);
                CHECK(fixed.corrected == b);
                CHECK(fixed.flipped_position == j);
            }
        }
    }
}
