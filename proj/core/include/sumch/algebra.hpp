#ifndef SUMCH_ALGEBRA_HPP
#define SUMCH_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumch/bitword.hpp"
#include "sumch/gf2m.hpp"

namespace sumch {

/// Syn_q(x) = sum_j j*x_j mod q.
std::uint64_t syndrome(const BitWord& x, std::uint64_t q);

/// Shifted-VT code SVT_{c,b}(n,P): weighted syndrome c modulo `modulus`
/// and word parity b. Corrects one deletion whose position is known to
/// within P consecutive positions.
struct SVTParams {
    std::size_t n = 0;
    std::size_t window = 0;    // P
    std::uint64_t modulus = 0; // >= window
    std::uint64_t c = 0;       // residue in [0, modulus)
    int b = 0;                 // parity bit

    static SVTParams make(std::size_t n, std::size_t window, std::uint64_t c, int b,
                          std::uint64_t modulus = 0);
};

bool svt_member(const BitWord& x, const SVTParams& p);

/// Decodes one deletion given a window [lo, hi] of candidate positions.
/// Uniqueness is guaranteed when hi-lo+1 <= P; larger windows are accepted
/// and any residual ambiguity is surfaced as ambiguity_error.
BitWord svt_decode(const BitWord& y, const SVTParams& p,
                   std::pair<std::size_t, std::size_t> window);

/// sigma(x) = phi(Syn_{2^h}(x), parity(x)) in GF(2^{h+1}); phi packs the
/// parity as the top coefficient bit and the syndrome as the low h bits.
FieldElement sigma(const BitWord& x, unsigned h);

/// Recovers the (syndrome, parity) pair that sigma packed.
std::pair<std::uint64_t, int> sigma_unpack(FieldElement e, unsigned h);

/// Two-check erasure code over GF(2^m): the coset
/// { s : sum s_i = s0, sum alpha_i s_i = s1 } with distinct nonzero
/// evaluation points, minimum Hamming distance 3.
struct MDSCodeParams {
    std::size_t length = 0;
    unsigned field_degree = 0;
    std::vector<FieldElement> alpha; // pairwise distinct, nonzero
    FieldElement s0;
    FieldElement s1;

    /// Evaluation points alpha_i = g^{i-1} for the field generator g.
    static MDSCodeParams make(std::size_t length, unsigned field_degree,
                              FieldElement s0 = {0}, FieldElement s1 = {0});
};

constexpr std::uint32_t kErasedSymbol = 0xFFFFFFFF;

/// Symbols with at most two positions erased (kErasedSymbol); returns the
/// unique completion satisfying both checks.
std::vector<FieldElement> mds_erasure_decode(const std::vector<std::uint32_t>& symbols,
                                             const MDSCodeParams& p);

FieldElement mds_check_sum(const std::vector<FieldElement>& symbols, const MDSCodeParams& p);
FieldElement mds_check_weighted(const std::vector<FieldElement>& symbols,
                                const MDSCodeParams& p);

/// Shortened Hamming coset code of length l: position i carries the r-bit
/// binary expansion of i as its parity-check column.
struct HammingParams {
    std::size_t length = 0;        // l
    unsigned r = 0;                // ceil(log2(l+1)) parity checks
    std::uint32_t coset_syndrome = 0;

    static HammingParams make(std::size_t length, std::uint32_t coset_syndrome = 0);
};

std::uint32_t hamming_syndrome(const BitWord& b, const HammingParams& p);
bool hamming_member(const BitWord& b, const HammingParams& p);

struct HammingDecodeResult {
    BitWord corrected;
    std::optional<std::size_t> flipped_position;
};

HammingDecodeResult hamming_decode(const BitWord& b, const HammingParams& p);

} // namespace sumch

#endif
