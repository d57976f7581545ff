#ifndef SUMCH_CONSTRUCTIONS_HPP
#define SUMCH_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sumch/algebra.hpp"
#include "sumch/bitword.hpp"
#include "sumch/channel.hpp"
#include "sumch/misalign.hpp"

namespace sumch {

/// Trace emitted by the two-deletion decoders.
struct DecodeTrace {
    std::string case_name;       // "aligned", "single-row", "two-rows"
    std::size_t j1 = 0;          // forward scan stop
    std::size_t j2 = 0;          // backward scan stop
    std::string path;            // "none", "xor", "svt", "unique-insertion"
};

/// Two-row two-deletion code: per-row SVT membership plus the global
/// misalignment constraint on the sum matrix.
struct Construction1Params {
    std::size_t n = 0;
    unsigned slack = 3;          // the constant c
    std::size_t window = 0;      // P = ceil(log2 n) + c + 1
    std::size_t k = 0;           // P - 1
    SVTParams svt1;
    SVTParams svt2;

    static Construction1Params make(std::size_t n, unsigned slack, std::uint64_t c1, int b1,
                                    std::uint64_t c2, int b2);
};

bool c1_member(const CodeMatrix& x, const Construction1Params& p);
CodeMatrix c1_decode(const ReceivedMatrix& y, const Construction1Params& p,
                     DecodeTrace* trace = nullptr);

struct CosetSearchResult {
    Construction1Params params;
    std::size_t size = 0;
    std::uint64_t constrained_total = 0; // matrices passing the misalignment constraint
};

/// Exhaustive sweep over (c1, b1, c2, b2); ties broken lexicographically.
CosetSearchResult c1_search_coset(std::size_t n, unsigned slack,
                                  std::uint64_t cap = kDefaultEnumerationCap);

std::vector<CodeMatrix> c1_enumerate(const Construction1Params& p,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Tensor-product two-deletion code for arbitrary row count: the per-row
/// sigma symbols lie in a two-erasure MDS coset, plus global misalignment.
struct Construction2Params {
    std::size_t l = 0;
    std::size_t n = 0;
    unsigned slack = 3;
    std::size_t window = 0;      // P
    unsigned h = 0;              // ceil(log2 P)
    std::size_t k = 0;           // P - 1
    MDSCodeParams mds;           // over GF(2^{h+1}), length l

    static Construction2Params make(std::size_t l, std::size_t n, unsigned slack,
                                    FieldElement s0, FieldElement s1);
};

bool c2_member(const CodeMatrix& x, const Construction2Params& p);
CodeMatrix c2_decode(const ReceivedMatrix& y, const Construction2Params& p,
                     DecodeTrace* trace = nullptr);
std::vector<CodeMatrix> c2_enumerate(const Construction2Params& p,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Two-row single-edit code: both row parities fixed.
struct Construction3Params {
    std::size_t n = 0;
    int b1 = 0;
    int b2 = 0;

    static Construction3Params make(std::size_t n, int b1, int b2);
};

bool c3_member(const CodeMatrix& x, const Construction3Params& p);
CodeMatrix c3_decode(const ReceivedMatrix& y, const Construction3Params& p);
std::vector<CodeMatrix> c3_enumerate(const Construction3Params& p,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Tensor-product single-edit code: the row-parity vector lies in a
/// shortened Hamming coset.
struct Construction4Params {
    std::size_t l = 0;
    std::size_t n = 0;
    HammingParams ham;

    static Construction4Params make(std::size_t l, std::size_t n,
                                    std::uint32_t coset_syndrome = 0);
};

bool c4_member(const CodeMatrix& x, const Construction4Params& p);
CodeMatrix c4_decode(const ReceivedMatrix& y, const Construction4Params& p);
std::vector<CodeMatrix> c4_enumerate(const Construction4Params& p,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Index <-> codeword bijection over a canonically sorted codebook.
CodeMatrix encode_index(std::uint64_t info, const std::vector<CodeMatrix>& codebook);
std::uint64_t decode_index(const CodeMatrix& x, const std::vector<CodeMatrix>& codebook);

/// Run-level canonical two-deletion patterns hitting two distinct rows of
/// the sum matrix: all (row pair, run start, run start) choices.
std::vector<std::vector<ErrorEvent>> distinct_row_deletion_pairs(const SumMatrix& xp);

} // namespace sumch

#endif
