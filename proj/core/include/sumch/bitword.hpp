#ifndef SUMCH_BITWORD_HPP
#define SUMCH_BITWORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumch/errors.hpp"

namespace sumch {

/// An immutable-by-convention binary word. Position 1 is the leftmost
/// (most significant) bit in the text form.
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::vector<std::uint8_t> bits);

    static BitWord zeros(std::size_t n);
    static BitWord ones(std::size_t n);
    /// j-th unit vector of length n (single 1 at 1-based position j).
    static BitWord unit(std::size_t n, std::size_t j);
    /// Parses a string of '0'/'1' characters.
    static BitWord from_string(std::string_view s);
    /// Word of length n spelling the n-bit binary expansion of v, msb first.
    static BitWord from_index(std::uint64_t v, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    /// 1-based bit access.
    int bit(std::size_t pos) const;
    /// Returns a copy with the bit at 1-based position pos set to v.
    BitWord with_bit(std::size_t pos, int v) const;
    /// Returns a copy with the bit at 1-based position pos flipped.
    BitWord with_flip(std::size_t pos) const;
    /// Returns a copy with the bit at 1-based position pos removed.
    BitWord with_deletion(std::size_t pos) const;
    /// Returns a copy with bit v inserted so that it lands at 1-based
    /// position pos in the result (pos may be size()+1 for an append).
    BitWord with_insertion(std::size_t pos, int v) const;

    /// Numeric value of the word read msb-first; requires size() <= 64.
    std::uint64_t to_index() const;
    std::string to_string() const;

    const std::vector<std::uint8_t>& raw() const { return bits_; }

    friend bool operator==(const BitWord&, const BitWord&) = default;
    friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

/// (sum x_i) mod 2.
int parity(const BitWord& x);

/// Adjacent-bit XOR word of length |x|-1; requires |x| >= 2.
BitWord derivative(const BitWord& x);

/// u followed by v.
BitWord concat(const BitWord& u, const BitWord& v);

/// Bitwise XOR of equal-length words.
BitWord xor_words(const BitWord& x, const BitWord& y);

/// Bitwise NOT.
BitWord complement(const BitWord& x);

/// Number of differing positions; requires |x| == |y|.
std::size_t hamming_distance(const BitWord& x, const BitWord& y);

/// The contiguous subvector (x_i, ..., x_j), 1-based inclusive.
BitWord subword(const BitWord& x, std::size_t i, std::size_t j);

struct Run {
    int symbol = 0;           // 0 or 1
    std::size_t start = 0;    // 1-based index of the first bit of the run
    std::size_t length = 0;

    friend bool operator==(const Run&, const Run&) = default;
};

struct RunDecomposition {
    std::vector<Run> runs;

    /// Reassembles the original word.
    BitWord reconstruct() const;
};

/// Maximal-run decomposition; requires |x| >= 1.
RunDecomposition runs(const BitWord& x);

/// Rectangular binary matrix, every row of length col_count().
class CodeMatrix {
public:
    CodeMatrix() = default;
    explicit CodeMatrix(std::vector<BitWord> rows);

    static CodeMatrix from_index(std::uint64_t v, std::size_t row_count,
                                 std::size_t col_count);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return rows_.empty() ? 0 : rows_[0].size(); }
    const BitWord& row(std::size_t i) const;   // 1-based
    const std::vector<BitWord>& rows() const { return rows_; }

    friend bool operator==(const CodeMatrix&, const CodeMatrix&) = default;
    friend std::strong_ordering operator<=>(const CodeMatrix&, const CodeMatrix&) = default;

private:
    std::vector<BitWord> rows_;
};

/// Entrywise Hamming distance between equal-shape matrices.
std::size_t hamming_distance(const CodeMatrix& a, const CodeMatrix& b);

/// Possibly-ragged channel output.
class ReceivedMatrix {
public:
    ReceivedMatrix() = default;
    ReceivedMatrix(std::vector<BitWord> rows, std::size_t nominal_length);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t nominal_length() const { return nominal_length_; }
    const BitWord& row(std::size_t i) const;   // 1-based
    const std::vector<BitWord>& rows() const { return rows_; }

    friend bool operator==(const ReceivedMatrix&, const ReceivedMatrix&) = default;
    friend std::strong_ordering operator<=>(const ReceivedMatrix& a,
                                            const ReceivedMatrix& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<BitWord> rows_;
    std::size_t nominal_length_ = 0;
};

/// Text form: one row per line.
std::string to_text(const CodeMatrix& m);
std::string to_text(const ReceivedMatrix& m);
CodeMatrix code_matrix_from_text(std::string_view text);
ReceivedMatrix received_matrix_from_text(std::string_view text, std::size_t nominal_length);

/// Compact deterministic key, used for hashing and canonical ordering.
std::string matrix_key(const ReceivedMatrix& m);

} // namespace sumch

#endif
