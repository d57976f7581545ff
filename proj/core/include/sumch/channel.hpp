#ifndef SUMCH_CHANNEL_HPP
#define SUMCH_CHANNEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumch/bitword.hpp"

namespace sumch {

/// X with its parity row appended; every column of the full matrix has
/// even parity.
class SumMatrix {
public:
    explicit SumMatrix(CodeMatrix base);

    const CodeMatrix& base() const { return base_; }
    const BitWord& parity_row() const { return parity_row_; }
    std::size_t row_count() const { return base_.row_count() + 1; }
    std::size_t col_count() const { return base_.col_count(); }
    /// 1-based; row row_count() is the parity row.
    const BitWord& row(std::size_t i) const;

    /// Error-free channel output.
    ReceivedMatrix as_received() const;

private:
    CodeMatrix base_;
    BitWord parity_row_;
};

SumMatrix sum_matrix(const CodeMatrix& x);

enum class ErrorType { S, D, I, ID, SID };

ErrorType error_type_from_string(std::string_view s);
std::string to_string(ErrorType t);

enum class ErrorKind { Substitute, Delete, Insert };

std::string to_string(ErrorKind k);

struct ErrorEvent {
    std::size_t row = 0;       // 1-based row of the (l+1)-row sum matrix
    ErrorKind kind = ErrorKind::Substitute;
    std::size_t position = 0;  // 1-based, valid at application time
    int value = 0;             // substitute/insert only

    friend bool operator==(const ErrorEvent&, const ErrorEvent&) = default;
};

constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Applies the events in sequence order to the rows of X+.
ReceivedMatrix apply_errors(const SumMatrix& xplus, const std::vector<ErrorEvent>& events);

/// Exact error ball B^T_t(X), deduplicated and canonically ordered.
std::vector<ReceivedMatrix> error_ball(const CodeMatrix& x, unsigned t, ErrorType kind,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// Ball keys (matrix_key form), sorted; cheaper than full matrices.
std::vector<std::string> error_ball_keys(const CodeMatrix& x, unsigned t, ErrorType kind,
                                         std::uint64_t cap = kDefaultEnumerationCap);

bool balls_intersect(const CodeMatrix& x1, const CodeMatrix& x2, unsigned t, ErrorType kind,
                     std::uint64_t cap = kDefaultEnumerationCap);

struct CorrectingCodeReport {
    bool correcting = true;
    // Present on failure: a violating pair and one common channel output.
    std::optional<std::pair<CodeMatrix, CodeMatrix>> witness_pair;
    std::optional<ReceivedMatrix> common_output;
    std::uint64_t pairs_checked = 0;
};

/// True iff all distinct codeword pairs have disjoint balls.
CorrectingCodeReport is_correcting_code(const std::vector<CodeMatrix>& codebook, unsigned t,
                                        ErrorType kind,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// The three two-class partition reads of a DNA strand; the third equals
/// the XOR of the first two.
struct DnaPartitions {
    BitWord first;
    BitWord second;
    BitWord third;
};

DnaPartitions dna_partitions(std::string_view strand);

/// Inverse of the partition map: rebuilds the strand from the first two reads.
std::string dna_strand_from_partitions(const BitWord& first, const BitWord& second);

/// Reproducible fault injection: draws exactly t events uniformly over the
/// legal (row, position, value) choices of the kind.
std::pair<ReceivedMatrix, std::vector<ErrorEvent>> corrupt(const CodeMatrix& x, unsigned t,
                                                           ErrorType kind, std::uint64_t seed);

} // namespace sumch

#endif
