#include "sumch/channel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sumch {

SumMatrix::SumMatrix(CodeMatrix base) : base_(std::move(base)) {
    BitWord p = base_.row(1);
    for (std::size_t i = 2; i <= base_.row_count(); ++i) p = xor_words(p, base_.row(i));
    parity_row_ = std::move(p);
}

const BitWord& SumMatrix::row(std::size_t i) const {
    if (i < 1 || i > row_count()) throw invalid_argument("SumMatrix::row: index out of range");
    if (i == row_count()) return parity_row_;
    return base_.row(i);
}

ReceivedMatrix SumMatrix::as_received() const {
    std::vector<BitWord> rows = base_.rows();
    rows.push_back(parity_row_);
    return ReceivedMatrix(std::move(rows), col_count());
}

SumMatrix sum_matrix(const CodeMatrix& x) { return SumMatrix(x); }

ErrorType error_type_from_string(std::string_view s) {
    if (s == "S") return ErrorType::S;
    if (s == "D") return ErrorType::D;
    if (s == "I") return ErrorType::I;
    if (s == "ID") return ErrorType::ID;
    if (s == "SID") return ErrorType::SID;
    throw invalid_argument("unknown error type: " + std::string(s));
}

std::string to_string(ErrorType t) {
    switch (t) {
        case ErrorType::S: return "S";
        case ErrorType::D: return "D";
        case ErrorType::I: return "I";
        case ErrorType::ID: return "ID";
        case ErrorType::SID: return "SID";
    }
    return "?";
}

std::string to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Substitute: return "substitute";
        case ErrorKind::Delete: return "delete";
        case ErrorKind::Insert: return "insert";
    }
    return "?";
}

namespace {

std::vector<ErrorKind> kinds_of(ErrorType t) {
    switch (t) {
        case ErrorType::S: return {ErrorKind::Substitute};
        case ErrorType::D: return {ErrorKind::Delete};
        case ErrorType::I: return {ErrorKind::Insert};
        case ErrorType::ID: return {ErrorKind::Delete, ErrorKind::Insert};
        case ErrorType::SID:
            return {ErrorKind::Substitute, ErrorKind::Delete, ErrorKind::Insert};
    }
    return {};
}

BitWord apply_event_to_row(const BitWord& row, const ErrorEvent& e) {
    switch (e.kind) {
        case ErrorKind::Substitute: return row.with_bit(e.position, e.value);
        case ErrorKind::Delete: return row.with_deletion(e.position);
        case ErrorKind::Insert: return row.with_insertion(e.position, e.value);
    }
    throw invalid_argument("apply_event_to_row: bad kind");
}

/// All legal single events for a matrix state under the given kinds.
std::vector<ErrorEvent> legal_events(const std::vector<BitWord>& rows,
                                     const std::vector<ErrorKind>& kinds) {
    std::vector<ErrorEvent> out;
    for (std::size_t r = 1; r <= rows.size(); ++r) {
        std::size_t len = rows[r - 1].size();
        for (ErrorKind k : kinds) {
            switch (k) {
                case ErrorKind::Substitute:
                    for (std::size_t p = 1; p <= len; ++p)
                        out.push_back({r, k, p, 1 - rows[r - 1].bit(p)});
                    break;
                case ErrorKind::Delete:
                    for (std::size_t p = 1; p <= len; ++p) out.push_back({r, k, p, 0});
                    break;
                case ErrorKind::Insert:
                    for (std::size_t p = 1; p <= len + 1; ++p) {
                        out.push_back({r, k, p, 0});
                        out.push_back({r, k, p, 1});
                    }
                    break;
            }
        }
    }
    return out;
}

} // namespace

ReceivedMatrix apply_errors(const SumMatrix& xplus, const std::vector<ErrorEvent>& events) {
    std::vector<BitWord> rows;
    rows.reserve(xplus.row_count());
    for (std::size_t i = 1; i <= xplus.row_count(); ++i) rows.push_back(xplus.row(i));
    for (const auto& e : events) {
        if (e.row < 1 || e.row > rows.size())
            throw invalid_argument("apply_errors: row out of range");
        rows[e.row - 1] = apply_event_to_row(rows[e.row - 1], e);
    }
    return ReceivedMatrix(std::move(rows), xplus.col_count());
}

std::vector<ReceivedMatrix> error_ball(const CodeMatrix& x, unsigned t, ErrorType kind,
                                       std::uint64_t cap) {
    SumMatrix xp = sum_matrix(x);
    std::set<ReceivedMatrix> ball;
    ball.insert(xp.as_received());
    std::vector<ReceivedMatrix> frontier{xp.as_received()};
    auto kinds = kinds_of(kind);
    std::uint64_t generated = 1;
    for (unsigned step = 0; step < t; ++step) {
        std::vector<ReceivedMatrix> next;
        for (const auto& m : frontier) {
            auto events = legal_events(m.rows(), kinds);
            generated += events.size();
            if (generated > cap)
                throw resource_limit("error_ball: enumeration cap " + std::to_string(cap) +
                                     " exceeded");
            for (const auto& e : events) {
                std::vector<BitWord> rows = m.rows();
                rows[e.row - 1] = apply_event_to_row(rows[e.row - 1], e);
                ReceivedMatrix cand(std::move(rows), m.nominal_length());
                if (ball.insert(cand).second) next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
    }
    return {ball.begin(), ball.end()};
}

std::vector<std::string> error_ball_keys(const CodeMatrix& x, unsigned t, ErrorType kind,
                                         std::uint64_t cap) {
    auto ball = error_ball(x, t, kind, cap);
    std::vector<std::string> keys;
    keys.reserve(ball.size());
    for (const auto& m : ball) keys.push_back(matrix_key(m));
    std::sort(keys.begin(), keys.end());
    return keys;
}

bool balls_intersect(const CodeMatrix& x1, const CodeMatrix& x2, unsigned t, ErrorType kind,
                     std::uint64_t cap) {
    if (x1.row_count() != x2.row_count() || x1.col_count() != x2.col_count())
        throw invalid_argument("balls_intersect: shape mismatch");
    auto b1 = error_ball_keys(x1, t, kind, cap);
    auto b2 = error_ball_keys(x2, t, kind, cap);
    std::size_t i = 0, j = 0;
    while (i < b1.size() && j < b2.size()) {
        int c = b1[i].compare(b2[j]);
        if (c == 0) return true;
        if (c < 0) ++i;
        else ++j;
    }
    return false;
}

CorrectingCodeReport is_correcting_code(const std::vector<CodeMatrix>& codebook, unsigned t,
                                        ErrorType kind, std::uint64_t cap) {
    CorrectingCodeReport rep;
    if (codebook.size() > 1) {
        for (std::size_t i = 1; i < codebook.size(); ++i) {
            if (codebook[i].row_count() != codebook[0].row_count() ||
                codebook[i].col_count() != codebook[0].col_count())
                throw invalid_argument("is_correcting_code: codebook shapes differ");
        }
    }
    // A shared output between two codewords is a collision in one global map.
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        auto ball = error_ball(codebook[i], t, kind, cap);
        for (const auto& m : ball) {
            auto [it, inserted] = seen.emplace(matrix_key(m), i);
            if (!inserted && it->second != i) {
                rep.correcting = false;
                rep.witness_pair = {codebook[it->second], codebook[i]};
                rep.common_output = m;
                rep.pairs_checked = codebook.size() * (codebook.size() - 1) / 2;
                return rep;
            }
        }
    }
    rep.pairs_checked = codebook.empty() ? 0 : codebook.size() * (codebook.size() - 1) / 2;
    return rep;
}

namespace {

// Partition classes: bit 0 iff the base lies in the first class.
// 1: {A,C} vs {G,T}   2: {A,G} vs {C,T}   3: {A,T} vs {C,G}
int partition_bit(char base, int which, std::size_t pos) {
    switch (base) {
        case 'A': return 0;
        case 'C': return which == 1 ? 0 : 1;
        case 'G': return which == 2 ? 0 : 1;
        case 'T': return which == 3 ? 0 : 1;
        default:
            throw invalid_argument("dna_partitions: invalid base at position " +
                                   std::to_string(pos));
    }
}

} // namespace

DnaPartitions dna_partitions(std::string_view strand) {
    if (strand.empty()) throw invalid_argument("dna_partitions: empty strand");
    std::vector<std::uint8_t> b1, b2, b3;
    for (std::size_t i = 0; i < strand.size(); ++i) {
        int p1 = partition_bit(strand[i], 1, i + 1);
        int p2 = partition_bit(strand[i], 2, i + 1);
        b1.push_back(static_cast<std::uint8_t>(p1));
        b2.push_back(static_cast<std::uint8_t>(p2));
        b3.push_back(static_cast<std::uint8_t>(p1 ^ p2));
    }
    return {BitWord(std::move(b1)), BitWord(std::move(b2)), BitWord(std::move(b3))};
}

std::string dna_strand_from_partitions(const BitWord& first, const BitWord& second) {
    if (first.size() != second.size())
        throw invalid_argument("dna_strand_from_partitions: length mismatch");
    static constexpr char table[2][2] = {{'A', 'C'}, {'G', 'T'}};
    std::string out;
    out.reserve(first.size());
    for (std::size_t i = 1; i <= first.size(); ++i)
        out.push_back(table[first.bit(i)][second.bit(i)]);
    return out;
}

std::pair<ReceivedMatrix, std::vector<ErrorEvent>> corrupt(const CodeMatrix& x, unsigned t,
                                                           ErrorType kind, std::uint64_t seed) {
    SumMatrix xp = sum_matrix(x);
    std::vector<BitWord> rows;
    for (std::size_t i = 1; i <= xp.row_count(); ++i) rows.push_back(xp.row(i));
    std::mt19937_64 rng(seed);
    auto kinds = kinds_of(kind);
    std::vector<ErrorEvent> applied;
    for (unsigned step = 0; step < t; ++step) {
        auto events = legal_events(rows, kinds);
        std::uniform_int_distribution<std::size_t> pick(0, events.size() - 1);
        ErrorEvent e = events[pick(rng)];
        rows[e.row - 1] = apply_event_to_row(rows[e.row - 1], e);
        applied.push_back(e);
    }
    return {ReceivedMatrix(std::move(rows), xp.col_count()), std::move(applied)};
}

} // namespace sumch
