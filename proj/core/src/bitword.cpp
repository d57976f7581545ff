#include "sumch/bitword.hpp"

#include <algorithm>
#include <sstream>

namespace sumch {

BitWord::BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw invalid_argument("BitWord: bits must be 0 or 1");
    }
}

BitWord BitWord::zeros(std::size_t n) {
    return BitWord(std::vector<std::uint8_t>(n, 0));
}

BitWord BitWord::ones(std::size_t n) {
    return BitWord(std::vector<std::uint8_t>(n, 1));
}

BitWord BitWord::unit(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw invalid_argument("BitWord::unit: index out of range");
    std::vector<std::uint8_t> v(n, 0);
    v[j - 1] = 1;
    return BitWord(std::move(v));
}

BitWord BitWord::from_string(std::string_view s) {
    std::vector<std::uint8_t> v;
    v.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '0') v.push_back(0);
        else if (c == '1') v.push_back(1);
        else throw invalid_argument("BitWord::from_string: invalid character at position " +
                                    std::to_string(i + 1));
    }
    return BitWord(std::move(v));
}

BitWord BitWord::from_index(std::uint64_t value, std::size_t n) {
    std::vector<std::uint8_t> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        v[n - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1u);
    }
    return BitWord(std::move(v));
}

int BitWord::bit(std::size_t pos) const {
    if (pos < 1 || pos > bits_.size())
        throw invalid_argument("BitWord::bit: position out of range");
    return bits_[pos - 1];
}

BitWord BitWord::with_bit(std::size_t pos, int v) const {
    if (pos < 1 || pos > bits_.size())
        throw invalid_argument("BitWord::with_bit: position out of range");
    BitWord out = *this;
    out.bits_[pos - 1] = static_cast<std::uint8_t>(v & 1);
    return out;
}

BitWord BitWord::with_flip(std::size_t pos) const {
    if (pos < 1 || pos > bits_.size())
        throw invalid_argument("BitWord::with_flip: position out of range");
    BitWord out = *this;
    out.bits_[pos - 1] ^= 1u;
    return out;
}

BitWord BitWord::with_deletion(std::size_t pos) const {
    if (pos < 1 || pos > bits_.size())
        throw invalid_argument("BitWord::with_deletion: position out of range");
    BitWord out = *this;
    out.bits_.erase(out.bits_.begin() + static_cast<std::ptrdiff_t>(pos - 1));
    return out;
}

BitWord BitWord::with_insertion(std::size_t pos, int v) const {
    if (pos < 1 || pos > bits_.size() + 1)
        throw invalid_argument("BitWord::with_insertion: position out of range");
    BitWord out = *this;
    out.bits_.insert(out.bits_.begin() + static_cast<std::ptrdiff_t>(pos - 1),
                     static_cast<std::uint8_t>(v & 1));
    return out;
}

std::uint64_t BitWord::to_index() const {
    if (bits_.size() > 64) throw invalid_argument("BitWord::to_index: word too long");
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
}

std::string BitWord::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

int parity(const BitWord& x) {
    int p = 0;
    for (auto b : x.raw()) p ^= b;
    return p;
}

BitWord derivative(const BitWord& x) {
    if (x.size() < 2) throw invalid_argument("derivative: word length must be >= 2");
    std::vector<std::uint8_t> v(x.size() - 1);
    const auto& bits = x.raw();
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) v[i] = bits[i] ^ bits[i + 1];
    return BitWord(std::move(v));
}

BitWord concat(const BitWord& u, const BitWord& v) {
    std::vector<std::uint8_t> out = u.raw();
    out.insert(out.end(), v.raw().begin(), v.raw().end());
    return BitWord(std::move(out));
}

BitWord xor_words(const BitWord& x, const BitWord& y) {
    if (x.size() != y.size()) throw invalid_argument("xor_words: length mismatch");
    std::vector<std::uint8_t> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.raw()[i] ^ y.raw()[i];
    return BitWord(std::move(out));
}

BitWord complement(const BitWord& x) {
    std::vector<std::uint8_t> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.raw()[i] ^ 1u;
    return BitWord(std::move(out));
}

std::size_t hamming_distance(const BitWord& x, const BitWord& y) {
    if (x.size() != y.size()) throw invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x.raw()[i] != y.raw()[i];
    return d;
}

BitWord subword(const BitWord& x, std::size_t i, std::size_t j) {
    if (i < 1 || i > j || j > x.size())
        throw invalid_argument("subword: indices out of range");
    std::vector<std::uint8_t> out(x.raw().begin() + static_cast<std::ptrdiff_t>(i - 1),
                                  x.raw().begin() + static_cast<std::ptrdiff_t>(j));
    return BitWord(std::move(out));
}

BitWord RunDecomposition::reconstruct() const {
    std::vector<std::uint8_t> out;
    for (const auto& r : runs) {
        out.insert(out.end(), r.length, static_cast<std::uint8_t>(r.symbol));
    }
    return BitWord(std::move(out));
}

RunDecomposition runs(const BitWord& x) {
    if (x.empty()) throw invalid_argument("runs: word must be nonempty");
    RunDecomposition d;
    const auto& bits = x.raw();
    std::size_t start = 0;
    for (std::size_t i = 1; i <= bits.size(); ++i) {
        if (i == bits.size() || bits[i] != bits[start]) {
            d.runs.push_back(Run{bits[start], start + 1, i - start});
            start = i;
        }
    }
    return d;
}

CodeMatrix::CodeMatrix(std::vector<BitWord> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw invalid_argument("CodeMatrix: needs at least one row");
    for (const auto& r : rows_) {
        if (r.size() != rows_[0].size())
            throw invalid_argument("CodeMatrix: rows must have equal length");
    }
    if (rows_[0].empty()) throw invalid_argument("CodeMatrix: rows must be nonempty");
}

CodeMatrix CodeMatrix::from_index(std::uint64_t v, std::size_t row_count,
                                  std::size_t col_count) {
    std::vector<BitWord> rows;
    rows.reserve(row_count);
    for (std::size_t i = 0; i < row_count; ++i) {
        std::size_t shift = (row_count - 1 - i) * col_count;
        rows.push_back(BitWord::from_index((v >> shift) & ((1ull << col_count) - 1), col_count));
    }
    return CodeMatrix(std::move(rows));
}

const BitWord& CodeMatrix::row(std::size_t i) const {
    if (i < 1 || i > rows_.size()) throw invalid_argument("CodeMatrix::row: index out of range");
    return rows_[i - 1];
}

std::size_t hamming_distance(const CodeMatrix& a, const CodeMatrix& b) {
    if (a.row_count() != b.row_count() || a.col_count() != b.col_count())
        throw invalid_argument("hamming_distance: shape mismatch");
    std::size_t d = 0;
    for (std::size_t i = 1; i <= a.row_count(); ++i)
        d += hamming_distance(a.row(i), b.row(i));
    return d;
}

ReceivedMatrix::ReceivedMatrix(std::vector<BitWord> rows, std::size_t nominal_length)
    : rows_(std::move(rows)), nominal_length_(nominal_length) {}

const BitWord& ReceivedMatrix::row(std::size_t i) const {
    if (i < 1 || i > rows_.size())
        throw invalid_argument("ReceivedMatrix::row: index out of range");
    return rows_[i - 1];
}

std::string to_text(const CodeMatrix& m) {
    std::string out;
    for (const auto& r : m.rows()) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

std::string to_text(const ReceivedMatrix& m) {
    std::string out;
    for (const auto& r : m.rows()) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

namespace {

std::vector<BitWord> rows_from_text(std::string_view text) {
    std::vector<BitWord> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) break;
        rows.push_back(BitWord::from_string(line));
    }
    if (rows.empty()) throw invalid_argument("matrix text: no rows found");
    return rows;
}

} // namespace

CodeMatrix code_matrix_from_text(std::string_view text) {
    return CodeMatrix(rows_from_text(text));
}

ReceivedMatrix received_matrix_from_text(std::string_view text, std::size_t nominal_length) {
    return ReceivedMatrix(rows_from_text(text), nominal_length);
}

std::string matrix_key(const ReceivedMatrix& m) {
    std::string key;
    for (const auto& r : m.rows()) {
        key += r.to_string();
        key += '|';
    }
    return key;
}

} // namespace sumch
