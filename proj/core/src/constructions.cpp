#include "sumch/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>

namespace sumch {

namespace {

std::size_t ceil_log2(std::size_t n) {
    if (n < 1) throw invalid_argument("ceil_log2: n must be >= 1");
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

void check_enumeration_cap(std::size_t bits, std::uint64_t cap, const char* who) {
    if (bits >= 63 || (1ull << bits) > cap)
        throw resource_limit(std::string(who) + ": enumeration of 2^" + std::to_string(bits) +
                             " matrices exceeds cap " + std::to_string(cap));
}

// Rows of Y padded conceptually; deficits relative to the nominal length.
struct ShortRows {
    std::vector<std::size_t> deficit; // per row
    std::vector<std::size_t> shorter; // 1-based indices of rows with deficit > 0
    std::size_t total = 0;
};

ShortRows classify_rows(const ReceivedMatrix& y) {
    ShortRows s;
    std::size_t n = y.nominal_length();
    for (std::size_t i = 1; i <= y.row_count(); ++i) {
        if (y.row(i).size() > n)
            throw decode_failure("deletion decoder: received row longer than nominal length");
        std::size_t d = n - y.row(i).size();
        s.deficit.push_back(d);
        if (d > 0) s.shorter.push_back(i);
        s.total += d;
    }
    return s;
}

BitWord xor_of_all_but(const std::vector<BitWord>& rows, std::size_t skip /*1-based*/) {
    BitWord acc;
    bool first = true;
    for (std::size_t i = 1; i <= rows.size(); ++i) {
        if (i == skip) continue;
        acc = first ? rows[i - 1] : xor_words(acc, rows[i - 1]);
        first = false;
    }
    return acc;
}

bool columns_even(const std::vector<BitWord>& rows) {
    std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) return false;
    for (std::size_t j = 1; j <= n; ++j) {
        int s = 0;
        for (const auto& r : rows) s ^= r.bit(j);
        if (s) return false;
    }
    return true;
}

// Shared finish of the two-deletion decoders once sigma-style knowledge
// (expected parity per row of X+, SVT parameters for the data rows) exists.
// i1 < i2 are the two rows short by one bit each.
CodeMatrix decode_two_short_rows(const ReceivedMatrix& y, std::size_t i1, std::size_t i2,
                                 const std::vector<int>& expected_parity,
                                 const std::vector<SVTParams>& svt_by_row, std::size_t P,
                                 const std::function<bool(const CodeMatrix&)>& member,
                                 DecodeTrace* trace) {
    std::size_t n = y.nominal_length();
    std::size_t rows = y.row_count();
    std::size_t l = rows - 1;

    // Forward scan: all rows read at j.
    std::size_t j1 = n;
    for (std::size_t j = 1; j + 1 <= n; ++j) {
        int s = 0;
        for (std::size_t r = 1; r <= rows; ++r) s ^= y.row(r).bit(j);
        if (s) {
            j1 = j;
            break;
        }
    }
    // Backward scan: full rows at j, short rows at j-1.
    std::size_t j2 = 1;
    for (std::size_t j = n; j >= 2; --j) {
        int s = 0;
        for (std::size_t r = 1; r <= rows; ++r) {
            std::size_t pos = (r == i1 || r == i2) ? j - 1 : j;
            s ^= y.row(r).bit(pos);
        }
        if (s) {
            j2 = j;
            break;
        }
    }
    if (trace) {
        trace->j1 = j1;
        trace->j2 = j2;
    }

    std::size_t lo = std::min(j1, j2);
    std::size_t hi = std::max(j1, j2);
    bool crossed = j2 < j1;

    if (crossed || j2 - j1 < P) {
        if (trace) trace->path = "svt";
        // Decode the first short data row via its SVT constraint; the other
        // short row then follows from the parity identity.
        std::size_t svt_row = i1 <= l ? i1 : i2;
        const SVTParams& sp = svt_by_row[svt_row - 1];
        // The scans localize the deletion to [lo, hi]: an insertion anywhere
        // inside the deleted bit's run rebuilds the row, and that run always
        // reaches the window, so no widening is needed (or safe: the window
        // must stay within P positions for uniqueness).
        BitWord recovered = svt_decode(y.row(svt_row), sp, {lo, hi});
        std::vector<BitWord> full = y.rows();
        full[svt_row - 1] = recovered;
        std::size_t other = svt_row == i1 ? i2 : i1;
        if (other != rows) {
            full[other - 1] = xor_of_all_but(full, other);
        }
        std::vector<BitWord> data(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(l));
        return CodeMatrix(std::move(data));
    }

    if (trace) trace->path = "unique-insertion";
    // Deleted bit values follow from the expected row parities.
    int v1 = expected_parity[i1 - 1] ^ parity(y.row(i1));
    int v2 = expected_parity[i2 - 1] ^ parity(y.row(i2));
    std::set<CodeMatrix> consistent;
    for (int assign = 0; assign < 2; ++assign) {
        std::size_t p1 = assign == 0 ? j1 : j2;
        std::size_t p2 = assign == 0 ? j2 : j1;
        std::vector<BitWord> full = y.rows();
        full[i1 - 1] = y.row(i1).with_insertion(std::min(p1, y.row(i1).size() + 1), v1);
        full[i2 - 1] = y.row(i2).with_insertion(std::min(p2, y.row(i2).size() + 1), v2);
        if (!columns_even(full)) continue;
        std::vector<BitWord> data(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(l));
        CodeMatrix cand(std::move(data));
        if (member(cand)) consistent.insert(std::move(cand));
    }
    if (consistent.empty())
        throw decode_failure("two-deletion decoder: no consistent reconstruction");
    if (consistent.size() > 1)
        throw ambiguity_error("two-deletion decoder: multiple consistent reconstructions");
    return *consistent.begin();
}

// Common front of the two-deletion decoders; returns the reconstruction for
// the easy row-length cases, or empty when the two-short-rows case applies.
std::optional<CodeMatrix> decode_easy_cases(const ReceivedMatrix& y, const ShortRows& s,
                                            DecodeTrace* trace) {
    std::size_t rows = y.row_count();
    std::size_t l = rows - 1;
    if (s.total > 2)
        throw decode_failure("deletion decoder: more than two deletions");
    if (s.total == 0) {
        if (trace) {
            trace->case_name = "aligned";
            trace->path = "none";
        }
        std::vector<BitWord> data(y.rows().begin(),
                                  y.rows().begin() + static_cast<std::ptrdiff_t>(l));
        return CodeMatrix(std::move(data));
    }
    if (s.shorter.size() == 1) {
        // All deletions in one row: the other rows are intact.
        if (trace) {
            trace->case_name = "single-row";
            trace->path = "xor";
        }
        std::size_t r = s.shorter[0];
        std::vector<BitWord> full = y.rows();
        if (r != rows) full[r - 1] = xor_of_all_but(full, r);
        std::vector<BitWord> data(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(l));
        return CodeMatrix(std::move(data));
    }
    if (s.shorter.size() == 2 && s.deficit[s.shorter[0] - 1] == 1 &&
        s.deficit[s.shorter[1] - 1] == 1) {
        if (trace) trace->case_name = "two-rows";
        return std::nullopt;
    }
    throw decode_failure("deletion decoder: unsupported deletion pattern");
}

} // namespace

Construction1Params Construction1Params::make(std::size_t n, unsigned slack, std::uint64_t c1,
                                              int b1, std::uint64_t c2, int b2) {
    Construction1Params p;
    p.n = n;
    p.slack = slack;
    p.window = ceil_log2(n) + slack + 1;
    p.k = p.window - 1;
    if (p.k >= n)
        throw invalid_argument("Construction1Params: n too small for the window parameter");
    p.svt1 = SVTParams::make(n, p.window, c1, b1);
    p.svt2 = SVTParams::make(n, p.window, c2, b2);
    return p;
}

bool c1_member(const CodeMatrix& x, const Construction1Params& p) {
    if (x.row_count() != 2 || x.col_count() != p.n)
        throw invalid_argument("c1_member: expected a 2 x n matrix");
    return svt_member(x.row(1), p.svt1) && svt_member(x.row(2), p.svt2) && in_P_plus(x, p.k);
}

CodeMatrix c1_decode(const ReceivedMatrix& y, const Construction1Params& p,
                     DecodeTrace* trace) {
    if (y.row_count() != 3 || y.nominal_length() != p.n)
        throw invalid_argument("c1_decode: expected 3 rows at nominal length n");
    ShortRows s = classify_rows(y);
    CodeMatrix out = [&] {
        if (auto easy = decode_easy_cases(y, s, trace)) return *easy;
        std::vector<int> expected_parity{p.svt1.b, p.svt2.b, p.svt1.b ^ p.svt2.b};
        std::vector<SVTParams> svt_by_row{p.svt1, p.svt2};
        return decode_two_short_rows(
            y, s.shorter[0], s.shorter[1], expected_parity, svt_by_row, p.window,
            [&](const CodeMatrix& x) { return c1_member(x, p); }, trace);
    }();
    if (!c1_member(out, p))
        throw decode_failure("c1_decode: reconstruction is not a codeword");
    return out;
}

std::vector<CodeMatrix> c1_enumerate(const Construction1Params& p, std::uint64_t cap) {
    check_enumeration_cap(2 * p.n, cap, "c1_enumerate");
    std::vector<CodeMatrix> out;
    for (std::uint64_t v = 0; v < (1ull << (2 * p.n)); ++v) {
        CodeMatrix x = CodeMatrix::from_index(v, 2, p.n);
        if (c1_member(x, p)) out.push_back(std::move(x));
    }
    return out;
}

CosetSearchResult c1_search_coset(std::size_t n, unsigned slack, std::uint64_t cap) {
    check_enumeration_cap(2 * n, cap, "c1_search_coset");
    std::size_t P = ceil_log2(n) + slack + 1;
    std::size_t k = P - 1;
    if (k >= n) throw invalid_argument("c1_search_coset: n too small for the window parameter");
    // Bucket the misalignment-constrained set by (c1, b1, c2, b2).
    std::vector<std::size_t> bucket(P * 2 * P * 2, 0);
    std::uint64_t total = 0;
    for (std::uint64_t v = 0; v < (1ull << (2 * n)); ++v) {
        CodeMatrix x = CodeMatrix::from_index(v, 2, n);
        if (!in_P_plus(x, k)) continue;
        ++total;
        std::size_t c1 = syndrome(x.row(1), P);
        std::size_t c2 = syndrome(x.row(2), P);
        std::size_t b1 = static_cast<std::size_t>(parity(x.row(1)));
        std::size_t b2 = static_cast<std::size_t>(parity(x.row(2)));
        ++bucket[((c1 * 2 + b1) * P + c2) * 2 + b2];
    }
    CosetSearchResult best;
    best.constrained_total = total;
    std::size_t best_size = 0;
    bool found = false;
    for (std::size_t c1 = 0; c1 < P; ++c1)
        for (std::size_t b1 = 0; b1 < 2; ++b1)
            for (std::size_t c2 = 0; c2 < P; ++c2)
                for (std::size_t b2 = 0; b2 < 2; ++b2) {
                    std::size_t sz = bucket[((c1 * 2 + b1) * P + c2) * 2 + b2];
                    if (!found || sz > best_size) {
                        found = true;
                        best_size = sz;
                        best.params = Construction1Params::make(n, slack, c1, static_cast<int>(b1),
                                                                c2, static_cast<int>(b2));
                    }
                }
    best.size = best_size;
    return best;
}

Construction2Params Construction2Params::make(std::size_t l, std::size_t n, unsigned slack,
                                              FieldElement s0, FieldElement s1) {
    Construction2Params p;
    p.l = l;
    p.n = n;
    p.slack = slack;
    p.window = ceil_log2(n) + slack + 1;
    p.k = p.window - 1;
    if (p.k >= n)
        throw invalid_argument("Construction2Params: n too small for the window parameter");
    p.h = static_cast<unsigned>(ceil_log2(p.window));
    p.mds = MDSCodeParams::make(l, p.h + 1, s0, s1);
    return p;
}

namespace {

std::vector<FieldElement> sigma_vector(const CodeMatrix& x, const Construction2Params& p) {
    std::vector<FieldElement> out;
    out.reserve(p.l);
    for (std::size_t i = 1; i <= p.l; ++i) out.push_back(sigma(x.row(i), p.h));
    return out;
}

SVTParams svt_from_sigma(FieldElement e, const Construction2Params& p) {
    auto [syn, par] = sigma_unpack(e, p.h);
    return SVTParams::make(p.n, p.window, syn, par, 1ull << p.h);
}

} // namespace

bool c2_member(const CodeMatrix& x, const Construction2Params& p) {
    if (x.row_count() != p.l || x.col_count() != p.n)
        throw invalid_argument("c2_member: shape mismatch");
    auto sig = sigma_vector(x, p);
    if (mds_check_sum(sig, p.mds) != p.mds.s0) return false;
    if (mds_check_weighted(sig, p.mds) != p.mds.s1) return false;
    return in_P_plus(x, p.k);
}

CodeMatrix c2_decode(const ReceivedMatrix& y, const Construction2Params& p,
                     DecodeTrace* trace) {
    if (y.row_count() != p.l + 1 || y.nominal_length() != p.n)
        throw invalid_argument("c2_decode: expected l+1 rows at nominal length n");
    ShortRows s = classify_rows(y);
    if (s.shorter.size() > 2) throw invalid_argument("c2_decode: more than two short rows");
    CodeMatrix out = [&] {
        if (auto easy = decode_easy_cases(y, s, trace)) return *easy;
        // Recover the sigma symbols of the short data rows via the erasure code.
        std::vector<std::uint32_t> symbols(p.l, 0);
        for (std::size_t i = 1; i <= p.l; ++i) {
            bool shorter = i == s.shorter[0] || i == s.shorter[1];
            symbols[i - 1] = shorter ? kErasedSymbol : sigma(y.row(i), p.h).coeffs;
        }
        std::vector<FieldElement> sig = mds_erasure_decode(symbols, p.mds);
        std::vector<int> expected_parity;
        std::vector<SVTParams> svt_by_row;
        int parity_row_parity = 0;
        for (std::size_t i = 0; i < p.l; ++i) {
            auto [syn, par] = sigma_unpack(sig[i], p.h);
            (void)syn;
            expected_parity.push_back(par);
            parity_row_parity ^= par;
            svt_by_row.push_back(svt_from_sigma(sig[i], p));
        }
        expected_parity.push_back(parity_row_parity);
        return decode_two_short_rows(
            y, s.shorter[0], s.shorter[1], expected_parity, svt_by_row, p.window,
            [&](const CodeMatrix& x) { return c2_member(x, p); }, trace);
    }();
    if (!c2_member(out, p))
        throw decode_failure("c2_decode: reconstruction is not a codeword");
    return out;
}

std::vector<CodeMatrix> c2_enumerate(const Construction2Params& p, std::uint64_t cap) {
    check_enumeration_cap(p.l * p.n, cap, "c2_enumerate");
    std::vector<CodeMatrix> out;
    for (std::uint64_t v = 0; v < (1ull << (p.l * p.n)); ++v) {
        CodeMatrix x = CodeMatrix::from_index(v, p.l, p.n);
        if (c2_member(x, p)) out.push_back(std::move(x));
    }
    return out;
}

Construction3Params Construction3Params::make(std::size_t n, int b1, int b2) {
    if (n < 1) throw invalid_argument("Construction3Params: n must be >= 1");
    return {n, b1 & 1, b2 & 1};
}

bool c3_member(const CodeMatrix& x, const Construction3Params& p) {
    if (x.row_count() != 2 || x.col_count() != p.n)
        throw invalid_argument("c3_member: expected a 2 x n matrix");
    return parity(x.row(1)) == p.b1 && parity(x.row(2)) == p.b2;
}

namespace {

// Indel half of the single-edit decoders: one row off-length by one.
// expected_parity covers all l+1 rows of X+.
std::optional<CodeMatrix> decode_single_indel(const ReceivedMatrix& y,
                                              const std::vector<int>& expected_parity) {
    std::size_t n = y.nominal_length();
    std::size_t rows = y.row_count();
    std::size_t l = rows - 1;
    std::size_t off_row = 0;
    int direction = 0;
    for (std::size_t i = 1; i <= rows; ++i) {
        std::size_t len = y.row(i).size();
        if (len == n) continue;
        if (off_row != 0 || (len != n - 1 && len != n + 1))
            throw decode_failure("single-edit decoder: unsupported length pattern");
        off_row = i;
        direction = len < n ? -1 : +1;
    }
    if (off_row == 0) return std::nullopt; // substitution branch
    std::vector<BitWord> full = y.rows();
    if (direction < 0) {
        full[off_row - 1] = xor_of_all_but(full, off_row);
    } else {
        // Insertion: the unique run-level removal restoring all column parities.
        std::set<BitWord> candidates;
        for (const auto& run : runs(y.row(off_row)).runs) {
            BitWord cand = y.row(off_row).with_deletion(run.start);
            if (parity(cand) != expected_parity[off_row - 1]) continue;
            std::vector<BitWord> probe = y.rows();
            probe[off_row - 1] = cand;
            if (columns_even(probe)) candidates.insert(std::move(cand));
        }
        if (candidates.empty())
            throw decode_failure("single-edit decoder: no removal restores column parity");
        if (candidates.size() > 1)
            throw ambiguity_error("single-edit decoder: multiple removals restore parity");
        full[off_row - 1] = *candidates.begin();
    }
    std::vector<BitWord> data(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(l));
    return CodeMatrix(std::move(data));
}

std::size_t find_odd_column(const std::vector<BitWord>& rows, std::size_t n) {
    std::size_t odd = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        int s = 0;
        for (const auto& r : rows) s ^= r.bit(j);
        if (s) {
            if (odd != 0)
                throw decode_failure("single-edit decoder: multiple odd-parity columns");
            odd = j;
        }
    }
    return odd;
}

} // namespace

CodeMatrix c3_decode(const ReceivedMatrix& y, const Construction3Params& p) {
    if (y.row_count() != 3 || y.nominal_length() != p.n)
        throw invalid_argument("c3_decode: expected 3 rows at nominal length n");
    std::vector<int> expected_parity{p.b1, p.b2, p.b1 ^ p.b2};
    if (auto indel = decode_single_indel(y, expected_parity)) {
        if (!c3_member(*indel, p))
            throw decode_failure("c3_decode: reconstruction is not a codeword");
        return *indel;
    }
    std::size_t odd = find_odd_column(y.rows(), p.n);
    std::vector<BitWord> full = y.rows();
    if (odd != 0) {
        std::size_t bad_row = 0;
        for (std::size_t i = 1; i <= 3; ++i) {
            if (parity(full[i - 1]) != expected_parity[i - 1]) {
                if (bad_row != 0)
                    throw decode_failure("c3_decode: multiple rows violate parity");
                bad_row = i;
            }
        }
        if (bad_row == 0) throw decode_failure("c3_decode: odd column but no row violation");
        full[bad_row - 1] = full[bad_row - 1].with_flip(odd);
    }
    CodeMatrix out(std::vector<BitWord>{full[0], full[1]});
    if (!c3_member(out, p)) throw decode_failure("c3_decode: reconstruction is not a codeword");
    return out;
}

std::vector<CodeMatrix> c3_enumerate(const Construction3Params& p, std::uint64_t cap) {
    check_enumeration_cap(2 * p.n, cap, "c3_enumerate");
    std::vector<CodeMatrix> out;
    for (std::uint64_t v = 0; v < (1ull << (2 * p.n)); ++v) {
        CodeMatrix x = CodeMatrix::from_index(v, 2, p.n);
        if (c3_member(x, p)) out.push_back(std::move(x));
    }
    return out;
}

Construction4Params Construction4Params::make(std::size_t l, std::size_t n,
                                              std::uint32_t coset_syndrome) {
    if (l < 1 || n < 1) throw invalid_argument("Construction4Params: bad shape");
    Construction4Params p;
    p.l = l;
    p.n = n;
    p.ham = HammingParams::make(l, coset_syndrome);
    return p;
}

bool c4_member(const CodeMatrix& x, const Construction4Params& p) {
    if (x.row_count() != p.l || x.col_count() != p.n)
        throw invalid_argument("c4_member: shape mismatch");
    std::vector<std::uint8_t> b;
    for (std::size_t i = 1; i <= p.l; ++i)
        b.push_back(static_cast<std::uint8_t>(parity(x.row(i))));
    return hamming_member(BitWord(std::move(b)), p.ham);
}

CodeMatrix c4_decode(const ReceivedMatrix& y, const Construction4Params& p) {
    if (y.row_count() != p.l + 1 || y.nominal_length() != p.n)
        throw invalid_argument("c4_decode: expected l+1 rows at nominal length n");
    // Row parities of X+ are not individually pinned; for the indel branch
    // only the off row's parity matters and it is recoverable from the rest.
    std::vector<int> expected_parity(p.l + 1, 0);
    {
        int all = 0;
        std::vector<int> have;
        for (std::size_t i = 1; i <= p.l + 1; ++i) {
            if (y.row(i).size() == p.n) {
                expected_parity[i - 1] = parity(y.row(i));
                all ^= expected_parity[i - 1];
            }
        }
        for (std::size_t i = 1; i <= p.l + 1; ++i) {
            if (y.row(i).size() != p.n) expected_parity[i - 1] = all; // rows XOR to zero
        }
    }
    if (auto indel = decode_single_indel(y, expected_parity)) {
        if (!c4_member(*indel, p))
            throw decode_failure("c4_decode: reconstruction is not a codeword");
        return *indel;
    }
    std::size_t odd = find_odd_column(y.rows(), p.n);
    std::vector<BitWord> full = y.rows();
    if (odd != 0) {
        std::vector<std::uint8_t> b;
        for (std::size_t i = 1; i <= p.l; ++i)
            b.push_back(static_cast<std::uint8_t>(parity(full[i - 1])));
        auto fixed = hamming_decode(BitWord(std::move(b)), p.ham);
        if (fixed.flipped_position) {
            full[*fixed.flipped_position - 1] =
                full[*fixed.flipped_position - 1].with_flip(odd);
        }
        // No flipped position: the substitution hit the parity row.
    }
    std::vector<BitWord> data(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(p.l));
    CodeMatrix out(std::move(data));
    if (!c4_member(out, p)) throw decode_failure("c4_decode: reconstruction is not a codeword");
    return out;
}

std::vector<CodeMatrix> c4_enumerate(const Construction4Params& p, std::uint64_t cap) {
    check_enumeration_cap(p.l * p.n, cap, "c4_enumerate");
    std::vector<CodeMatrix> out;
    for (std::uint64_t v = 0; v < (1ull << (p.l * p.n)); ++v) {
        CodeMatrix x = CodeMatrix::from_index(v, p.l, p.n);
        if (c4_member(x, p)) out.push_back(std::move(x));
    }
    return out;
}

CodeMatrix encode_index(std::uint64_t info, const std::vector<CodeMatrix>& codebook) {
    if (info >= codebook.size())
        throw invalid_argument("encode_index: index " + std::to_string(info) +
                               " out of range, |codebook| = " + std::to_string(codebook.size()));
    return codebook[info];
}

std::uint64_t decode_index(const CodeMatrix& x, const std::vector<CodeMatrix>& codebook) {
    auto it = std::lower_bound(codebook.begin(), codebook.end(), x);
    if (it == codebook.end() || *it != x)
        throw invalid_argument("decode_index: matrix is not in the codebook");
    return static_cast<std::uint64_t>(it - codebook.begin());
}

std::vector<std::vector<ErrorEvent>> distinct_row_deletion_pairs(const SumMatrix& xp) {
    std::vector<std::vector<ErrorEvent>> out;
    std::size_t rows = xp.row_count();
    for (std::size_t r = 1; r <= rows; ++r) {
        for (std::size_t s = r + 1; s <= rows; ++s) {
            for (const auto& ra : runs(xp.row(r)).runs) {
                for (const auto& rb : runs(xp.row(s)).runs) {
                    out.push_back({ErrorEvent{r, ErrorKind::Delete, ra.start, 0},
                                   ErrorEvent{s, ErrorKind::Delete, rb.start, 0}});
                }
            }
        }
    }
    return out;
}

} // namespace sumch
