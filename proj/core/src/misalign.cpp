#include "sumch/misalign.hpp"

namespace sumch {

namespace {

// Derivative of an n-bit word stored msb-first in an integer, masked to n-1 bits.
std::uint64_t deriv_mask(std::uint64_t v, std::size_t n) {
    return (v ^ (v >> 1)) & ((n >= 2 ? (1ull << (n - 1)) : 1ull) - 1);
}

// Length-k window [s, s+k-1] of a derivative of length n-1, msb-first.
std::uint64_t window(std::uint64_t d, std::size_t n, std::size_t k, std::size_t s) {
    return (d >> (n - s - k)) & ((1ull << k) - 1);
}

bool in_L_masks(std::uint64_t da, std::uint64_t db, std::size_t n, std::size_t k) {
    for (std::size_t i = 1; i + k <= n; ++i) {
        std::uint64_t wa = window(da, n, k, i);
        for (int delta = -1; delta <= 1; ++delta) {
            // Shifted windows that leave [1, n-1] are skipped.
            if (delta == -1 && i == 1) continue;
            std::size_t s = i + static_cast<std::size_t>(delta + 1) - 1; // i + delta
            if (s + k - 1 > n - 1) continue;
            if (wa == window(db, n, k, s)) return false;
        }
    }
    return true;
}

} // namespace

bool in_L(const BitWord& a, const BitWord& b, std::size_t k) {
    std::size_t n = a.size();
    if (b.size() != n) throw invalid_argument("in_L: length mismatch");
    if (k < 1 || k >= n) throw invalid_argument("in_L: requires 1 <= k < n");
    if (n > 64) throw invalid_argument("in_L: words longer than 64 unsupported");
    return in_L_masks(deriv_mask(a.to_index(), n), deriv_mask(b.to_index(), n), n, k);
}

bool in_P_plus(const CodeMatrix& x, std::size_t k) {
    SumMatrix xp = sum_matrix(x);
    std::size_t rows = xp.row_count();
    std::size_t n = xp.col_count();
    std::vector<std::uint64_t> d(rows);
    for (std::size_t i = 1; i <= rows; ++i) d[i - 1] = deriv_mask(xp.row(i).to_index(), n);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i + 1; j < rows; ++j) {
            if (!in_L_masks(d[i], d[j], n, k)) return false;
        }
    }
    return true;
}

std::uint64_t count_L(std::size_t n, std::size_t k, std::size_t n_cap) {
    if (n > n_cap)
        throw resource_limit("count_L: n exceeds the exhaustive cap " + std::to_string(n_cap));
    if (k < 1 || k >= n) throw invalid_argument("count_L: requires 1 <= k < n");
    std::uint64_t total = 1ull << n;
    std::vector<std::uint64_t> d(total);
    for (std::uint64_t v = 0; v < total; ++v) d[v] = deriv_mask(v, n);
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = 0; b < total; ++b) {
            if (in_L_masks(d[a], d[b], n, k)) ++count;
        }
    }
    return count;
}

std::uint64_t count_P_plus(std::size_t l, std::size_t n, std::size_t k,
                           std::uint64_t bit_cap) {
    if (l * n > bit_cap)
        throw resource_limit("count_P_plus: l*n exceeds the exhaustive cap " +
                             std::to_string(bit_cap));
    if (k < 1 || k >= n) throw invalid_argument("count_P_plus: requires 1 <= k < n");
    std::uint64_t word_count = 1ull << n;
    std::vector<std::uint64_t> d(word_count);
    for (std::uint64_t v = 0; v < word_count; ++v) d[v] = deriv_mask(v, n);
    std::uint64_t mask = word_count - 1;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> rows(l + 1);
    for (std::uint64_t v = 0; v < (1ull << (l * n)); ++v) {
        std::uint64_t par = 0;
        for (std::size_t i = 0; i < l; ++i) {
            rows[i] = (v >> ((l - 1 - i) * n)) & mask;
            par ^= rows[i];
        }
        rows[l] = par;
        bool ok = true;
        for (std::size_t i = 0; ok && i <= l; ++i) {
            for (std::size_t j = i + 1; ok && j <= l; ++j) {
                if (!in_L_masks(d[rows[i]], d[rows[j]], n, k)) ok = false;
            }
        }
        if (ok) ++count;
    }
    return count;
}

BigRational lower_bound_L(std::size_t n, std::size_t k) {
    BigInt two_k = BigInt(1) << k;
    BigInt num = (BigInt(1) << (2 * n)) * (two_k - 3 * BigInt(n - k));
    return BigRational(num, two_k);
}

BigRational lower_bound_P_plus(std::size_t l, std::size_t n, std::size_t k) {
    BigInt two_k = BigInt(1) << k;
    BigInt base_num = two_k - 3 * BigInt(n - k);
    std::size_t pairs = (l + 1) * l / 2;
    BigInt num = BigInt(1) << (n * l);
    BigInt den = 1;
    for (std::size_t i = 0; i < pairs; ++i) {
        num *= base_num;
        den *= two_k;
    }
    return BigRational(num, den);
}

bool shift_ambiguous(const BitWord& w1, const BitWord& w2, int v1, int v2) {
    if (w1.size() != w2.size()) throw invalid_argument("shift_ambiguous: length mismatch");
    BitWord bv1(std::vector<std::uint8_t>{static_cast<std::uint8_t>(v1 & 1)});
    BitWord bv2(std::vector<std::uint8_t>{static_cast<std::uint8_t>(v2 & 1)});
    BitWord lhs = xor_words(concat(bv1, w1), concat(w2, bv2));
    BitWord rhs = xor_words(concat(w1, bv1), concat(bv2, w2));
    return lhs == rhs;
}

} // namespace sumch
