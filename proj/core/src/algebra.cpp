#include "sumch/algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sumch {

std::uint64_t syndrome(const BitWord& x, std::uint64_t q) {
    if (q < 2) throw invalid_argument("syndrome: modulus must be >= 2");
    std::uint64_t s = 0;
    for (std::size_t j = 1; j <= x.size(); ++j) {
        if (x.bit(j)) s = (s + j) % q;
    }
    return s;
}

SVTParams SVTParams::make(std::size_t n, std::size_t window, std::uint64_t c, int b,
                          std::uint64_t modulus) {
    SVTParams p;
    p.n = n;
    p.window = window;
    p.modulus = modulus == 0 ? window : modulus;
    p.c = c;
    p.b = b;
    if (p.modulus < 2) throw invalid_argument("SVTParams: modulus must be >= 2");
    if (p.modulus < p.window) throw invalid_argument("SVTParams: modulus must be >= window");
    if (p.c >= p.modulus) throw invalid_argument("SVTParams: residue out of range");
    return p;
}

bool svt_member(const BitWord& x, const SVTParams& p) {
    if (x.size() != p.n) throw invalid_argument("svt_member: length mismatch");
    return syndrome(x, p.modulus) == p.c && parity(x) == p.b;
}

BitWord svt_decode(const BitWord& y, const SVTParams& p,
                   std::pair<std::size_t, std::size_t> window) {
    if (y.size() + 1 != p.n) throw invalid_argument("svt_decode: |y| must be n-1");
    int v = p.b ^ parity(y);
    std::size_t lo = std::max<std::size_t>(window.first, 1);
    std::size_t hi = std::min<std::size_t>(window.second, p.n);
    if (lo > hi) throw invalid_argument("svt_decode: empty window");
    // Insertions within one run all yield the same word; the set dedupes them.
    std::set<BitWord> candidates;
    for (std::size_t pos = lo; pos <= hi; ++pos) {
        BitWord x = y.with_insertion(pos, v);
        if (syndrome(x, p.modulus) == p.c) candidates.insert(std::move(x));
    }
    if (candidates.empty())
        throw decode_failure("svt_decode: no candidate matches the syndrome");
    if (candidates.size() > 1)
        throw ambiguity_error("svt_decode: multiple candidates match (window too wide "
                              "or modulus too small)");
    return *candidates.begin();
}

FieldElement sigma(const BitWord& x, unsigned h) {
    if (h < 1) throw invalid_argument("sigma: h must be >= 1");
    std::uint64_t syn = syndrome(x, 1ull << h);
    std::uint32_t packed = (static_cast<std::uint32_t>(parity(x)) << h) |
                           static_cast<std::uint32_t>(syn);
    return {packed};
}

std::pair<std::uint64_t, int> sigma_unpack(FieldElement e, unsigned h) {
    std::uint64_t syn = e.coeffs & ((1u << h) - 1);
    int par = (e.coeffs >> h) & 1;
    return {syn, par};
}

MDSCodeParams MDSCodeParams::make(std::size_t length, unsigned field_degree, FieldElement s0,
                                  FieldElement s1) {
    GaloisField f(field_degree);
    if (length > f.order() - 1)
        throw invalid_argument("MDSCodeParams: length exceeds number of nonzero points");
    MDSCodeParams p;
    p.length = length;
    p.field_degree = field_degree;
    p.s0 = s0;
    p.s1 = s1;
    FieldElement g = f.generator();
    FieldElement a = f.one();
    for (std::size_t i = 0; i < length; ++i) {
        p.alpha.push_back(a);
        a = f.mul(a, g);
    }
    return p;
}

FieldElement mds_check_sum(const std::vector<FieldElement>& symbols, const MDSCodeParams& p) {
    GaloisField f(p.field_degree);
    FieldElement s = f.zero();
    for (const auto& x : symbols) s = f.add(s, x);
    return s;
}

FieldElement mds_check_weighted(const std::vector<FieldElement>& symbols,
                                const MDSCodeParams& p) {
    GaloisField f(p.field_degree);
    FieldElement s = f.zero();
    for (std::size_t i = 0; i < symbols.size(); ++i)
        s = f.add(s, f.mul(p.alpha[i], symbols[i]));
    return s;
}

std::vector<FieldElement> mds_erasure_decode(const std::vector<std::uint32_t>& symbols,
                                             const MDSCodeParams& p) {
    if (symbols.size() != p.length)
        throw invalid_argument("mds_erasure_decode: wrong number of symbols");
    GaloisField f(p.field_degree);
    std::vector<std::size_t> erased;
    FieldElement sum = f.zero();
    FieldElement weighted = f.zero();
    std::vector<FieldElement> out(p.length);
    for (std::size_t i = 0; i < p.length; ++i) {
        if (symbols[i] == kErasedSymbol) {
            erased.push_back(i);
        } else {
            out[i] = f.element(symbols[i]);
            sum = f.add(sum, out[i]);
            weighted = f.add(weighted, f.mul(p.alpha[i], out[i]));
        }
    }
    if (erased.size() > 2)
        throw invalid_argument("mds_erasure_decode: more than two erasures");
    FieldElement a = f.add(p.s0, sum);       // u_i + u_j
    FieldElement b = f.add(p.s1, weighted);  // alpha_i u_i + alpha_j u_j
    if (erased.empty()) {
        if (a != f.zero() || b != f.zero())
            throw decode_failure("mds_erasure_decode: checks fail on unerased word");
        return out;
    }
    if (erased.size() == 1) {
        std::size_t i = erased[0];
        out[i] = a;
        if (f.mul(p.alpha[i], a) != b)
            throw decode_failure("mds_erasure_decode: inconsistent single erasure");
        return out;
    }
    std::size_t i = erased[0], j = erased[1];
    FieldElement denom = f.add(p.alpha[i], p.alpha[j]); // nonzero: points distinct
    FieldElement ui = f.mul(f.add(b, f.mul(p.alpha[j], a)), f.inv(denom));
    out[i] = ui;
    out[j] = f.add(a, ui);
    return out;
}

HammingParams HammingParams::make(std::size_t length, std::uint32_t coset_syndrome) {
    if (length < 1) throw invalid_argument("HammingParams: length must be >= 1");
    HammingParams p;
    p.length = length;
    p.r = static_cast<unsigned>(std::bit_width(length)); // ceil(log2(l+1))
    if (coset_syndrome >= (1u << p.r))
        throw invalid_argument("HammingParams: coset syndrome out of range");
    p.coset_syndrome = coset_syndrome;
    return p;
}

std::uint32_t hamming_syndrome(const BitWord& b, const HammingParams& p) {
    if (b.size() != p.length) throw invalid_argument("hamming_syndrome: length mismatch");
    std::uint32_t s = 0;
    for (std::size_t i = 1; i <= p.length; ++i) {
        if (b.bit(i)) s ^= static_cast<std::uint32_t>(i);
    }
    return s;
}

bool hamming_member(const BitWord& b, const HammingParams& p) {
    return hamming_syndrome(b, p) == p.coset_syndrome;
}

HammingDecodeResult hamming_decode(const BitWord& b, const HammingParams& p) {
    std::uint32_t diff = hamming_syndrome(b, p) ^ p.coset_syndrome;
    if (diff == 0) return {b, std::nullopt};
    if (diff >= 1 && diff <= p.length) return {b.with_flip(diff), diff};
    throw decode_failure("hamming_decode: syndrome matches no position");
}

} // namespace sumch
