#include "sumch/gf2m.hpp"

#include <array>

namespace sumch {

namespace {

// Minimal-weight irreducible polynomials over F_2, degree 1..16.
// Entry d holds the bitmask of the degree-d modulus including the x^d term.
constexpr std::array<std::uint32_t, 17> kModuli = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

// Carry-less product of two polynomials over F_2.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1u) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return acc;
}

// Remainder of poly a modulo poly mod (mod has degree deg).
std::uint32_t polymod(std::uint64_t a, std::uint32_t mod, unsigned deg) {
    for (int bit = 63; bit >= static_cast<int>(deg); --bit) {
        if (a & (1ull << bit)) a ^= static_cast<std::uint64_t>(mod) << (bit - deg);
    }
    return static_cast<std::uint32_t>(a);
}

unsigned poly_degree(std::uint64_t p) {
    unsigned d = 0;
    while (p > 1) {
        p >>= 1;
        ++d;
    }
    return d;
}

} // namespace

std::string to_hex(FieldElement a) {
    if (a.coeffs == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::uint32_t v = a.coeffs; v; v >>= 4) out.insert(out.begin(), digits[v & 0xF]);
    return out;
}

GaloisField::GaloisField(unsigned degree) : m_(degree) {
    if (degree < 1 || degree > 16)
        throw invalid_argument("GaloisField: degree must be in [1,16]");
    poly_ = kModuli[degree];
}

FieldElement GaloisField::element(std::uint32_t coeffs) const {
    if (coeffs >= order()) throw invalid_argument("GaloisField::element: value out of range");
    return {coeffs};
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
    return {polymod(clmul(a.coeffs, b.coeffs), poly_, m_)};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
    FieldElement acc = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement GaloisField::inv(FieldElement a) const {
    if (a.coeffs == 0) throw invalid_argument("GaloisField::inv: zero has no inverse");
    return pow(a, order() - 2);
}

FieldElement GaloisField::generator() const {
    std::uint32_t group_order = order() - 1;
    if (group_order == 1) return one(); // GF(2): the trivial group
    for (std::uint32_t g = 2; g < order(); ++g) {
        FieldElement e{g};
        // g generates iff its order is exactly 2^m - 1: check proper divisors
        // via prime factors of the group order.
        bool ok = true;
        std::uint32_t n = group_order;
        for (std::uint32_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                if (pow(e, group_order / p) == one()) {
                    ok = false;
                    break;
                }
                while (n % p == 0) n /= p;
            }
        }
        if (ok && n > 1 && pow(e, group_order / n) == one()) ok = false;
        if (ok) return e;
    }
    throw invalid_argument("GaloisField::generator: none found (modulus not primitive?)");
}

bool GaloisField::modulus_is_irreducible() const {
    // Trial division by every polynomial of degree 1..m/2.
    for (unsigned d = 1; d <= m_ / 2; ++d) {
        for (std::uint32_t low = 0; low < (1u << d); ++low) {
            std::uint64_t divisor = (1ull << d) | low;
            // Long division of poly_ by divisor; zero remainder means reducible.
            std::uint64_t rem = poly_;
            while (rem && poly_degree(rem) >= d) {
                rem ^= divisor << (poly_degree(rem) - d);
            }
            if (rem == 0) return false;
        }
    }
    return true;
}

} // namespace sumch
