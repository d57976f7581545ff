#ifndef SUMCH_GF2M_HPP
#define SUMCH_GF2M_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sumch/errors.hpp"

namespace sumch {

/// Element of GF(2^m), stored as its coefficient bits (low bit = constant
/// term). Arithmetic lives in GaloisField; this is a plain value.
struct FieldElement {
    std::uint32_t coeffs = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Hex form of the coefficient bits, e.g. GF(16) element x^3+1 -> "9".
std::string to_hex(FieldElement a);

/// GF(2^m) under a fixed minimal-weight irreducible polynomial, 1 <= m <= 16.
class GaloisField {
public:
    explicit GaloisField(unsigned degree);

    unsigned degree() const { return m_; }
    std::uint32_t order() const { return 1u << m_; }
    /// Modulus including the x^m term, as a bitmask.
    std::uint32_t modulus() const { return poly_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement element(std::uint32_t coeffs) const;

    FieldElement add(FieldElement a, FieldElement b) const { return {a.coeffs ^ b.coeffs}; }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// Smallest element (by coefficient value) generating the multiplicative group.
    FieldElement generator() const;

    /// True iff the stored modulus has no factor of degree in [1, m/2].
    bool modulus_is_irreducible() const;

private:
    unsigned m_;
    std::uint32_t poly_;
};

} // namespace sumch

#endif
