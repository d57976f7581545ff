#ifndef SUMCH_MISALIGN_HPP
#define SUMCH_MISALIGN_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumch/bitword.hpp"
#include "sumch/channel.hpp"

namespace sumch {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Membership in the misalignment set L(n,k): no length-k derivative window
/// of a coincides with a window of b at the same start or shifted by one.
/// Shifted windows falling outside [1, n-1] are skipped.
bool in_L(const BitWord& a, const BitWord& b, std::size_t k);

/// Global misalignment: in_L holds for every pair of distinct rows of the
/// sum matrix of X (parity row included).
bool in_P_plus(const CodeMatrix& x, std::size_t k);

/// Exact |L(n,k)| by enumeration over all 2^{2n} pairs.
std::uint64_t count_L(std::size_t n, std::size_t k, std::size_t n_cap = 11);

/// Exact count of l x n matrices satisfying in_P_plus.
std::uint64_t count_P_plus(std::size_t l, std::size_t n, std::size_t k,
                           std::uint64_t bit_cap = 24);

/// 2^{2n} (1 - 3(n-k)/2^k), exact; may be nonpositive (vacuous).
BigRational lower_bound_L(std::size_t n, std::size_t k);

/// 2^{nl} (1 - 3(n-k)/2^k)^{C(l+1,2)}, exact.
BigRational lower_bound_P_plus(std::size_t l, std::size_t n, std::size_t k);

/// The shift-ambiguity relation of one-offset window sums:
/// (v1 o w1) + (w2 o v2) == (w1 o v1) + (v2 o w2).
bool shift_ambiguous(const BitWord& w1, const BitWord& w2, int v1, int v2);

} // namespace sumch

#endif
