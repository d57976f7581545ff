#ifndef SUMCH_BOUNDS_HPP
#define SUMCH_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sumch/bitword.hpp"
#include "sumch/channel.hpp"
#include "sumch/misalign.hpp"

namespace sumch {

/// Clique cover of a confusability graph on 2 x n matrices. Vertices are
/// matrix indices as in CodeMatrix::from_index(v, 2, n). Singletons are kept
/// apart from the size-k cliques; size() counts both.
struct CliqueCover {
    std::size_t n = 0;
    std::size_t k = 0; // block length; 0 for the single-edit cover
    std::vector<std::uint64_t> singletons;
    std::vector<std::vector<std::uint64_t>> cliques;

    std::size_t size() const { return singletons.size() + cliques.size(); }
};

/// Number of distinct unit-type block pairs per position. This is 4k except
/// at k in {1, 2}, where unit vectors and complements coincide.
std::size_t unit_pair_count(std::size_t k);

/// Block-structured cover of the two-deletion confusability graph:
/// singletons for matrices whose every block pair avoids the unit-type set,
/// and one size-k clique per (prefix, suffix, orbit) key.
CliqueCover build_clique_cover_2del(std::size_t n, std::size_t k,
                                    std::uint64_t cap = kDefaultEnumerationCap);

struct CoverCheck {
    bool ok = true;
    std::string detail; // witness description on failure
};

/// Coverage plus pairwise ball intersection inside every non-singleton set.
/// The pairwise check can be skipped where ball enumeration is too large.
CoverCheck verify_clique_cover(const CliqueCover& cover, unsigned t, ErrorType kind,
                               bool check_cliques = true,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// Closed form for |build_clique_cover_2del(n,k)|:
/// T^m + (4^n - T^m)/k with T = 4^k - unit_pair_count(k), m = n/k.
BigInt clique_cover_size_formula(std::size_t n, std::size_t k);

struct BoundReport {
    std::string name;
    BigInt value;
    std::string formula;
    std::string regime;
    double closed_form_hint = 0.0; // display only; all checks use `value`

    std::string to_json() const;
    std::string to_csv_row() const;
};

/// Minimum of the two-deletion cover size over all block lengths dividing n.
BoundReport upper_bound_A_2del(std::size_t n);

/// Partition of F_2^{2 x n} into 2^{2n-2} cliques of four last-column
/// completions; the single-edit analogue of the cover above.
CliqueCover build_clique_cover_edit(std::size_t n,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// floor(2^{nl} / (l+1)), exact.
BigInt sphere_packing_edit_bound(std::size_t l, std::size_t n);

struct ExactCodeResult {
    std::size_t size = 0;
    std::vector<CodeMatrix> codebook; // one maximum code, canonically sorted
};

/// Exact maximum code size by branch-and-bound maximum-independent-set
/// search over the full confusability graph. Tiny instances only.
ExactCodeResult exact_max_code(std::size_t l, std::size_t n, unsigned t, ErrorType kind,
                               std::size_t vertex_cap = 1024,
                               std::uint64_t ball_cap = kDefaultEnumerationCap);

} // namespace sumch

#endif
