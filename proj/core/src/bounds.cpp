#include "sumch/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace sumch {

std::size_t unit_pair_count(std::size_t k) {
    if (k < 1) throw invalid_argument("unit_pair_count: k must be >= 1");
    // At k = 2 the unit vectors and their complements coincide pairwise
    // (10 <-> 01), collapsing the 4k nominal pairs to 4 distinct ones.
    if (k == 2) return 4;
    return 4 * k;
}

namespace {

// Returns (j, b) if the k-bit block (msb-first in an integer) is the j-th
// unit vector (b=0) or its complement (b=1); j = 0 otherwise.
std::pair<std::size_t, int> unit_type(std::uint64_t block, std::size_t k) {
    std::uint64_t mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
    for (std::size_t j = 1; j <= k; ++j) {
        std::uint64_t u = 1ull << (k - j);
        if (block == u) return {j, 0};
        if (block == (u ^ mask)) return {j, 1};
    }
    return {0, 0};
}

} // namespace

CliqueCover build_clique_cover_2del(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (k < 1 || n % k != 0)
        throw invalid_argument("build_clique_cover_2del: k must divide n");
    if (2 * n >= 63 || (1ull << (2 * n)) > cap)
        throw resource_limit("build_clique_cover_2del: 2^" + std::to_string(2 * n) +
                             " vertices exceeds cap " + std::to_string(cap));
    std::size_t m = n / k;
    std::uint64_t rmask = (1ull << n) - 1;
    std::uint64_t kmask = (1ull << k) - 1;
    CliqueCover cover;
    cover.n = n;
    cover.k = k;
    // Clique key: (first offending block index, canonical (b1,b2) of that
    // block pair, prefix and suffix bits of both rows).
    std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
    for (std::uint64_t v = 0; v < (1ull << (2 * n)); ++v) {
        std::uint64_t r1 = (v >> n) & rmask;
        std::uint64_t r2 = v & rmask;
        bool placed = false;
        for (std::size_t i = 1; i <= m && !placed; ++i) {
            std::size_t shift = (m - i) * k;
            std::uint64_t a = (r1 >> shift) & kmask;
            std::uint64_t b = (r2 >> shift) & kmask;
            auto [ja, ba] = unit_type(a, k);
            auto [jb, bb] = unit_type(b, k);
            if (ja == 0 || jb == 0 || ja != jb) continue;
            std::uint64_t ctx1 = r1 & ~(kmask << shift);
            std::uint64_t ctx2 = r2 & ~(kmask << shift);
            // At k = 2 the (b1,b2) labels of one block pair are ambiguous;
            // only b1 xor b2 is orbit-invariant.
            std::uint64_t orbit = (k == 2)
                                      ? static_cast<std::uint64_t>(ba ^ bb)
                                      : static_cast<std::uint64_t>(ba) * 2 + bb;
            std::uint64_t key = ((static_cast<std::uint64_t>(i) * 4 + orbit) << (2 * n)) |
                                (ctx1 << n) | ctx2;
            groups[key].push_back(v);
            placed = true;
        }
        if (!placed) cover.singletons.push_back(v);
    }
    for (auto& [key, members] : groups) {
        (void)key;
        cover.cliques.push_back(std::move(members));
    }
    return cover;
}

CoverCheck verify_clique_cover(const CliqueCover& cover, unsigned t, ErrorType kind,
                               bool check_cliques, std::uint64_t cap) {
    std::size_t n = cover.n;
    std::vector<char> seen(1ull << (2 * n), 0);
    for (std::uint64_t v : cover.singletons) seen[v] = 1;
    for (const auto& q : cover.cliques)
        for (std::uint64_t v : q) seen[v] = 1;
    for (std::uint64_t v = 0; v < seen.size(); ++v) {
        if (!seen[v])
            return {false, "vertex " + std::to_string(v) + " is uncovered"};
    }
    if (!check_cliques) return {true, ""};
    for (const auto& q : cover.cliques) {
        for (std::size_t a = 0; a < q.size(); ++a) {
            CodeMatrix xa = CodeMatrix::from_index(q[a], 2, n);
            for (std::size_t b = a + 1; b < q.size(); ++b) {
                CodeMatrix xb = CodeMatrix::from_index(q[b], 2, n);
                if (!balls_intersect(xa, xb, t, kind, cap))
                    return {false, "clique pair (" + std::to_string(q[a]) + ", " +
                                       std::to_string(q[b]) + ") is not an edge"};
            }
        }
    }
    return {true, ""};
}

BigInt clique_cover_size_formula(std::size_t n, std::size_t k) {
    if (k < 1 || n % k != 0)
        throw invalid_argument("clique_cover_size_formula: k must divide n");
    std::size_t m = n / k;
    BigInt block_total = BigInt(1) << (2 * k);
    BigInt tilde = block_total - unit_pair_count(k);
    BigInt singles = 1;
    for (std::size_t i = 0; i < m; ++i) singles *= tilde;
    BigInt covered = (BigInt(1) << (2 * n)) - singles;
    if (covered % k != 0)
        throw invalid_argument("clique_cover_size_formula: clique count not integral");
    return singles + covered / k;
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["name"] = name;
    j["value"] = value.str();
    j["formula"] = formula;
    j["regime"] = regime;
    if (closed_form_hint != 0.0) j["closed_form_hint"] = closed_form_hint;
    return j.dump();
}

std::string BoundReport::to_csv_row() const {
    return name + "," + regime + "," + value.str();
}

BoundReport upper_bound_A_2del(std::size_t n) {
    if (n < 1) throw invalid_argument("upper_bound_A_2del: n must be >= 1");
    BoundReport r;
    r.name = "two-deletion clique cover";
    r.formula = "min over k | n of T^{n/k} + (4^n - T^{n/k})/k, T = 4^k - unit pairs";
    bool first = true;
    std::size_t best_k = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        BigInt val = clique_cover_size_formula(n, k);
        if (first || val < r.value) {
            first = false;
            r.value = val;
            best_k = k;
        }
    }
    r.regime = "n=" + std::to_string(n) + ", k=" + std::to_string(best_k);
    if (n >= 2)
        r.closed_form_hint = std::pow(4.0, static_cast<double>(n)) * 12.0 /
                             std::log2(static_cast<double>(n));
    return r;
}

CliqueCover build_clique_cover_edit(std::size_t n, std::uint64_t cap) {
    if (n < 1) throw invalid_argument("build_clique_cover_edit: n must be >= 1");
    if (2 * n >= 63 || (1ull << (2 * n)) > cap)
        throw resource_limit("build_clique_cover_edit: 2^" + std::to_string(2 * n) +
                             " vertices exceeds cap " + std::to_string(cap));
    CliqueCover cover;
    cover.n = n;
    cover.k = 0;
    for (std::uint64_t p = 0; p < (1ull << (2 * (n - 1))); ++p) {
        std::uint64_t p1 = p >> (n - 1);
        std::uint64_t p2 = p & ((1ull << (n - 1)) - 1);
        std::vector<std::uint64_t> q;
        for (std::uint64_t last = 0; last < 4; ++last) {
            std::uint64_t r1 = (p1 << 1) | (last >> 1);
            std::uint64_t r2 = (p2 << 1) | (last & 1);
            q.push_back((r1 << n) | r2);
        }
        cover.cliques.push_back(std::move(q));
    }
    return cover;
}

BigInt sphere_packing_edit_bound(std::size_t l, std::size_t n) {
    if (l < 1 || n < 1) throw invalid_argument("sphere_packing_edit_bound: bad shape");
    return (BigInt(1) << (n * l)) / (l + 1);
}

namespace {

// Max-clique search with greedy coloring bound over a bitset adjacency;
// used on the complement graph to find a maximum independent set.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(std::vector<std::vector<std::uint64_t>> adj, std::size_t n)
        : adj_(std::move(adj)), n_(n) {}

    std::vector<std::size_t> solve() {
        std::vector<std::size_t> all(n_);
        for (std::size_t i = 0; i < n_; ++i) all[i] = i;
        expand(all);
        return best_;
    }

private:
    bool adjacent(std::size_t a, std::size_t b) const {
        return (adj_[a][b >> 6] >> (b & 63)) & 1;
    }

    void expand(const std::vector<std::size_t>& candidates) {
        if (candidates.empty()) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        // Greedy coloring: same-color vertices are pairwise non-adjacent, so
        // a clique takes at most one per color class.
        std::vector<std::size_t> order;
        std::vector<std::size_t> color_of;
        std::vector<char> colored(candidates.size(), 0);
        std::size_t remaining = candidates.size();
        std::size_t color = 0;
        while (remaining > 0) {
            ++color;
            std::vector<std::size_t> cls;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (colored[i]) continue;
                bool ok = true;
                for (std::size_t u : cls) {
                    if (adjacent(candidates[i], u)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    colored[i] = 1;
                    --remaining;
                    cls.push_back(candidates[i]);
                    order.push_back(candidates[i]);
                    color_of.push_back(color);
                }
            }
        }
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (cur_.size() + color_of[idx] <= best_.size()) return;
            std::size_t v = order[idx];
            cur_.push_back(v);
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < idx; ++j) {
                if (adjacent(v, order[j])) next.push_back(order[j]);
            }
            expand(next);
            cur_.pop_back();
        }
    }

    std::vector<std::vector<std::uint64_t>> adj_;
    std::size_t n_;
    std::vector<std::size_t> cur_;
    std::vector<std::size_t> best_;
};

} // namespace

ExactCodeResult exact_max_code(std::size_t l, std::size_t n, unsigned t, ErrorType kind,
                               std::size_t vertex_cap, std::uint64_t ball_cap) {
    std::size_t bits = l * n;
    if (bits >= 63 || (1ull << bits) > vertex_cap)
        throw resource_limit("exact_max_code: 2^" + std::to_string(bits) +
                             " vertices exceeds cap " + std::to_string(vertex_cap));
    std::size_t count = 1ull << bits;
    std::size_t words = (count + 63) / 64;
    // Two balls intersect iff they share an output key.
    std::vector<std::vector<std::uint64_t>> confusable(count,
                                                       std::vector<std::uint64_t>(words, 0));
    std::unordered_map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t v = 0; v < count; ++v) {
        CodeMatrix x = CodeMatrix::from_index(v, l, n);
        for (auto& key : error_ball_keys(x, t, kind, ball_cap))
            by_key[std::move(key)].push_back(v);
    }
    for (const auto& [key, verts] : by_key) {
        (void)key;
        for (std::size_t a = 0; a < verts.size(); ++a) {
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                confusable[verts[a]][verts[b] >> 6] |= 1ull << (verts[b] & 63);
                confusable[verts[b]][verts[a] >> 6] |= 1ull << (verts[a] & 63);
            }
        }
    }
    // Complement graph (self loops excluded): max clique there is a maximum
    // code here.
    std::vector<std::vector<std::uint64_t>> comp(count, std::vector<std::uint64_t>(words, 0));
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t w = 0; w < words; ++w) comp[a][w] = ~confusable[a][w];
        comp[a][a >> 6] &= ~(1ull << (a & 63));
        if (words > 0) {
            std::size_t tail = count & 63;
            if (tail) comp[a][words - 1] &= (1ull << tail) - 1;
        }
    }
    MaxCliqueSolver solver(std::move(comp), count);
    std::vector<std::size_t> best = solver.solve();
    std::sort(best.begin(), best.end());
    ExactCodeResult r;
    r.size = best.size();
    for (std::size_t v : best) r.codebook.push_back(CodeMatrix::from_index(v, l, n));
    return r;
}

} // namespace sumch
