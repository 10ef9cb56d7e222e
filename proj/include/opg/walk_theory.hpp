#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opg/overlap_graph.hpp"
#include "opg/permutation.hpp"

namespace opg {

namespace detail {
inline void check_walk_k(const Permutation& a, int k) {
    const int n = static_cast<int>(a.size());
    if (k < 2 || k > n - 1)
        throw std::domain_error("walk length k must satisfy 2 <= k <= n-1, got k = " +
                                std::to_string(k) + " with n = " + std::to_string(n));
}
}  // namespace detail

/// The two substring standardizations that govern successor construction:
/// y = pattern of the last n-1 entries, z = pattern of the first n-k+1.
struct OverlapProfile {
    Permutation source;
    int k = 0;
    Permutation y;
    Permutation z;
};

inline OverlapProfile overlap_profile(const Permutation& a, int k) {
    detail::check_walk_k(a, k);
    const std::size_t n = a.size();
    return {a, k, pattern(a, 1, n - 1), pattern(a, 0, n - static_cast<std::size_t>(k) + 1)};
}

/// Membership predicate for closed k-walks: the first n-k and last n-k
/// entries have equal standardizations. Necessary and sufficient.
inline bool closed_walk_condition(const Permutation& a, int k) {
    detail::check_walk_k(a, k);
    const std::size_t n = a.size();
    const std::size_t len = n - static_cast<std::size_t>(k);
    return pattern(a, 0, len) == pattern(a, static_cast<std::size_t>(k), len);
}

/// k = 1 analogue of the condition: first and last n-1 entries match. Holds
/// exactly at the two trivial vertices, which carry the only loops.
inline bool loop_condition(const Permutation& a) {
    const std::size_t n = a.size();
    if (n < 2) throw std::domain_error("loop_condition needs length >= 2");
    return pattern(a, 0, n - 1) == pattern(a, 1, n - 1);
}

/// Construct the successor vertex b of a for a target suffix pattern:
/// st(b_1..b_{n-1}) equals y_a and st(b_k..b_n) equals z_target.
///
/// The last entry of b is placed by rank: below everything when the target
/// pattern ends at its minimum, otherwise just above the entry that the
/// target pins one step below it.
inline Permutation successor_candidate(const Permutation& a, int k, const Permutation& z_target) {
    detail::check_walk_k(a, k);
    const std::size_t n = a.size();
    const std::size_t zlen = n - static_cast<std::size_t>(k) + 1;
    if (z_target.size() != zlen)
        throw std::invalid_argument("successor_candidate: target suffix pattern must have length " +
                                    std::to_string(zlen));
    const Permutation y = pattern(a, 1, n - 1);
    const int z_last = z_target[zlen - 1];
    int insert_rank;
    if (z_last == 1) {
        insert_rank = 1;
    } else {
        const std::size_t ell = z_target.position_of(z_last - 1);  // 0-based, unique
        insert_rank = y[ell + static_cast<std::size_t>(k) - 1] + 1;
    }
    const Permutation b = append_rank(y, insert_rank);
    if (pattern(b, static_cast<std::size_t>(k) - 1, zlen) != z_target)
        throw std::logic_error("successor_candidate: incompatible prefix/suffix patterns for " +
                               to_string(a) + " with target " + to_string(z_target));
    return b;
}

/// A walk: vertices v_1..v_{t+1} joined by edge permutations e_1..e_t.
struct Walk {
    std::vector<Permutation> vertices;
    std::vector<Permutation> edges;

    std::size_t length() const { return edges.size(); }
    bool closed() const {
        return !vertices.empty() && vertices.front() == vertices.back();
    }
};

inline bool walk_is_valid(const Walk& w) {
    if (w.vertices.size() != w.edges.size() + 1 || w.vertices.empty()) return false;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        auto [tail, head] = edge_endpoints(w.edges[i]);
        if (tail != w.vertices[i] || head != w.vertices[i + 1]) return false;
    }
    return true;
}

namespace detail {
/// Smallest-rank edge permutation joining two adjacent vertices.
inline Permutation connecting_edge(const Permutation& a, const Permutation& b) {
    const int n = static_cast<int>(a.size());
    for (int r = n + 1; r >= 1; --r) {  // descending insertion rank = ascending edge rank
        const Permutation e = append_rank(a, r);
        if (pattern(e, 1, static_cast<std::size_t>(n)) == b) return e;
    }
    throw std::logic_error("connecting_edge: no edge from " + to_string(a) + " to " + to_string(b));
}
}  // namespace detail

/// A rotation-equivalence class of closed walks, stored as the
/// lexicographically least rotation of its (vertex rank, edge rank) steps.
class ClosedWalkClass {
public:
    using Step = std::pair<std::uint64_t, std::uint64_t>;

    ClosedWalkClass(int n, std::vector<Step> rooted_steps)
        : n_(n), steps_(std::move(rooted_steps)) {
        if (steps_.empty()) throw std::invalid_argument("ClosedWalkClass: empty step sequence");
        canonicalize();
    }

    static ClosedWalkClass from_walk(const Walk& w) {
        if (!walk_is_valid(w) || !w.closed())
            throw std::invalid_argument("ClosedWalkClass::from_walk: not a valid closed walk");
        const int n = static_cast<int>(w.vertices.front().size());
        std::vector<Step> steps;
        steps.reserve(w.edges.size());
        for (std::size_t i = 0; i < w.edges.size(); ++i)
            steps.emplace_back(rank(w.vertices[i]), rank(w.edges[i]));
        return ClosedWalkClass(n, std::move(steps));
    }

    int n() const { return n_; }
    std::size_t length() const { return steps_.size(); }
    const std::vector<Step>& steps() const { return steps_; }

    std::vector<std::uint64_t> vertex_ranks() const {
        std::vector<std::uint64_t> vs;
        vs.reserve(steps_.size());
        for (const Step& s : steps_) vs.push_back(s.first);
        return vs;
    }

    /// A cycle is a closed walk whose vertices are pairwise distinct.
    bool is_cycle() const {
        auto vs = vertex_ranks();
        std::sort(vs.begin(), vs.end());
        return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    }

    /// Rebuild the explicit walk rooted at the canonical rotation.
    Walk to_walk() const {
        Walk w;
        for (const Step& s : steps_) {
            w.vertices.push_back(unrank(static_cast<std::size_t>(n_), s.first));
            w.edges.push_back(unrank(static_cast<std::size_t>(n_) + 1, s.second));
        }
        w.vertices.push_back(w.vertices.front());
        return w;
    }

    friend bool operator==(const ClosedWalkClass&, const ClosedWalkClass&) = default;
    friend auto operator<=>(const ClosedWalkClass& a, const ClosedWalkClass& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.steps_ <=> b.steps_;
    }

private:
    int n_;
    std::vector<Step> steps_;

    void canonicalize() {
        const std::size_t k = steps_.size();
        std::size_t best = 0;
        for (std::size_t cand = 1; cand < k; ++cand) {
            for (std::size_t i = 0; i < k; ++i) {
                const Step& c = steps_[(cand + i) % k];
                const Step& b = steps_[(best + i) % k];
                if (c < b) {
                    best = cand;
                    break;
                }
                if (b < c) break;
            }
        }
        if (best != 0) {
            std::vector<Step> rotated;
            rotated.reserve(k);
            for (std::size_t i = 0; i < k; ++i) rotated.push_back(steps_[(best + i) % k]);
            steps_ = std::move(rotated);
        }
    }
};

/// The minimal rotation of the bare vertex-rank sequence. Walks listed in
/// running text are usually identified this way, with parallel-edge variants
/// collapsed.
inline std::vector<std::uint64_t> canonical_vertex_sequence(const ClosedWalkClass& c) {
    const auto vs = c.vertex_ranks();
    const std::size_t k = vs.size();
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < k; ++cand) {
        for (std::size_t i = 0; i < k; ++i) {
            const auto cv = vs[(cand + i) % k];
            const auto bv = vs[(best + i) % k];
            if (cv < bv) {
                best = cand;
                break;
            }
            if (bv < cv) break;
        }
    }
    std::vector<std::uint64_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(vs[(best + i) % k]);
    return out;
}

/// Constructive closed k-walk through a. At step t the target suffix pattern
/// widens by one entry, so the walk closes back onto a after k edges.
inline ClosedWalkClass build_closed_walk(const Permutation& a, int k) {
    detail::check_walk_k(a, k);
    if (!closed_walk_condition(a, k))
        throw std::invalid_argument("build_closed_walk: " + to_string(a) +
                                    " admits no closed " + std::to_string(k) + "-walk");
    const std::size_t n = a.size();
    Walk w;
    w.vertices.push_back(a);
    for (int t = 2; t <= k; ++t) {
        const int step_k = k - t + 2;
        const std::size_t target_len = n - static_cast<std::size_t>(k) + t - 1;
        const Permutation target = pattern(a, 0, target_len);
        w.vertices.push_back(successor_candidate(w.vertices.back(), step_k, target));
    }
    w.vertices.push_back(a);
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        w.edges.push_back(detail::connecting_edge(w.vertices[i], w.vertices[i + 1]));
    if (!walk_is_valid(w))
        throw std::logic_error("build_closed_walk: constructed walk failed validation");
    return ClosedWalkClass::from_walk(w);
}

/// Constructive t-walk from a to b, assuming st(a_{t+1}..a_n) = st(b_1..b_{n-t}).
inline Walk build_walk_between(const Permutation& a, const Permutation& b, int t) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("build_walk_between: length mismatch");
    if (t < 1 || static_cast<std::size_t>(t) > n - 1)
        throw std::domain_error("build_walk_between: t must satisfy 1 <= t <= n-1");
    if (pattern(a, static_cast<std::size_t>(t), n - t) != pattern(b, 0, n - t))
        throw std::invalid_argument("build_walk_between: overlap patterns of " + to_string(a) +
                                    " and " + to_string(b) + " do not match for t = " +
                                    std::to_string(t));
    Walk w;
    w.vertices.push_back(a);
    for (int s = 1; s < t; ++s) {
        const int step_k = t - s + 1;
        const std::size_t target_len = n - static_cast<std::size_t>(t) + s;
        const Permutation target = pattern(b, 0, target_len);
        w.vertices.push_back(successor_candidate(w.vertices.back(), step_k, target));
    }
    w.vertices.push_back(b);
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        w.edges.push_back(detail::connecting_edge(w.vertices[i], w.vertices[i + 1]));
    if (!walk_is_valid(w)) throw std::logic_error("build_walk_between: walk failed validation");
    return w;
}

namespace detail {
/// Memoized existence search: is there an exact r-step walk from u to target?
/// Pure graph search over the out-edge lists, used as the oracle side of the
/// membership predicate.
class ReturnReach {
public:
    ReturnReach(const OverlapGraph& g, std::uint64_t target, int max_steps)
        : g_(g), target_(target), max_steps_(max_steps) {
        if (g.materialized()) dense_.assign(g.vertex_count() * (max_steps + 1), -1);
    }

    bool reachable(std::uint64_t u, int r) {
        if (r == 0) return u == target_;
        // memo key: r stays below 32, so (u, r) packs into one word
        if (!dense_.empty()) {
            const std::int8_t cached = dense_[u * (max_steps_ + 1) + r];
            if (cached >= 0) return cached != 0;
        } else if (auto it = sparse_.find(u * 32 + r); it != sparse_.end()) {
            return it->second != 0;
        }
        bool ok = false;
        const int degree = g_.out_degree();
        std::uint64_t heads[OverlapGraph::kMaxN + 2];
        g_.out_heads(u, heads);
        for (int j = 0; j < degree && !ok; ++j) ok = reachable(heads[j], r - 1);
        if (!dense_.empty())
            dense_[u * (max_steps_ + 1) + r] = ok;
        else
            sparse_[u * 32 + r] = ok;
        return ok;
    }

private:
    const OverlapGraph& g_;
    std::uint64_t target_;
    int max_steps_;
    std::vector<std::int8_t> dense_;
    std::unordered_map<std::uint64_t, std::int8_t> sparse_;
};
}  // namespace detail

/// Graph-search membership: does some closed k-walk pass through a?
inline bool in_closed_k_walk(const OverlapGraph& g, const Permutation& a, int k) {
    if (k < 1) throw std::domain_error("in_closed_k_walk: k must be >= 1");
    const std::uint64_t start = rank(a);
    if (k == 1) return g.loops_at(a) > 0;
    detail::ReturnReach reach(g, start, k - 1);
    std::uint64_t heads[OverlapGraph::kMaxN + 2];
    g.out_heads(start, heads);
    for (int j = 0; j < g.out_degree(); ++j)
        if (reach.reachable(heads[j], k - 1)) return true;
    return false;
}

/// Number of distinct second vertices that begin closed k-walks at a,
/// found by exhaustive search from a. Parallel edges widen the branching but
/// distinctness is measured on the second vertex.
inline int branch_count(const OverlapGraph& g, const Permutation& a, int k) {
    detail::check_walk_k(a, k);
    const std::uint64_t start = rank(a);
    detail::ReturnReach reach(g, start, k - 1);
    std::uint64_t heads[OverlapGraph::kMaxN + 2];
    g.out_heads(start, heads);
    std::vector<std::uint64_t> good;
    for (int j = 0; j < g.out_degree(); ++j) {
        const std::uint64_t b = heads[j];
        if (std::find(good.begin(), good.end(), b) != good.end()) continue;
        if (reach.reachable(b, k - 1)) good.push_back(b);
    }
    return static_cast<int>(good.size());
}

// ---------------------------------------------------------------------------
// Branching conditions: pattern tests on (y_a, z_a) that force m distinct
// second vertices.

namespace detail {
/// Low form for a given m: z ends at its minimum and the m-1 smallest values
/// of y sit among its first k-1 positions.
inline bool branching_low_holds(const Permutation& a, int k, int m) {
    const std::size_t n = a.size();
    const Permutation y = pattern(a, 1, n - 1);
    const Permutation z = pattern(a, 0, n - static_cast<std::size_t>(k) + 1);
    if (z[z.size() - 1] != 1) return false;
    for (int v = 1; v <= m - 1; ++v)
        if (y.position_of(v) > static_cast<std::size_t>(k) - 2) return false;
    return true;
}
}  // namespace detail

/// Pattern condition (valid for k < n < 2k) in its low or mirrored high form.
inline bool small_n_branching_holds(const Permutation& a, int k, int m) {
    detail::check_walk_k(a, k);
    if (m < 2 || m > k) return false;
    return detail::branching_low_holds(a, k, m) ||
           detail::branching_low_holds(complement(a), k, m);
}

/// Largest m in 2..k certified by the small-n pattern condition; empty when
/// none qualifies or n >= 2k. The condition is monotone in m.
inline std::optional<int> branching_condition_small_n(const Permutation& a, int k) {
    detail::check_walk_k(a, k);
    const int n = static_cast<int>(a.size());
    if (n >= 2 * k) return std::nullopt;
    for (int m = k; m >= 2; --m)
        if (small_n_branching_holds(a, k, m)) return m;
    return std::nullopt;
}

/// Witness for the general branching condition: positions i, j in the overlap
/// region and ell_1..ell_{m-1} in the free prefix carrying an ascending run
/// of consecutive y-values, pinched by z around its final entry.
/// Indices are reported 1-based.
struct GeneralBranchingWitness {
    int m = 0;
    int i = 0;
    int j = 0;
    std::vector<int> ells;
};

inline std::optional<GeneralBranchingWitness> general_branching_witness(const Permutation& a,
                                                                        int k, int m) {
    detail::check_walk_k(a, k);
    const int n = static_cast<int>(a.size());
    if (m < 2 || m > k) return std::nullopt;
    const Permutation y = pattern(a, 1, static_cast<std::size_t>(n) - 1);
    const Permutation z = pattern(a, 0, static_cast<std::size_t>(n - k) + 1);
    const int z_last = z[z.size() - 1];
    if (z_last - 1 < 1 || z_last + 1 > static_cast<int>(z.size())) return std::nullopt;
    for (int i = k; i <= n - 1; ++i) {  // 1-based position in y
        if (z[static_cast<std::size_t>(i - k)] != z_last - 1) continue;
        const int v = y[static_cast<std::size_t>(i - 1)];
        if (v + m > n - 1) continue;
        GeneralBranchingWitness w;
        w.m = m;
        w.i = i;
        bool ok = true;
        for (int s = 1; s <= m - 1 && ok; ++s) {
            const int pos = static_cast<int>(y.position_of(v + s)) + 1;  // 1-based
            if (pos >= 1 && pos <= k - 1)
                w.ells.push_back(pos);
            else
                ok = false;
        }
        if (!ok) continue;
        const int j = static_cast<int>(y.position_of(v + m)) + 1;
        if (j < k || j > n - 1) continue;
        if (z[static_cast<std::size_t>(j - k)] != z_last + 1) continue;
        w.j = j;
        return w;
    }
    return std::nullopt;
}

inline bool general_branching_holds(const Permutation& a, int k, int m) {
    return general_branching_witness(a, k, m).has_value();
}

/// Largest m in 2..k certified by the general condition, with its witness.
/// Unlike the small-n form this condition is not monotone in m, so every m is
/// tried.
inline std::optional<GeneralBranchingWitness> branching_condition_general_witness(
    const Permutation& a, int k) {
    detail::check_walk_k(a, k);
    for (int m = k; m >= 2; --m)
        if (auto w = general_branching_witness(a, k, m)) return w;
    return std::nullopt;
}

inline std::optional<int> branching_condition_general(const Permutation& a, int k) {
    if (auto w = branching_condition_general_witness(a, k)) return w->m;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exclusion conditions: value placements that rule out membership in any
// closed k-walk.

enum class ForbiddenTag { a, b, c, d };

inline char to_char(ForbiddenTag t) {
    switch (t) {
        case ForbiddenTag::a: return 'a';
        case ForbiddenTag::b: return 'b';
        case ForbiddenTag::c: return 'c';
        case ForbiddenTag::d: return 'd';
    }
    return '?';
}

/// Literal test of one exclusion condition at multiplicity t >= 2.
inline bool forbidden_condition_holds(const Permutation& a, int k, ForbiddenTag which, int t) {
    const int n = static_cast<int>(a.size());
    if (t < 2 || n < t * k + 1) return false;
    const auto value_in = [&](int value, int lo, int hi) {  // positions 1-based inclusive
        const int pos = static_cast<int>(a.position_of(value)) + 1;
        return pos >= lo && pos <= hi;
    };
    const auto none_in_prefix = [&](int value_lo, int value_hi) {
        for (int v = value_lo; v <= value_hi; ++v)
            if (value_in(v, 1, k)) return false;
        return true;
    };
    switch (which) {
        case ForbiddenTag::a:
            return value_in(n - (t - 2), k + 1, n - (t - 1) * k) && none_in_prefix(n - t + 3, n);
        case ForbiddenTag::b:
            return value_in(t - 1, k + 1, n - (t - 1) * k) && none_in_prefix(1, t - 2);
        case ForbiddenTag::c: {
            const int s = std::min(k, n - t * k);
            return value_in(n - (t - 1), 1, s) && none_in_prefix(n - t + 2, n);
        }
        case ForbiddenTag::d: {
            const int s = std::min(k, n - t * k);
            return value_in(t, 1, s) && none_in_prefix(1, t - 1);
        }
    }
    return false;
}

/// First exclusion condition that applies for any feasible multiplicity t,
/// scanned in tag order then ascending t. Empty when none applies.
inline std::optional<ForbiddenTag> forbidden_by_lemma(const Permutation& a, int k) {
    const int n = static_cast<int>(a.size());
    if (k < 1) throw std::domain_error("forbidden_by_lemma: k must be >= 1");
    for (ForbiddenTag tag : {ForbiddenTag::a, ForbiddenTag::b, ForbiddenTag::c, ForbiddenTag::d})
        for (int t = 2; t * k + 1 <= n; ++t)
            if (forbidden_condition_holds(a, k, tag, t)) return tag;
    return std::nullopt;
}

}  // namespace opg
