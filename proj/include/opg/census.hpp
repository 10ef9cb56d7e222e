#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "opg/overlap_graph.hpp"
#include "opg/parallel.hpp"
#include "opg/permutation.hpp"
#include "opg/walk_theory.hpp"

namespace opg {

namespace detail {

constexpr int kMaxWalkLength = 16;
constexpr std::uint64_t kScanChunk = 1 << 12;

inline void check_cycle_k(int k) {
    if (k < 1 || k > kMaxWalkLength)
        throw std::domain_error("cycle length must be in 1.." + std::to_string(kMaxWalkLength));
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow");
    return r;
}

/// Batches expansion counts into a shared meter so deep searches stop soon
/// after a budget breach instead of at the end.
class MeterBatch {
public:
    explicit MeterBatch(ExpansionMeter& meter) : meter_(meter) {}
    ~MeterBatch() {
        try {
            flush();
        } catch (...) {  // budget breach at scope exit; the primary error wins
        }
    }
    void tick() {
        if (++local_ >= 4096) flush();
    }
    void flush() {
        const std::uint64_t amount = local_;
        local_ = 0;
        meter_.charge(amount);
    }

private:
    ExpansionMeter& meter_;
    std::uint64_t local_ = 0;
};

/// DFS over all k-cycles whose least-rank vertex is `start`: intermediate
/// vertices keep ranks strictly above the start and stay pairwise distinct,
/// parallel edges branch separately. Emitted step sequences are already the
/// canonical rotation of their class.
template <class Sink>
void cycles_from_start(const OverlapGraph& g, int k, std::uint64_t start, MeterBatch& meter,
                       Sink&& sink) {
    const int degree = g.out_degree();
    std::uint64_t verts[kMaxWalkLength + 1];
    std::uint64_t edges[kMaxWalkLength + 1];
    verts[0] = start;
    auto descend = [&](auto&& self, int depth) -> void {
        meter.tick();
        const std::uint64_t v = verts[depth];
        for (int j = 0; j < degree; ++j) {
            const auto oe = g.out_edge(v, j);
            if (depth == k - 1) {
                if (oe.head == start) {
                    edges[depth] = oe.edge;
                    sink(verts, edges);
                }
                continue;
            }
            if (oe.head <= start) continue;
            bool seen = false;
            for (int d = 1; d <= depth && !seen; ++d) seen = verts[d] == oe.head;
            if (seen) continue;
            verts[depth + 1] = oe.head;
            edges[depth] = oe.edge;
            self(self, depth + 1);
        }
    };
    descend(descend, 0);
}

/// DFS over all rooted closed k-walks starting at `start`; vertices may
/// repeat.
template <class Sink>
void closed_walks_from_start(const OverlapGraph& g, int k, std::uint64_t start, MeterBatch& meter,
                             Sink&& sink) {
    const int degree = g.out_degree();
    std::uint64_t verts[kMaxWalkLength + 1];
    std::uint64_t edges[kMaxWalkLength + 1];
    verts[0] = start;
    auto descend = [&](auto&& self, int depth) -> void {
        meter.tick();
        const std::uint64_t v = verts[depth];
        for (int j = 0; j < degree; ++j) {
            const auto oe = g.out_edge(v, j);
            if (depth == k - 1) {
                if (oe.head == start) {
                    edges[depth] = oe.edge;
                    sink(verts, edges);
                }
                continue;
            }
            verts[depth + 1] = oe.head;
            edges[depth] = oe.edge;
            self(self, depth + 1);
        }
    };
    descend(descend, 0);
}

}  // namespace detail

/// All k-cycle classes, canonical form, deterministic order (ascending by
/// canonical step sequence). Parallel edges make distinct classes.
inline std::vector<ClosedWalkClass> enumerate_k_cycles(const OverlapGraph& g, int k,
                                                       const RunOptions& opts = {}) {
    detail::check_cycle_k(k);
    ExpansionMeter meter(opts.max_expansions);
    auto chunks = map_chunks<std::vector<ClosedWalkClass>>(
        g.vertex_count(), opts.threads, detail::kScanChunk,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<ClosedWalkClass> found;
            detail::MeterBatch batch(meter);
            for (std::uint64_t s = begin; s < end; ++s)
                detail::cycles_from_start(g, k, s, batch,
                                          [&](const std::uint64_t* vs, const std::uint64_t* es) {
                                              std::vector<ClosedWalkClass::Step> steps;
                                              steps.reserve(k);
                                              for (int i = 0; i < k; ++i)
                                                  steps.emplace_back(vs[i], es[i]);
                                              found.emplace_back(g.n(), std::move(steps));
                                          });
            batch.flush();
            return found;
        });
    std::vector<ClosedWalkClass> all;
    for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
    return all;
}

/// Number of k-cycle classes, without materializing them.
inline std::uint64_t count_k_cycles(const OverlapGraph& g, int k, const RunOptions& opts = {}) {
    detail::check_cycle_k(k);
    ExpansionMeter meter(opts.max_expansions);
    auto chunks = map_chunks<std::uint64_t>(
        g.vertex_count(), opts.threads, detail::kScanChunk,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t count = 0;
            detail::MeterBatch batch(meter);
            for (std::uint64_t s = begin; s < end; ++s)
                detail::cycles_from_start(
                    g, k, s, batch, [&](const std::uint64_t*, const std::uint64_t*) { ++count; });
            batch.flush();
            return count;
        });
    std::uint64_t total = 0;
    for (std::uint64_t c : chunks) total = detail::checked_add(total, c);
    return total;
}

/// Membership flags: flags[v] = 1 iff vertex rank v lies on some k-cycle.
inline std::vector<std::uint8_t> vertices_in_k_cycles(const OverlapGraph& g, int k,
                                                      const RunOptions& opts = {}) {
    detail::check_cycle_k(k);
    ExpansionMeter meter(opts.max_expansions);
    auto chunks = map_chunks<std::vector<std::uint8_t>>(
        g.vertex_count(), opts.threads, detail::kScanChunk,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<std::uint8_t> flags(g.vertex_count(), 0);
            detail::MeterBatch batch(meter);
            for (std::uint64_t s = begin; s < end; ++s)
                detail::cycles_from_start(g, k, s, batch,
                                          [&](const std::uint64_t* vs, const std::uint64_t*) {
                                              for (int i = 0; i < k; ++i) flags[vs[i]] = 1;
                                          });
            batch.flush();
            return flags;
        });
    std::vector<std::uint8_t> flags(g.vertex_count(), 0);
    for (const auto& c : chunks)
        for (std::size_t i = 0; i < flags.size(); ++i) flags[i] |= c[i];
    return flags;
}

/// Number of vertices contained in some k-cycle.
inline std::uint64_t v_count(const OverlapGraph& g, int k, const RunOptions& opts = {}) {
    const auto flags = vertices_in_k_cycles(g, k, opts);
    std::uint64_t total = 0;
    for (std::uint8_t f : flags) total += f;
    return total;
}

/// All closed-walk classes of length k containing vertex a (each class once;
/// parallel-edge variants are distinct classes). Ascending canonical order.
inline std::vector<ClosedWalkClass> closed_walks_through(const OverlapGraph& g,
                                                         const Permutation& a, int k,
                                                         const RunOptions& opts = {}) {
    detail::check_cycle_k(k);
    if (static_cast<int>(a.size()) != g.n())
        throw std::invalid_argument("closed_walks_through: vertex length mismatch");
    ExpansionMeter meter(opts.max_expansions);
    detail::MeterBatch batch(meter);
    std::set<ClosedWalkClass> classes;
    detail::closed_walks_from_start(g, k, rank(a), batch,
                                    [&](const std::uint64_t* vs, const std::uint64_t* es) {
                                        std::vector<ClosedWalkClass::Step> steps;
                                        steps.reserve(k);
                                        for (int i = 0; i < k; ++i)
                                            steps.emplace_back(vs[i], es[i]);
                                        classes.emplace(g.n(), std::move(steps));
                                    });
    batch.flush();
    return {classes.begin(), classes.end()};
}

/// Direct closed-walk class enumeration over the whole graph: collect rooted
/// walks from every start, canonicalize, dedupe. Exact but k-fold redundant;
/// meant for cross-checking the orbit-count formula on small graphs.
inline std::vector<ClosedWalkClass> enumerate_closed_walk_classes(const OverlapGraph& g, int k,
                                                                  const RunOptions& opts = {}) {
    detail::check_cycle_k(k);
    ExpansionMeter meter(opts.max_expansions);
    auto chunks = map_chunks<std::set<ClosedWalkClass>>(
        g.vertex_count(), opts.threads, detail::kScanChunk,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::set<ClosedWalkClass> classes;
            detail::MeterBatch batch(meter);
            for (std::uint64_t s = begin; s < end; ++s)
                detail::closed_walks_from_start(
                    g, k, s, batch, [&](const std::uint64_t* vs, const std::uint64_t* es) {
                        std::vector<ClosedWalkClass::Step> steps;
                        steps.reserve(k);
                        for (int i = 0; i < k; ++i) steps.emplace_back(vs[i], es[i]);
                        classes.emplace(g.n(), std::move(steps));
                    });
            batch.flush();
            return classes;
        });
    std::set<ClosedWalkClass> all;
    for (auto& c : chunks) all.merge(c);
    return {all.begin(), all.end()};
}

namespace detail {

/// Rooted closed d-walk counter with per-start memoization of
/// "number of r-step walks from u back to the start".
inline std::uint64_t rooted_closed_walk_count(const OverlapGraph& g, int d,
                                              const RunOptions& opts, ExpansionMeter& meter) {
    const int degree = g.out_degree();
    auto chunks = map_chunks<std::uint64_t>(
        g.vertex_count(), opts.threads, kScanChunk,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t total = 0;
            const bool dense = g.materialized();
            std::vector<std::uint64_t> counts;
            std::vector<std::uint32_t> epoch;
            if (dense) {
                counts.assign(g.vertex_count() * (d + 1), 0);
                epoch.assign(g.vertex_count() * (d + 1), UINT32_MAX);
            }
            std::map<std::uint64_t, std::uint64_t> sparse;
            MeterBatch batch(meter);
            for (std::uint64_t s = begin; s < end; ++s) {
                const std::uint32_t tag = static_cast<std::uint32_t>(s - begin);
                if (!dense) sparse.clear();
                auto walk_count = [&](auto&& self, std::uint64_t u, int r) -> std::uint64_t {
                    if (r == 0) return u == s ? 1 : 0;
                    const std::uint64_t slot = u * (d + 1) + r;
                    if (dense) {
                        if (epoch[slot] == tag) return counts[slot];
                    } else if (auto it = sparse.find(slot); it != sparse.end()) {
                        return it->second;
                    }
                    batch.tick();
                    std::uint64_t heads[OverlapGraph::kMaxN + 2];
                    g.out_heads(u, heads);
                    std::uint64_t c = 0;
                    for (int j = 0; j < degree; ++j)
                        c = checked_add(c, self(self, heads[j], r - 1));
                    if (dense) {
                        epoch[slot] = tag;
                        counts[slot] = c;
                    } else {
                        sparse[slot] = c;
                    }
                    return c;
                };
                total = checked_add(total, walk_count(walk_count, s, d));
            }
            batch.flush();
            return total;
        });
    std::uint64_t total = 0;
    for (std::uint64_t c : chunks) total = checked_add(total, c);
    return total;
}

inline std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace detail

/// Number of rotation classes of closed k-walks, by orbit counting over the
/// k rotations: classes = (1/k) * sum over d | k of phi(k/d) * T(d), where
/// T(d) counts rooted closed d-walks. Must match direct enumeration.
inline std::uint64_t count_closed_walk_classes(const OverlapGraph& g, int k,
                                               const RunOptions& opts = {}) {
    detail::check_cycle_k(k);
    ExpansionMeter meter(opts.max_expansions);
    std::uint64_t sum = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        const std::uint64_t t = detail::rooted_closed_walk_count(g, d, opts, meter);
        sum = detail::checked_add(sum,
                                  detail::checked_mul(detail::euler_phi(
                                                          static_cast<std::uint64_t>(k / d)),
                                                      t));
    }
    if (sum % k != 0)
        throw std::logic_error("count_closed_walk_classes: rotation sum not divisible by k");
    return sum / static_cast<std::uint64_t>(k);
}

// ---------------------------------------------------------------------------
// Vertex-in-walk counts and closed forms.

/// Number of length-n permutations satisfying the closed k-walk condition.
/// Deterministic parallel scan over all n! ranks.
inline std::uint64_t w_count(int n, int k, const RunOptions& opts = {}) {
    if (n < 3 || k < 2 || k > n - 1)
        throw std::domain_error("w_count needs 2 <= k <= n-1");
    auto chunks = map_chunks<std::uint64_t>(
        factorial(static_cast<std::size_t>(n)), opts.threads, detail::kScanChunk,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t count = 0;
            for (std::uint64_t r = begin; r < end; ++r)
                count += closed_walk_condition(unrank(static_cast<std::size_t>(n), r), k);
            return count;
        });
    std::uint64_t total = 0;
    for (std::uint64_t c : chunks) total += c;
    return total;
}

/// Graph-search count of vertices lying in some closed k-walk; covers the
/// lengths the condition predicate does not (k = 1 and k >= n).
inline std::uint64_t w_membership_count(const OverlapGraph& g, int k,
                                        const RunOptions& opts = {}) {
    if (k == 1) {
        std::uint64_t total = 0;
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
            total += loop_condition(g.vertex(v));
        return total;
    }
    auto chunks = map_chunks<std::uint64_t>(
        g.vertex_count(), opts.threads, 1 << 8,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t count = 0;
            for (std::uint64_t v = begin; v < end; ++v)
                count += in_closed_k_walk(g, g.vertex(v), k);
            return count;
        });
    std::uint64_t total = 0;
    for (std::uint64_t c : chunks) total += c;
    return total;
}

/// Closed form n!/(n-k)! for the vertices-in-closed-k-walk count, valid when
/// the leading and trailing condition windows do not overlap (n <= 2k).
inline std::uint64_t w_formula(int n, int k) {
    if (k < 2 || k > n - 1) throw std::domain_error("w_formula needs 2 <= k <= n-1");
    if (n > 2 * k) throw std::domain_error("w_formula needs n <= 2k");
    return factorial(static_cast<std::size_t>(n)) / factorial(static_cast<std::size_t>(n - k));
}

/// Exact integer upper bound on w for odd n > 2k, k >= 3:
/// (n-2)!/(n-k)! * ((2n+1)(n+1)(n-1)/2 + k + (n-5)/2 - 2 - (n-1)*ceil((n-1)/4)).
/// All divisions are exact for odd n.
inline std::uint64_t w_upper_bound(int n, int k) {
    if (k < 3) throw std::domain_error("w_upper_bound needs k >= 3");
    if (n % 2 == 0) throw std::domain_error("w_upper_bound needs odd n");
    if (n <= 2 * k) throw std::domain_error("w_upper_bound needs n > 2k");
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    const std::uint64_t lead =
        factorial(static_cast<std::size_t>(n - 2)) / factorial(static_cast<std::size_t>(n - k));
    const std::uint64_t ceil_q = (nn - 1 + 3) / 4;
    std::uint64_t inner = detail::checked_mul(2 * nn + 1, nn + 1);
    inner = detail::checked_mul(inner, nn - 1) / 2;
    inner = detail::checked_add(inner, static_cast<std::uint64_t>(k) + (nn - 5) / 2);
    const std::uint64_t subtract = 2 + detail::checked_mul(nn - 1, ceil_q);
    if (inner < subtract) throw std::logic_error("w_upper_bound: negative bound");
    return detail::checked_mul(lead, inner - subtract);
}

inline std::uint64_t two_cycle_vertex_formula(int n) {
    if (n < 4) throw std::domain_error("two_cycle_vertex_formula needs n >= 4");
    return 2 * static_cast<std::uint64_t>(n) + 2;
}

inline std::uint64_t two_cycle_count_formula(int n) {
    if (n < 4) throw std::domain_error("two_cycle_count_formula needs n >= 4");
    return static_cast<std::uint64_t>(n) + (n % 2 == 0 ? 2 : 3);
}

inline bool is_prime(int k) {
    if (k < 2) return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

/// For prime k every closed k-walk at a non-trivial vertex is a k-cycle, so
/// only the two trivial vertices drop out of the walk count.
inline std::uint64_t v_prime_formula(int n, int k, std::uint64_t w) {
    if (!is_prime(k)) throw std::domain_error("v_prime_formula needs prime k");
    if (k < 2 || k > n - 1) throw std::domain_error("v_prime_formula needs 2 <= k <= n-1");
    return w - 2;
}

/// The distinguished 2-cycle vertices.
///
/// Even n: `base` interleaves 1..n/2 with n/2+1..n; it and its complement are
/// the only vertices in two distinct 2-cycles, and no 2-cycle uses parallel
/// edges. Odd n: `base` interleaves (n+1)/2..n with 1..(n-1)/2; the double
/// edges base -> cyclic_shift(base) and complement -> cyclic_shift(complement)
/// carry the only parallel-edge 2-cycles.
struct SpecialTwoCycleVertices {
    int n = 0;
    bool even = false;
    Permutation base;
    Permutation base_complement;
};

inline SpecialTwoCycleVertices special_two_cycle_vertices(int n) {
    if (n < 4) throw std::domain_error("special_two_cycle_vertices needs n >= 4");
    std::vector<int> v(static_cast<std::size_t>(n));
    if (n % 2 == 0) {
        for (int i = 1; i <= n / 2; ++i) {
            v[static_cast<std::size_t>(2 * i - 2)] = i;
            v[static_cast<std::size_t>(2 * i - 1)] = n / 2 + i;
        }
    } else {
        for (int i = 1; i <= (n + 1) / 2; ++i)
            v[static_cast<std::size_t>(2 * i - 2)] = (n - 1) / 2 + i;
        for (int i = 1; i <= (n - 1) / 2; ++i) v[static_cast<std::size_t>(2 * i - 1)] = i;
    }
    SpecialTwoCycleVertices out;
    out.n = n;
    out.even = n % 2 == 0;
    out.base = Permutation(std::span<const int>(v.data(), v.size()));
    out.base_complement = complement(out.base);
    return out;
}

/// The set of k in 2..k_max such that some k-cycle passes through a.
inline std::set<int> coexisting_cycle_lengths(const OverlapGraph& g, const Permutation& a,
                                              int k_max, const RunOptions& opts = {}) {
    detail::check_cycle_k(std::max(k_max, 1));
    if (static_cast<int>(a.size()) != g.n())
        throw std::invalid_argument("coexisting_cycle_lengths: vertex length mismatch");
    ExpansionMeter meter(opts.max_expansions);
    detail::MeterBatch batch(meter);
    const std::uint64_t start = rank(a);
    const int degree = g.out_degree();
    std::set<int> lengths;
    for (int k = 2; k <= k_max; ++k) {
        std::uint64_t verts[detail::kMaxWalkLength + 1];
        verts[0] = start;
        bool found = false;
        auto descend = [&](auto&& self, int depth) -> void {
            if (found) return;
            batch.tick();
            const std::uint64_t v = verts[depth];
            for (int j = 0; j < degree && !found; ++j) {
                const auto oe = g.out_edge(v, j);
                if (depth == k - 1) {
                    if (oe.head == start) found = true;
                    continue;
                }
                if (oe.head == start) continue;
                bool seen = false;
                for (int d = 1; d <= depth && !seen; ++d) seen = verts[d] == oe.head;
                if (seen) continue;
                verts[depth + 1] = oe.head;
                self(self, depth + 1);
            }
        };
        descend(descend, 0);
        if (found) lengths.insert(k);
    }
    batch.flush();
    return lengths;
}

}  // namespace opg
