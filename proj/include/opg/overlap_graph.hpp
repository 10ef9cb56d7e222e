#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opg/permutation.hpp"

namespace opg {

/// Endpoints of an edge permutation e of length n+1: the standardizations of
/// its length-n prefix (tail) and suffix (head).
inline std::pair<Permutation, Permutation> edge_endpoints(const Permutation& e) {
    if (e.size() < 3)
        throw std::invalid_argument("edge_endpoints: edge permutation must have length >= 3");
    const std::size_t n = e.size() - 1;
    return {pattern(e, 0, n), pattern(e, 1, n)};
}

/// The two parallel edges from a to cyclic_shift(a): the first entry of a and
/// its successor value swap between the first and last slot of the edge while
/// the middle keeps a's relative order.
inline std::pair<Permutation, Permutation> double_edge_pair(const Permutation& a) {
    const std::size_t n = a.size();
    std::vector<int> lo(n + 1), hi(n + 1);
    const int a1 = a[0];
    for (std::size_t i = 1; i < n; ++i) {
        const int c = a[i] > a1 ? a[i] + 1 : a[i];
        lo[i] = c;
        hi[i] = c;
    }
    lo[0] = a1;
    lo[n] = a1 + 1;
    hi[0] = a1 + 1;
    hi[n] = a1;
    return {Permutation(std::span<const int>(lo.data(), n + 1)),
            Permutation(std::span<const int>(hi.data(), n + 1))};
}

/// The directed multigraph on the length-n permutations whose edges are the
/// length-(n+1) permutations, each connecting the standardizations of its
/// prefix and suffix.
///
/// Vertices and edges are addressed by their lexicographic ranks. Every vertex
/// has out-degree and in-degree n+1 counted with multiplicity. The graph is
/// immutable once built and safe to share across threads.
///
/// For n <= 8 the adjacency and edge-endpoint tables are materialized; above
/// that the same queries are computed on demand from the permutations, which
/// keeps n = 9..12 usable without a multi-gigabyte edge table.
class OverlapGraph {
public:
    static constexpr int kMaxN = 12;
    static constexpr int kEagerMaxN = 8;

    struct OutEdge {
        std::uint64_t head;  // vertex rank of the head
        std::uint64_t edge;  // edge rank (lexicographic among (n+1)-permutations)
    };

    static OverlapGraph build(int n) { return build(n, n <= kEagerMaxN); }

    static OverlapGraph build(int n, bool materialize) {
        if (n < 2) throw std::invalid_argument("OverlapGraph: n must be >= 2");
        if (n > kMaxN)
            throw std::length_error("OverlapGraph: n = " + std::to_string(n) +
                                    " exceeds the supported cap of " + std::to_string(kMaxN));
        OverlapGraph g;
        g.n_ = n;
        g.vertex_count_ = factorial(static_cast<std::size_t>(n));
        g.edge_count_ = factorial(static_cast<std::size_t>(n) + 1);
        g.materialized_ = materialize;
        if (materialize) {
            if (n > 9)
                throw std::length_error("OverlapGraph: materialized build needs about " +
                                        std::to_string(g.edge_count_ * 12 / (1 << 20)) +
                                        " MiB for n = " + std::to_string(n) +
                                        "; use the on-demand mode");
            const int degree = n + 1;
            g.heads_.resize(g.vertex_count_ * degree);
            g.edge_ranks_.resize(g.vertex_count_ * degree);
            g.tails_by_edge_.resize(g.edge_count_);
            g.heads_by_edge_.resize(g.edge_count_);
            for (std::uint64_t v = 0; v < g.vertex_count_; ++v) {
                const Permutation p = unrank(static_cast<std::size_t>(n), v);
                for (int j = 0; j < degree; ++j) {
                    const OutEdge oe = compute_out_edge(p, v, j);
                    g.heads_[v * degree + j] = static_cast<std::uint32_t>(oe.head);
                    g.edge_ranks_[v * degree + j] = static_cast<std::uint32_t>(oe.edge);
                    g.tails_by_edge_[oe.edge] = static_cast<std::uint32_t>(v);
                    g.heads_by_edge_[oe.edge] = static_cast<std::uint32_t>(oe.head);
                }
            }
        }
        return g;
    }

    int n() const { return n_; }
    std::uint64_t vertex_count() const { return vertex_count_; }
    std::uint64_t edge_count() const { return edge_count_; }
    int out_degree() const { return n_ + 1; }
    bool materialized() const { return materialized_; }

    Permutation vertex(std::uint64_t v) const { return unrank(static_cast<std::size_t>(n_), v); }

    Permutation edge_perm(std::uint64_t e) const {
        return unrank(static_cast<std::size_t>(n_) + 1, e);
    }

    /// j-th out-edge of vertex v, ordered by ascending edge rank.
    OutEdge out_edge(std::uint64_t v, int j) const {
        if (materialized_) {
            const std::size_t base = static_cast<std::size_t>(v) * out_degree();
            return {heads_[base + j], edge_ranks_[base + j]};
        }
        return compute_out_edge(vertex(v), v, j);
    }

    /// Head ranks of all out-edges of v, adjacency order, possibly repeated.
    void out_heads(std::uint64_t v, std::uint64_t* dst) const {
        if (materialized_) {
            const std::size_t base = static_cast<std::size_t>(v) * out_degree();
            for (int j = 0; j < out_degree(); ++j) dst[j] = heads_[base + j];
            return;
        }
        const Permutation p = vertex(v);
        for (int j = 0; j < out_degree(); ++j) dst[j] = compute_out_edge(p, v, j).head;
    }

    std::pair<std::uint64_t, std::uint64_t> endpoints(std::uint64_t e) const {
        if (materialized_) return {tails_by_edge_[e], heads_by_edge_[e]};
        auto [tail, head] = edge_endpoints(edge_perm(e));
        return {rank(tail), rank(head)};
    }

    /// All parallel edges a -> b as edge permutations, ascending edge rank.
    /// There are never more than two, and two only when b = cyclic_shift(a).
    std::vector<Permutation> edges_between(const Permutation& a, const Permutation& b) const {
        check_vertex(a);
        check_vertex(b);
        std::vector<Permutation> found;
        for (int j = 0; j < out_degree(); ++j) {
            // Out-edge with insertion rank r appends a value of relative rank
            // r after a; adjacency slot j holds r = n+1-j so that edge ranks
            // ascend with j.
            const Permutation e = append_rank(a, n_ + 1 - j);
            if (pattern(e, 1, static_cast<std::size_t>(n_)) == b) found.push_back(e);
        }
        return found;
    }

    /// Number of loop edges at a vertex.
    std::size_t loops_at(const Permutation& a) const { return edges_between(a, a).size(); }

private:
    int n_ = 0;
    std::uint64_t vertex_count_ = 0;
    std::uint64_t edge_count_ = 0;
    bool materialized_ = false;
    std::vector<std::uint32_t> heads_;        // vertex_count * (n+1), adjacency order
    std::vector<std::uint32_t> edge_ranks_;   // vertex_count * (n+1), adjacency order
    std::vector<std::uint32_t> tails_by_edge_;
    std::vector<std::uint32_t> heads_by_edge_;

    void check_vertex(const Permutation& p) const {
        if (static_cast<int>(p.size()) != n_)
            throw std::invalid_argument("expected a vertex of length " + std::to_string(n_) +
                                        ", got length " + std::to_string(p.size()));
    }

    static OutEdge compute_out_edge(const Permutation& p, std::uint64_t /*v*/, int j) {
        const int n = static_cast<int>(p.size());
        const Permutation e = append_rank(p, n + 1 - j);
        const Permutation head = pattern(e, 1, static_cast<std::size_t>(n));
        return {rank(head), rank(e)};
    }
};

}  // namespace opg
