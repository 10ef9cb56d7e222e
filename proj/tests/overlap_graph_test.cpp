#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "opg/overlap_graph.hpp"

using namespace opg;

TEST_CASE("edge endpoints are the prefix and suffix patterns") {
    auto [tail, head] = edge_endpoints(Permutation{1, 3, 2, 4});
    CHECK(tail == Permutation{1, 3, 2});
    CHECK(head == Permutation{2, 1, 3});

    std::tie(tail, head) = edge_endpoints(Permutation{1, 2, 3, 4});
    CHECK(tail == Permutation{1, 2, 3});
    CHECK(head == Permutation{1, 2, 3});

    std::tie(tail, head) = edge_endpoints(Permutation{3, 1, 4, 2});
    CHECK(tail == Permutation{2, 1, 3});
    CHECK(head == Permutation{1, 3, 2});

    CHECK_THROWS_AS(edge_endpoints(Permutation{1, 2}), std::invalid_argument);
}

TEST_CASE("build sizes") {
    const OverlapGraph g3 = OverlapGraph::build(3);
    CHECK(g3.vertex_count() == 6);
    CHECK(g3.edge_count() == 24);

    const OverlapGraph g2 = OverlapGraph::build(2);
    CHECK(g2.vertex_count() == 2);
    CHECK(g2.edge_count() == 6);

    const OverlapGraph g4 = OverlapGraph::build(4);
    CHECK(g4.vertex_count() == 24);
    CHECK(g4.edge_count() == 120);
    CHECK(g4.out_degree() == 5);

    CHECK_THROWS_AS(OverlapGraph::build(1), std::invalid_argument);
    CHECK_THROWS_AS(OverlapGraph::build(13), std::length_error);
}

TEST_CASE("adjacency is consistent, ordered, and degree-regular") {
    for (int n = 2; n <= 6; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        const int degree = g.out_degree();
        std::vector<std::uint64_t> in_degree(g.vertex_count(), 0);
        std::uint64_t out_edges_total = 0;
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
            const Permutation a = g.vertex(v);
            std::uint64_t prev_edge = 0;
            for (int j = 0; j < degree; ++j) {
                const auto oe = g.out_edge(v, j);
                if (j > 0) REQUIRE(oe.edge > prev_edge);
                prev_edge = oe.edge;
                const auto [tail, head] = edge_endpoints(g.edge_perm(oe.edge));
                REQUIRE(tail == a);
                REQUIRE(rank(head) == oe.head);
                // the adjacency overlap: st of a's suffix equals st of head's prefix
                REQUIRE(pattern(a, 1, a.size() - 1) == pattern(head, 0, head.size() - 1));
                ++in_degree[oe.head];
                ++out_edges_total;
            }
        }
        REQUIRE(out_edges_total == g.edge_count());
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
            REQUIRE(in_degree[v] == static_cast<std::uint64_t>(degree));
    }
}

TEST_CASE("edges between specific vertices of the length-3 graph") {
    const OverlapGraph g = OverlapGraph::build(3);

    const auto parallel = g.edges_between(Permutation{2, 1, 3}, Permutation{1, 3, 2});
    REQUIRE(parallel.size() == 2);
    CHECK(parallel[0] == Permutation{2, 1, 4, 3});
    CHECK(parallel[1] == Permutation{3, 1, 4, 2});

    CHECK(g.edges_between(Permutation{1, 2, 3}, Permutation{1, 3, 2}).size() == 1);
    CHECK(g.edges_between(Permutation{1, 3, 2}, Permutation{1, 2, 3}).empty());
}

TEST_CASE("parallel edges occur exactly toward the cyclic shift") {
    for (int n = 2; n <= 5; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        for (std::uint64_t va = 0; va < g.vertex_count(); ++va) {
            const Permutation a = g.vertex(va);
            const Permutation shifted = cyclic_shift(a);
            for (std::uint64_t vb = 0; vb < g.vertex_count(); ++vb) {
                const Permutation b = g.vertex(vb);
                const std::size_t count = g.edges_between(a, b).size();
                REQUIRE(count <= 2);
                REQUIRE((count == 2) == (b == shifted));
            }
        }
    }
}

TEST_CASE("double edge construction") {
    const auto [lo, hi] = double_edge_pair(Permutation{2, 1, 3});
    CHECK(lo == Permutation{2, 1, 4, 3});
    CHECK(hi == Permutation{3, 1, 4, 2});

    // built from the identity: endpoints must be (123, 231)
    const auto [lo3, hi3] = double_edge_pair(Permutation{1, 2, 3});
    for (const Permutation& e : {lo3, hi3}) {
        const auto [tail, head] = edge_endpoints(e);
        CHECK(tail == Permutation{1, 2, 3});
        CHECK(head == Permutation{2, 3, 1});
    }

    for (std::size_t n = 2; n <= 5; ++n)
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const Permutation a = unrank(n, r);
            const auto [e1, e2] = double_edge_pair(a);
            REQUIRE(e1 != e2);
            for (const Permutation& e : {e1, e2}) {
                const auto [tail, head] = edge_endpoints(e);
                REQUIRE(tail == a);
                REQUIRE(head == cyclic_shift(a));
            }
        }
}

TEST_CASE("loops sit exactly at the trivial vertices") {
    for (int n = 2; n <= 6; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
            const Permutation a = g.vertex(v);
            REQUIRE(g.loops_at(a) == (is_trivial(a) ? 1u : 0u));
        }
    }
}

TEST_CASE("on-demand mode answers like the materialized one") {
    const OverlapGraph eager = OverlapGraph::build(4, true);
    const OverlapGraph lazy = OverlapGraph::build(4, false);
    CHECK(eager.materialized());
    CHECK_FALSE(lazy.materialized());
    for (std::uint64_t v = 0; v < eager.vertex_count(); ++v)
        for (int j = 0; j < eager.out_degree(); ++j) {
            const auto a = eager.out_edge(v, j);
            const auto b = lazy.out_edge(v, j);
            REQUIRE(a.head == b.head);
            REQUIRE(a.edge == b.edge);
        }
    for (std::uint64_t e = 0; e < eager.edge_count(); ++e)
        REQUIRE(eager.endpoints(e) == lazy.endpoints(e));
}
