#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "opg/census.hpp"
#include "opg/overlap_graph.hpp"
#include "opg/walk_theory.hpp"

using namespace opg;

TEST_CASE("overlap profile") {
    const auto p1 = overlap_profile(parse_permutation("21435"), 4);
    CHECK(p1.y == Permutation{1, 3, 2, 4});
    CHECK(p1.z == Permutation{2, 1});

    const auto p2 = overlap_profile(parse_permutation("14263758"), 6);
    CHECK(p2.y == Permutation{3, 1, 5, 2, 6, 4, 7});
    CHECK(p2.z == Permutation{1, 3, 2});

    const auto p3 = overlap_profile(Permutation::identity(5), 3);
    CHECK(p3.y == Permutation{1, 2, 3, 4});
    CHECK(p3.z == Permutation{1, 2, 3});

    CHECK_THROWS_AS(overlap_profile(Permutation::identity(5), 1), std::domain_error);
    CHECK_THROWS_AS(overlap_profile(Permutation::identity(5), 5), std::domain_error);
}

TEST_CASE("closed walk condition") {
    CHECK(closed_walk_condition(parse_permutation("162534"), 4));
    CHECK(closed_walk_condition(parse_permutation("3615827a49b"), 3));
    CHECK(closed_walk_condition(parse_permutation("132"), 2));
    for (int k = 2; k <= 4; ++k) CHECK(closed_walk_condition(Permutation::identity(5), k));
    CHECK_FALSE(closed_walk_condition(parse_permutation("21534"), 2));
}

TEST_CASE("loop condition holds exactly at the trivial vertices") {
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const Permutation a = unrank(n, r);
            REQUIRE(loop_condition(a) == is_trivial(a));
        }
}

TEST_CASE("successor candidate") {
    // minimum-final target: everything shifts up, the new entry goes below
    CHECK(successor_candidate(parse_permutation("21435"), 4, Permutation{2, 1}) ==
          parse_permutation("24351"));
    // interior target entry: the new entry slots just above its predecessor
    CHECK(successor_candidate(parse_permutation("14263758"), 6, Permutation{1, 3, 2}) ==
          parse_permutation("31627485"));
    // the identity forces itself
    CHECK(successor_candidate(Permutation::identity(5), 3, Permutation{1, 2, 3}) ==
          Permutation::identity(5));

    CHECK_THROWS_AS(successor_candidate(parse_permutation("21435"), 4, Permutation{1, 2, 3}),
                    std::invalid_argument);
    // overlap of y and target disagrees: construction cannot satisfy both
    CHECK_THROWS_AS(successor_candidate(parse_permutation("21435"), 3, Permutation{2, 1, 3}),
                    std::logic_error);
}

TEST_CASE("successor candidate satisfies both pattern constraints whenever compatible") {
    const std::size_t n = 5;
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
        const Permutation a = unrank(n, r);
        for (int k = 2; k <= static_cast<int>(n) - 1; ++k) {
            const std::size_t zlen = n - static_cast<std::size_t>(k) + 1;
            for (std::uint64_t zr = 0; zr < factorial(zlen); ++zr) {
                const Permutation z = unrank(zlen, zr);
                const Permutation y = pattern(a, 1, n - 1);
                const bool compatible =
                    pattern(y, static_cast<std::size_t>(k) - 1, zlen - 1) ==
                    pattern(z, 0, zlen - 1);
                if (!compatible) continue;
                const Permutation b = successor_candidate(a, k, z);
                REQUIRE(pattern(b, 0, n - 1) == y);
                REQUIRE(pattern(b, static_cast<std::size_t>(k) - 1, zlen) == z);
            }
        }
    }
}

TEST_CASE("build_closed_walk reproduces the known walks") {
    const ClosedWalkClass rep = build_closed_walk(parse_permutation("162534"), 4);
    const std::vector<std::uint64_t> expected = {
        rank(parse_permutation("162534")), rank(parse_permutation("615243")),
        rank(parse_permutation("162534")), rank(parse_permutation("615243"))};
    CHECK(rep.vertex_ranks() == expected);
    CHECK_FALSE(rep.is_cycle());

    const ClosedWalkClass loops = build_closed_walk(Permutation::identity(5), 3);
    for (std::uint64_t v : loops.vertex_ranks()) CHECK(v == rank(Permutation::identity(5)));

    CHECK_THROWS_AS(build_closed_walk(parse_permutation("13254"), 3), std::invalid_argument);
}

TEST_CASE("build_closed_walk at 21435 stays within the known walk vertices") {
    const ClosedWalkClass c = build_closed_walk(parse_permutation("21435"), 4);
    const Walk w = c.to_walk();
    CHECK(walk_is_valid(w));
    std::set<Permutation> allowed;
    for (const char* s : {"21435", "13254", "14253", "31425", "14352", "32415", "23154", "24351"})
        allowed.insert(parse_permutation(s));
    for (const Permutation& v : w.vertices) CHECK(allowed.count(v) == 1);
}

TEST_CASE("build_closed_walk validates for every qualifying vertex, n <= 5") {
    for (std::size_t n = 3; n <= 5; ++n)
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const Permutation a = unrank(n, r);
            for (int k = 2; k <= static_cast<int>(n) - 1; ++k) {
                if (!closed_walk_condition(a, k)) continue;
                const ClosedWalkClass c = build_closed_walk(a, k);
                REQUIRE(c.length() == static_cast<std::size_t>(k));
                const Walk w = c.to_walk();
                REQUIRE(walk_is_valid(w));
                REQUIRE(w.closed());
                const auto vs = c.vertex_ranks();
                REQUIRE(std::find(vs.begin(), vs.end(), rank(a)) != vs.end());
            }
        }
}

TEST_CASE("build_walk_between") {
    const Permutation id4 = Permutation::identity(4);
    const Walk loop2 = build_walk_between(id4, id4, 2);
    CHECK(walk_is_valid(loop2));
    CHECK(loop2.vertices == std::vector<Permutation>{id4, id4, id4});

    const Walk single = build_walk_between(Permutation{1, 3, 2}, Permutation{2, 1, 3}, 1);
    CHECK(walk_is_valid(single));
    CHECK(single.edges.size() == 1);

    CHECK_THROWS_AS(build_walk_between(Permutation{1, 3, 2}, Permutation{1, 2, 3}, 1),
                    std::invalid_argument);
}

TEST_CASE("build_walk_between validates on every feasible pair, n = 5") {
    const std::size_t n = 5;
    for (int t = 1; t <= 4; ++t)
        for (std::uint64_t ra = 0; ra < factorial(n); ++ra) {
            const Permutation a = unrank(n, ra);
            for (std::uint64_t rb = 0; rb < factorial(n); ++rb) {
                const Permutation b = unrank(n, rb);
                if (pattern(a, static_cast<std::size_t>(t), n - t) != pattern(b, 0, n - t))
                    continue;
                const Walk w = build_walk_between(a, b, t);
                REQUIRE(walk_is_valid(w));
                REQUIRE(w.vertices.front() == a);
                REQUIRE(w.vertices.back() == b);
                REQUIRE(w.length() == static_cast<std::size_t>(t));
            }
        }
}

TEST_CASE("branch counts at the known vertices") {
    const OverlapGraph g5 = OverlapGraph::build(5);
    CHECK(branch_count(g5, parse_permutation("21435"), 4) == 4);
    const OverlapGraph g4 = OverlapGraph::build(4);
    CHECK(branch_count(g4, Permutation::identity(4), 3) == 1);
}

TEST_CASE("membership search agrees with the window condition, n <= 5") {
    for (int n = 3; n <= 5; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
            const Permutation a = g.vertex(r);
            for (int k = 2; k <= n - 1; ++k)
                REQUIRE(closed_walk_condition(a, k) == in_closed_k_walk(g, a, k));
        }
    }
}

TEST_CASE("second vertices of closed walks carry the source's leading pattern") {
    // Whenever b can be the second vertex of a closed k-walk at a, the tail of
    // b must standardize to z_a.
    for (int n = 4; n <= 6; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        std::uint64_t heads[OverlapGraph::kMaxN + 2];
        for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
            const Permutation a = g.vertex(r);
            for (int k = 2; k <= n - 1; ++k) {
                detail::ReturnReach reach(g, r, k - 1);
                g.out_heads(r, heads);
                const Permutation z = overlap_profile(a, k).z;
                for (int j = 0; j < g.out_degree(); ++j) {
                    if (!reach.reachable(heads[j], k - 1)) continue;
                    const Permutation b = g.vertex(heads[j]);
                    REQUIRE(pattern(b, static_cast<std::size_t>(k) - 1, z.size()) == z);
                }
            }
        }
    }
}

TEST_CASE("complementing every vertex of a closed walk yields a closed walk") {
    for (int n = 4; n <= 5; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        for (int k = 2; k <= n - 1; ++k) {
            const auto classes = enumerate_closed_walk_classes(g, k);
            std::set<ClosedWalkClass> all(classes.begin(), classes.end());
            for (const ClosedWalkClass& c : classes) {
                const Walk w = c.to_walk();
                Walk mapped;
                for (const Permutation& v : w.vertices) mapped.vertices.push_back(complement(v));
                for (const Permutation& e : w.edges) mapped.edges.push_back(complement(e));
                REQUIRE(walk_is_valid(mapped));
                REQUIRE(mapped.closed());
                REQUIRE(all.count(ClosedWalkClass::from_walk(mapped)) == 1);
            }
        }
    }
}

TEST_CASE("small-n branching condition") {
    CHECK(branching_condition_small_n(parse_permutation("21435"), 4) == 4);
    CHECK_FALSE(branching_condition_small_n(Permutation::identity(5), 4).has_value());
    // n >= 2k leaves no room for the pattern
    CHECK_FALSE(branching_condition_small_n(parse_permutation("214365"), 2).has_value());
    CHECK_FALSE(branching_condition_small_n(parse_permutation("162534"), 2).has_value());
}

TEST_CASE("small-n branching is monotone in m") {
    const std::size_t n = 5;
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
        const Permutation a = unrank(n, r);
        for (int k = 3; k <= 4; ++k)
            for (int m = 3; m <= k; ++m)
                if (small_n_branching_holds(a, k, m))
                    REQUIRE(small_n_branching_holds(a, k, m - 1));
    }
}

TEST_CASE("general branching condition") {
    const auto witness = branching_condition_general_witness(parse_permutation("14263758"), 6);
    REQUIRE(witness.has_value());
    CHECK(witness->m == 3);
    CHECK(witness->i == 6);
    CHECK(witness->j == 7);
    CHECK(witness->ells == std::vector<int>{3, 5});

    // distinguished even-n 2-cycle vertex
    CHECK(branching_condition_general(parse_permutation("142536"), 2) == 2);

    for (int k = 2; k <= 5; ++k)
        CHECK_FALSE(branching_condition_general(Permutation::identity(6), k).has_value());
}

TEST_CASE("branching conditions are sound against the search count, n <= 7") {
    for (int n = 4; n <= 7; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
            const Permutation a = g.vertex(r);
            for (int k = 2; k <= n - 1; ++k) {
                if (!closed_walk_condition(a, k)) continue;
                const int count = branch_count(g, a, k);
                if (const auto m = branching_condition_small_n(a, k)) REQUIRE(count >= *m);
                if (const auto m = branching_condition_general(a, k)) REQUIRE(count >= *m);
            }
        }
    }
}

TEST_CASE("multiple branches imply one of the pattern conditions, n <= 7") {
    for (int n = 4; n <= 7; ++n) {
        const OverlapGraph g = OverlapGraph::build(n);
        for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
            const Permutation a = g.vertex(r);
            for (int k = 2; k <= n - 1; ++k) {
                if (!closed_walk_condition(a, k)) continue;
                const int m = branch_count(g, a, k);
                if (m < 2) continue;
                REQUIRE((small_n_branching_holds(a, k, m) || general_branching_holds(a, k, m)));
            }
        }
    }
}

TEST_CASE("exclusion conditions") {
    CHECK(forbidden_by_lemma(parse_permutation("21534"), 2) == ForbiddenTag::a);
    CHECK_FALSE(forbidden_by_lemma(parse_permutation("162534"), 4).has_value());
    CHECK(to_char(ForbiddenTag::c) == 'c');
}

TEST_CASE("excluded vertices never satisfy the walk condition, n <= 6") {
    for (std::size_t n = 5; n <= 6; ++n)
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const Permutation a = unrank(n, r);
            for (int k = 2; k <= static_cast<int>(n) - 1; ++k)
                if (forbidden_by_lemma(a, k)) REQUIRE_FALSE(closed_walk_condition(a, k));
        }
}

TEST_CASE("exclusion conditions pair up under complement, n <= 6") {
    for (std::size_t n = 5; n <= 6; ++n)
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const Permutation a = unrank(n, r);
            const Permutation comp = complement(a);
            for (int k = 2; k <= static_cast<int>(n) - 1; ++k)
                for (int t = 2; t * k + 1 <= static_cast<int>(n); ++t) {
                    REQUIRE(forbidden_condition_holds(a, k, ForbiddenTag::a, t) ==
                            forbidden_condition_holds(comp, k, ForbiddenTag::b, t));
                    REQUIRE(forbidden_condition_holds(a, k, ForbiddenTag::c, t) ==
                            forbidden_condition_holds(comp, k, ForbiddenTag::d, t));
                }
        }
}

TEST_CASE("closed walk classes canonicalize to a fixed point") {
    const OverlapGraph g = OverlapGraph::build(4);
    const auto classes = enumerate_closed_walk_classes(g, 3);
    for (const ClosedWalkClass& c : classes) {
        // re-canonicalizing from any rotation lands on the same steps
        for (std::size_t rot = 0; rot < c.length(); ++rot) {
            std::vector<ClosedWalkClass::Step> rotated;
            for (std::size_t i = 0; i < c.length(); ++i)
                rotated.push_back(c.steps()[(rot + i) % c.length()]);
            REQUIRE(ClosedWalkClass(c.n(), rotated) == c);
        }
    }
}

TEST_CASE("walks and classes expose their structure") {
    const ClosedWalkClass c = build_closed_walk(parse_permutation("132"), 2);
    CHECK(c.length() == 2);
    CHECK(c.is_cycle());
    const Walk w = c.to_walk();
    CHECK(w.length() == 2);
    CHECK(w.closed());
    CHECK(canonical_vertex_sequence(c).size() == 2);
}
