#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kneser/hypergraph.hpp"

using namespace kneser;

TEST_CASE("KG^2(5,2) is the Petersen graph") {
    auto h = build_kneser(make_ksubsets(5, 2), Partition::singletons(5), 2, 0);
    CHECK(h.vertices.size() == 10);
    CHECK(h.edges.size() == 15);
    // 3-regular
    std::vector<int> deg(10, 0);
    for (const auto& e : h.edges)
        for (int ix : e) ++deg[static_cast<size_t>(ix)];
    for (int d : deg) CHECK(d == 3);
}

TEST_CASE("admissibility restricts the vertex set") {
    auto h = build_kneser(make_ksubsets(4, 2), Partition::parse("1,2|3,4", 4), 2, 0);
    REQUIRE(h.vertices.size() == 4);  // 13,14,23,24
    CHECK(h.vertex_index(Subset::of(4, {1, 2})) == -1);
    CHECK(h.edges.size() == 2);  // 13-24, 14-23
}

TEST_CASE("tilde with s=0 equals plain") {
    auto f = make_ksubsets(6, 2);
    auto p = Partition::parse("1,2,3|4,5,6", 6);
    auto a = build_kneser(f, p, 2, 0, KneserVariant::Plain);
    auto b = build_kneser(f, p, 2, 0, KneserVariant::Tilde);
    CHECK(a.vertices == b.vertices);
    CHECK(a.edges == b.edges);
}

TEST_CASE("tilde vertices contain plain vertices, edges likewise") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 5 + static_cast<int>(rng() % 3);
        int k = 2 + static_cast<int>(rng() % 2);
        int s = static_cast<int>(rng() % 2);
        if (s >= k) s = k - 1;
        auto f = make_ksubsets(n, k);
        auto p = Partition::consecutive_blocks(n, 2);
        auto plain = build_kneser(f, p, 2, s, KneserVariant::Plain);
        auto tilde = build_kneser(f, p, 2, s, KneserVariant::Tilde);
        std::set<word> tv;
        for (const auto& v : tilde.vertices) tv.insert(v.bits());
        for (const auto& v : plain.vertices) CHECK(tv.count(v.bits()));
        // every plain edge maps to a tilde edge (indices differ, compare subsets)
        std::set<std::vector<word>> te;
        for (const auto& e : tilde.edges) {
            std::vector<word> key;
            for (int ix : e) key.push_back(tilde.vertices[static_cast<size_t>(ix)].bits());
            te.insert(key);
        }
        for (const auto& e : plain.edges) {
            std::vector<word> key;
            for (int ix : e) key.push_back(plain.vertices[static_cast<size_t>(ix)].bits());
            CHECK(te.count(key));
        }
    }
}

TEST_CASE("loop risk flag when s reaches member size") {
    auto h = build_kneser(make_ksubsets(4, 2), Partition::singletons(4), 2, 2);
    CHECK(h.meta["loop_risk"].get<bool>());
    CHECK(!h.has_loop());  // set edges never contain literal loops
}

TEST_CASE("s-disjoint with unit weights equals plain kneser edges") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 8; ++iter) {
        int n = 4 + static_cast<int>(rng() % 3);
        auto f = make_ksubsets(n, 2);
        auto p = Partition::singletons(n);
        std::vector<int> ones(static_cast<size_t>(n), 1);
        auto a = build_s_disjoint(f, p, ones, 2);
        auto b = build_kneser(f, p, 2, 0);
        CHECK(a.vertices == b.vertices);
        CHECK(a.edges == b.edges);
    }
}

TEST_CASE("s-disjoint multiset edges per the worked example") {
    // F = {{1},{2}}, S = (2,1), r = 2: edges {A,A} for A={1} and {A,B}
    Family f(2, {Subset::of(2, {1}), Subset::of(2, {2})});
    auto h = build_s_disjoint(f, Partition::singletons(2), {2, 1}, 2);
    REQUIRE(h.vertices.size() == 2);
    REQUIRE(h.edges.size() == 2);
    CHECK(h.edges[0] == std::vector<int>{0, 0});
    CHECK(h.edges[1] == std::vector<int>{0, 1});
    CHECK(h.has_loop());
    CHECK(h.meta["multiset_edges"].get<bool>());
}

TEST_CASE("s-disjoint with no vertices is empty") {
    Family f(3, {});
    auto h = build_s_disjoint(f, Partition::singletons(3), {1, 1, 1}, 2);
    CHECK(h.vertices.empty());
    CHECK(h.edges.empty());
}

TEST_CASE("t-wide induction") {
    auto h = induce_t_wide(5, 2, Partition::singletons(5), 2, 2);
    CHECK(h.vertices.size() == 6);  // non-consecutive pairs
    // brute-force count of disjoint pairs among {13,14,15,24,25,35}
    int expect = 0;
    for (size_t i = 0; i < h.vertices.size(); ++i)
        for (size_t j = i + 1; j < h.vertices.size(); ++j)
            if ((h.vertices[i] & h.vertices[j]).empty_set()) ++expect;
    CHECK(static_cast<int>(h.edges.size()) == expect);

    // t=1 keeps the whole hypergraph for k >= 2
    auto full = build_kneser(make_ksubsets(5, 2), Partition::singletons(5), 2, 0);
    auto t1 = induce_t_wide(5, 2, Partition::singletons(5), 2, 1);
    CHECK(t1.vertices == full.vertices);
    CHECK(t1.edges == full.edges);

    // t=n empties the vertex set
    CHECK(induce_t_wide(5, 2, Partition::singletons(5), 2, 5).vertices.empty());
    CHECK_THROWS_AS(induce_t_wide(5, 2, Partition::singletons(5), 2, 6),
                    std::invalid_argument);
}

TEST_CASE("edge canonical forms are unique") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 6; ++iter) {
        int n = 5 + static_cast<int>(rng() % 3);
        auto h = build_kneser(make_ksubsets(n, 2), Partition::singletons(n),
                              2 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
        std::set<std::vector<int>> seen(h.edges.begin(), h.edges.end());
        CHECK(seen.size() == h.edges.size());
        for (const auto& e : h.edges) CHECK(std::is_sorted(e.begin(), e.end()));
    }
}

TEST_CASE("homomorphism checker") {
    auto h = build_kneser(make_ksubsets(5, 2), Partition::singletons(5), 2, 0);
    VertexMap id;
    for (size_t i = 0; i < h.vertices.size(); ++i) id.assignment.push_back(static_cast<int>(i));
    CHECK(is_homomorphism(id, h, h));

    // collapsing the two endpoints of an edge cannot be a homomorphism
    VertexMap collapse = id;
    collapse.assignment[static_cast<size_t>(h.edges[0][1])] = h.edges[0][0];
    CHECK(!is_homomorphism(collapse, h, h));

    VertexMap partial;
    CHECK_THROWS_AS(is_homomorphism(partial, h, h), std::invalid_argument);
}

TEST_CASE("hypergraph JSON round-trip") {
    auto h = build_kneser(make_ksubsets(5, 2), Partition::parse("1,2|3,4|5", 5), 2, 1);
    auto j = h.to_json();
    auto back = Hypergraph::from_json(j, 5);
    CHECK(back.r == h.r);
    CHECK(back.vertices == h.vertices);
    CHECK(back.edges == h.edges);
}
