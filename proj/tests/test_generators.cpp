#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <thread>

#include "matchfab/analytic.hpp"
#include "matchfab/generators.hpp"
#include "matchfab/stats.hpp"

using namespace matchfab;

TEST_CASE("fractal base case is the quadrangle with v1, v2 diagonal") {
    const Graph f1 = gen_fractal(1);
    CHECK(f1.vertex_count() == 4);
    CHECK(f1.edge_count() == 4);
    CHECK(f1.degree_multiset() == std::vector<int>{2, 2, 2, 2});
    const int v1 = *f1.hub(HubRole::v1), v2 = *f1.hub(HubRole::v2);
    const int v3 = *f1.hub(HubRole::v3), v4 = *f1.hub(HubRole::v4);
    CHECK(!f1.has_edge(v1, v2));
    CHECK(!f1.has_edge(v3, v4));
    CHECK(f1.has_edge(v1, v3));
    CHECK(f1.family_tag() == FamilyTag::fractal);
}

TEST_CASE("nonfractal base case is the quadrangle with v1, v4 diagonal") {
    const Graph h1 = gen_nonfractal(1);
    const int v1 = *h1.hub(HubRole::v1), v2 = *h1.hub(HubRole::v2);
    const int v3 = *h1.hub(HubRole::v3), v4 = *h1.hub(HubRole::v4);
    CHECK(h1.has_edge(v1, v2));
    CHECK(h1.has_edge(v1, v3));
    CHECK(h1.has_edge(v2, v4));
    CHECK(h1.has_edge(v3, v4));
    CHECK(!h1.has_edge(v1, v4));
    CHECK(!h1.has_edge(v2, v3));
}

TEST_CASE("fractal g=2 shape") {
    const Graph f2 = gen_fractal(2);
    CHECK(f2.vertex_count() == 12);
    CHECK(f2.edge_count() == 16);
    CHECK(f2.degree_multiset() == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4});
    // every edge joins a degree-4 hub to a degree-2 vertex
    for (const auto& e : f2.edges()) {
        const int du = f2.degree(e.u), dv = f2.degree(e.v);
        CHECK(du + dv == 6);
    }
}

TEST_CASE("vertex and edge counts follow the closed forms") {
    for (int g = 1; g <= 6; ++g) {
        const auto fc = counts(Family::fractal, g);
        const Graph f = gen_fractal(g);
        const Graph h = gen_nonfractal(g);
        CHECK(BigInt(f.vertex_count()) == fc.n);
        CHECK(BigInt(f.edge_count()) == fc.e);
        CHECK(h.vertex_count() == f.vertex_count());
        CHECK(h.edge_count() == f.edge_count());
    }
    CHECK(gen_fractal(3).vertex_count() == 44);
    CHECK(gen_fractal(3).edge_count() == 64);
}

TEST_CASE("identical degree sequences across the two families") {
    for (int g = 1; g <= 6; ++g)
        CHECK(gen_fractal(g).degree_multiset() == gen_nonfractal(g).degree_multiset());
}

TEST_CASE("degree-class counts follow Lv and the doubling law") {
    for (int g = 1; g <= 5; ++g) {
        const Graph f = gen_fractal(g);
        std::map<int, int> by_iteration, by_degree;
        for (int v = 0; v < f.vertex_count(); ++v) {
            ++by_iteration[f.meta(v).gen_iteration];
            ++by_degree[f.degree(v)];
        }
        const auto fc = counts(Family::fractal, g);
        for (int t = 1; t <= g; ++t) {
            CHECK(BigInt(by_iteration[t]) == fc.lv.at(t));
            CHECK(BigInt(by_degree[fc.degree_of.at(t).get_si()]) == fc.lv.at(t));
        }
        // degree of a vertex created at iteration t is 2^{g-t+1}
        for (int v = 0; v < f.vertex_count(); ++v)
            CHECK(f.degree(v) == 1 << (g - f.meta(v).gen_iteration + 1));
    }
}

TEST_CASE("both constructions agree on degree and distance multisets") {
    for (int g = 1; g <= 3; ++g) {
        const Graph fa = gen_fractal(g);
        const Graph fr = gen_fractal_edge_replacement(g);
        CHECK(fa.degree_multiset() == fr.degree_multiset());
        const auto da = distance_stats(fa), dr = distance_stats(fr);
        CHECK(da.multiset_digest == dr.multiset_digest);
        CHECK(da.average == dr.average);
        CHECK(da.diameter == dr.diameter);

        const Graph ha = gen_nonfractal(g);
        const Graph hr = gen_nonfractal_edge_replacement(g);
        CHECK(ha.degree_multiset() == hr.degree_multiset());
        const auto ea = distance_stats(ha), er = distance_stats(hr);
        CHECK(ea.multiset_digest == er.multiset_digest);
        CHECK(ea.average == er.average);
        CHECK(ea.diameter == er.diameter);
    }
}

TEST_CASE("edge replacement keeps nonfractal edges and drops fractal ones") {
    const Graph h2 = gen_nonfractal_edge_replacement(2);
    CHECK(h2.has_edge(0, 1)); // hub edge v1-v2 survives every iteration
    const Graph h3 = gen_nonfractal_edge_replacement(3);
    CHECK(h3.has_edge(0, 1));

    // fractal: hubs end up mutually non-adjacent from g=2 on
    const Graph f2 = gen_fractal_edge_replacement(2);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(!f2.has_edge(a, b));
}

TEST_CASE("hubs carry the four largest degrees") {
    for (int g = 2; g <= 5; ++g) {
        for (const Graph& graph : {gen_fractal(g), gen_nonfractal(g)}) {
            const int top = 1 << g;
            for (HubRole role : {HubRole::v1, HubRole::v2, HubRole::v3, HubRole::v4})
                CHECK(graph.degree(*graph.hub(role)) == top);
        }
    }
}

TEST_CASE("orientation covers every edge exactly once") {
    for (int g = 1; g <= 4; ++g) {
        const OrientedGraph he = gen_nonfractal_oriented(g);
        CHECK(he.base() == gen_nonfractal(g));
        const auto dirs = he.directed_edges();
        CHECK(static_cast<int>(dirs.size()) == he.base().edge_count());
        for (const auto& de : dirs) {
            CHECK(he.sign(de.tail, de.head) == 1);
            CHECK(he.sign(de.head, de.tail) == -1);
        }
        CHECK(he.sign(0, 0) == 0);
    }
}

TEST_CASE("base orientation matches the defining edge list") {
    const OrientedGraph h1 = gen_nonfractal_oriented(1);
    CHECK(h1.sign(0, 1) == 1);  // v1 -> v2
    CHECK(h1.sign(0, 2) == 1);  // v1 -> v3
    CHECK(h1.sign(3, 1) == 1);  // v4 -> v2
    CHECK(h1.sign(2, 3) == 1);  // v3 -> v4
}

TEST_CASE("each copy of H_2^e replicates H_1^e") {
    const OrientedGraph h2 = gen_nonfractal_oriented(2);
    // copy -> global ids of its local v1, v2, v3, v4
    const std::array<std::array<int, 4>, 4> copy_map{{
        {0, 2, 4, 5},
        {2, 3, 6, 7},
        {3, 1, 8, 9},
        {0, 1, 10, 11},
    }};
    for (const auto& m : copy_map) {
        CHECK(h2.sign(m[0], m[1]) == 1);
        CHECK(h2.sign(m[0], m[2]) == 1);
        CHECK(h2.sign(m[3], m[1]) == 1);
        CHECK(h2.sign(m[2], m[3]) == 1);
    }
    CHECK(h2.base().edge_count() == 16);
}

TEST_CASE("sierpinski family") {
    const Graph s1 = gen_sierpinski_ext(1);
    CHECK(s1 == make_k4());
    const Graph s2 = gen_sierpinski_ext(2);
    CHECK(s2.vertex_count() == 12);
    CHECK(s2.edge_count() == 18);
    CHECK(s2.degree_multiset() == std::vector<int>(12, 3));
    const Graph s3 = gen_sierpinski_ext(3);
    CHECK(s3.vertex_count() == 36);
    CHECK(s3.edge_count() == 54);
    for (int g = 1; g <= 5; ++g) {
        const Graph s = gen_sierpinski_ext(g);
        CHECK(is_connected(s));
        CHECK(BigInt(s.vertex_count()) == counts(Family::sierpinski, g).n);
        CHECK(BigInt(s.edge_count()) == counts(Family::sierpinski, g).e);
        for (int v = 0; v < s.vertex_count(); ++v) CHECK(s.degree(v) == 3);
    }
}

TEST_CASE("generation caps") {
    CHECK_THROWS_AS(gen_fractal(99), CapExceededError);
    CHECK_THROWS_AS(gen_nonfractal(11), CapExceededError);
    CHECK_THROWS_AS(gen_sierpinski_ext(0), DomainError);
    CHECK_THROWS_AS(gen_fractal(-2), DomainError);
    CHECK(gen_fractal(5, 5).vertex_count() == 684); // explicit cap raise
    CHECK_THROWS_AS(gen_fractal(6, 5), CapExceededError);
}

TEST_CASE("construction is safe to run concurrently") {
    std::array<Graph, 4> results;
    std::array<std::thread, 4> workers;
    for (int i = 0; i < 4; ++i)
        workers[i] = std::thread([&results, i] { results[i] = gen_fractal(4); });
    for (auto& w : workers) w.join();
    for (int i = 1; i < 4; ++i) CHECK(results[i] == results[0]);
}

TEST_CASE("repeated runs are bit-identical") {
    CHECK(gen_fractal(4) == gen_fractal(4));
    CHECK(gen_nonfractal(4) == gen_nonfractal(4));
    const auto a = gen_nonfractal_oriented(3).directed_edges();
    const auto b = gen_nonfractal_oriented(3).directed_edges();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].tail == b[i].tail);
        CHECK(a[i].head == b[i].head);
    }
}
