#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "satgame/canonical.hpp"
#include "satgame/graph.hpp"
#include "satgame/graph6.hpp"
#include "satgame/rng.hpp"

using namespace satgame;

namespace {

Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    int pos = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++pos)
            if ((mask >> pos) & 1) g.add_edge(u, v);
    return g;
}

// reference isomorphism test: try all vertex bijections
bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (a.permuted(perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

Graph random_graph(int n, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(2)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph construction and validation") {
    Graph g = Graph::from_edges(3, {});
    CHECK(g.edge_count() == 0);

    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(4, {{0, 4}}), std::out_of_range);
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
}

TEST_CASE("add/remove keep the edge count and bits consistent") {
    Rng rng(7);
    Graph g(9);
    for (int round = 0; round < 300; ++round) {
        int u = static_cast<int>(rng.below(9));
        int v = static_cast<int>(rng.below(9));
        if (u == v) continue;
        Edge e(u, v);
        Graph before = g;
        if (g.has_edge(e)) {
            CHECK_THROWS(g.add_edge(e));
            g.remove_edge(e);
            CHECK(g.edge_count() == before.edge_count() - 1);
            g.add_edge(e);
            CHECK(g == before);
        } else {
            g.add_edge(e);
            CHECK(g.has_edge(u, v));
            CHECK(g.has_edge(v, u));
            CHECK(g.edge_count() == before.edge_count() + 1);
            g.remove_edge(e);
            CHECK(g == before);
            g.add_edge(e);
        }
        int degsum = 0;
        for (int w = 0; w < 9; ++w) degsum += g.degree(w);
        CHECK(degsum == 2 * g.edge_count());
    }
}

TEST_CASE("free edges partition the pair set") {
    CHECK(Graph::complete(3).free_edges().empty());
    CHECK(Graph(3).free_edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(Graph::path(3).free_edges() == std::vector<Edge>{{0, 2}});

    Rng rng(11);
    for (int round = 0; round < 50; ++round) {
        Graph g = random_graph(8, rng);
        auto fe = g.free_edges();
        CHECK(static_cast<int>(fe.size()) + g.edge_count() == g.max_edges());
        CHECK(std::is_sorted(fe.begin(), fe.end()));
    }
}

TEST_CASE("edge ids are a bijection") {
    int n = 9;
    for (int id = 0; id < n * (n - 1) / 2; ++id) {
        Edge e = edge_from_id(n, id);
        CHECK(edge_id(n, e) == id);
    }
}

TEST_CASE("canonical key: relabeling invariance") {
    Graph p1 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph p2 = Graph::from_edges(3, {{0, 2}, {0, 1}});
    CHECK(canonical_key(p1) == canonical_key(p2));

    Graph k2_plus = Graph::from_edges(3, {{0, 1}});
    CHECK(canonical_key(p1) != canonical_key(k2_plus));

    Rng rng(13);
    for (int n = 2; n <= 8; ++n) {
        for (int round = 0; round < 25; ++round) {
            Graph g = random_graph(n, rng);
            std::string key = canonical_key(g);
            for (int t = 0; t < 8; ++t) {
                Graph h = g.permuted(random_permutation(n, rng));
                CHECK(canonical_key(h) == key);
            }
        }
    }
}

TEST_CASE("canonical key separates all classes on 4 and 5 vertices") {
    // derived by exhaustive pairwise brute-force isomorphism
    for (int n = 4; n <= 5; ++n) {
        std::set<std::string> keys;
        std::vector<Graph> reps;
        for (uint64_t mask = 0; mask < (uint64_t(1) << (n * (n - 1) / 2)); ++mask) {
            Graph g = graph_from_mask(n, mask);
            std::string key = canonical_key(g);
            if (keys.insert(key).second) {
                for (const Graph& r : reps) CHECK(!brute_isomorphic(r, g));
                reps.push_back(g);
            }
        }
        if (n == 4) CHECK(keys.size() == 11);
        if (n == 5) CHECK(keys.size() == 34);
    }
}

TEST_CASE("canonical_form is a canonical representative") {
    Rng rng(17);
    for (int round = 0; round < 60; ++round) {
        int n = 3 + static_cast<int>(rng.below(6));
        Graph g = random_graph(n, rng);
        Graph c = canonical_form(g);
        CHECK(brute_isomorphic(g, c));
        Graph h = g.permuted(random_permutation(n, rng));
        CHECK(canonical_form(h) == c);
    }
}

TEST_CASE("graph6 frozen values") {
    CHECK(to_graph6(Graph::complete(2)) == "A_");
    CHECK(to_graph6(Graph::complete(3)) == "Bw");
    CHECK(from_graph6("A_") == Graph::complete(2));
    CHECK(from_graph6("Bw") == Graph::complete(3));
}

TEST_CASE("graph6 roundtrip, exhaustive small n") {
    for (int n = 0; n <= 7; ++n) {
        uint64_t limit = uint64_t(1) << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < limit; ++mask) {
            Graph g = graph_from_mask(n, mask);
            CHECK(from_graph6(to_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 extended header for n > 62") {
    Graph g(70);
    g.add_edge(0, 69);
    g.add_edge(31, 32);
    CHECK(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("Bw_"), std::invalid_argument);   // trailing garbage
    CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);     // missing bits
    CHECK_THROWS_AS(from_graph6("B\x05"), std::invalid_argument); // byte out of range
    CHECK_THROWS_AS(from_graph6("B~"), std::invalid_argument);    // nonzero padding
}

TEST_CASE("triangle bits pack the upper triangle") {
    Rng rng(23);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, rng);
        uint64_t bits = g.triangle_bits_u64();
        int pos = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++pos) CHECK(((bits >> pos) & 1) == (g.has_edge(u, v) ? 1 : 0));
    }
}
