#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "satgame/extremal.hpp"
#include "satgame/graph6.hpp"
#include "satgame/oracles.hpp"
#include "satgame/rng.hpp"

using namespace satgame;

namespace {

Graph random_graph(int n, Rng& rng, int density_pct = 50) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<uint64_t>(density_pct)) g.add_edge(u, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// --- independent reference oracles (kept brute-force on purpose) ---

// minimum vertex cut by direct subset enumeration
int brute_vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() == g.max_edges()) return n - 1;
    for (int cut = 0; cut < n - 1; ++cut) {
        std::vector<int> pick(cut, 0);
        std::function<bool(int, int)> choose = [&](int idx, int from) {
            if (idx == cut) {
                std::vector<int> keep;
                std::vector<bool> removed(n, false);
                for (int i = 0; i < cut; ++i) removed[pick[i]] = true;
                for (int v = 0; v < n; ++v)
                    if (!removed[v]) keep.push_back(v);
                Graph h = g.induced(keep);
                return h.vertex_count() > 1 && !h.connected();
            }
            for (int v = from; v < n; ++v) {
                pick[idx] = v;
                if (choose(idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (choose(0, 0)) return cut;
    }
    return n - 1;
}

// exhaustive color assignments, no pruning cleverness
bool brute_colorable(const Graph& g, int k, std::vector<int>& color, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (color[u] == c && g.has_edge(u, v)) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (brute_colorable(g, k, color, v + 1)) return true;
    }
    color[v] = -1;
    return false;
}

int brute_chromatic(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, -1);
        if (brute_colorable(g, k, color, 0)) return k;
    }
    return n;
}

// maximum matching by branch on the lowest uncovered vertex
int brute_matching(const Graph& g, std::vector<bool>& used, int from) {
    int n = g.vertex_count();
    int v = from;
    while (v < n && (used[v] || g.degree(v) == 0)) ++v;
    if (v >= n) return 0;
    used[v] = true;
    int best = brute_matching(g, used, v + 1);  // leave v uncovered
    for (int u = v + 1; u < n; ++u) {
        if (used[u] || !g.has_edge(u, v)) continue;
        used[u] = true;
        best = std::max(best, 1 + brute_matching(g, used, v + 1));
        used[u] = false;
    }
    used[v] = false;
    return best;
}

int brute_matching_size(const Graph& g) {
    std::vector<bool> used(g.vertex_count(), false);
    return brute_matching(g, used, 0);
}

int brute_independence(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (((mask >> u) & 1) && ((mask >> v) & 1) && g.has_edge(u, v)) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("vertex connectivity: named graphs") {
    CHECK(vertex_connectivity(Graph::complete(5)) == 4);
    CHECK(vertex_connectivity(Graph::cycle(5)) == 2);
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(vertex_connectivity(star) == 1);
    CHECK(vertex_connectivity(petersen()) == 3);
}

TEST_CASE("vertex connectivity agrees with subset-cut enumeration") {
    Rng rng(101);
    int checked = 0;
    for (int round = 0; round < 520; ++round) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_graph(n, rng, 25 + static_cast<int>(rng.below(60)));
        int expect = brute_vertex_connectivity(g);
        CHECK(vertex_connectivity(g) == expect);
        for (int k = 0; k <= n; ++k) CHECK(is_k_connected(g, k) == (expect >= k));
        ++checked;
    }
    CHECK(checked >= 500);
}

TEST_CASE("chromatic number: named graphs") {
    CHECK(chromatic_number(Graph::cycle(5)).value == 3);
    CHECK(chromatic_number(Graph::complete(4)).value == 4);
    CHECK(chromatic_number(petersen()).value == 3);  // 2-coloring fails, 3 works
    CHECK(!is_k_colorable(petersen(), 2));
    CHECK(is_k_colorable(petersen(), 3));
}

TEST_CASE("chromatic number agrees with exhaustive assignment search") {
    Rng rng(102);
    for (int round = 0; round < 520; ++round) {
        int n = 1 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, rng, 20 + static_cast<int>(rng.below(70)));
        int expect = brute_chromatic(g);
        CHECK(chromatic_number(g).value == expect);
        for (int cap = 1; cap <= n; ++cap) {
            ChromaticResult r = chromatic_number(g, cap);
            if (expect <= cap) {
                CHECK(!r.exceeds_cap);
                CHECK(r.value == expect);
            } else {
                CHECK(r.exceeds_cap);
            }
        }
    }
}

TEST_CASE("maximum matching: named graphs") {
    CHECK(max_matching_size(Graph::cycle(7)) == 3);
    CHECK(max_matching_size(Graph::complete(4)) == 2);
    CHECK(max_matching_size(petersen()) == 5);
}

TEST_CASE("maximum matching agrees with branch enumeration, witness valid") {
    Rng rng(103);
    for (int round = 0; round < 520; ++round) {
        int n = 1 + static_cast<int>(rng.below(10));
        Graph g = random_graph(n, rng, 15 + static_cast<int>(rng.below(70)));
        int expect = brute_matching_size(g);
        MatchingResult r = max_matching(g);
        CHECK(r.size == expect);
        CHECK(static_cast<int>(r.matching.size()) == expect);
        std::vector<bool> covered(n, false);
        for (Edge e : r.matching) {
            CHECK(g.has_edge(e));
            CHECK(!covered[e.u]);
            CHECK(!covered[e.v]);
            covered[e.u] = covered[e.v] = true;
        }
        for (int k = 0; k <= n; ++k) CHECK(has_matching_of_size(g, k) == (expect >= k));
    }
}

TEST_CASE("hamilton cycle oracle") {
    CHECK(has_hamilton_cycle(Graph::cycle(5)));
    CHECK(!has_hamilton_cycle(Graph::path(4)));
    CHECK(!has_hamilton_cycle(petersen()));
    CHECK(has_hamilton_cycle(Graph::complete(3)));
    CHECK_THROWS_AS(has_hamilton_cycle(Graph(2)), std::invalid_argument);

    // cross-check against cycle-permutation enumeration on small n
    Rng rng(104);
    for (int round = 0; round < 200; ++round) {
        int n = 3 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, rng, 30 + static_cast<int>(rng.below(50)));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        bool expect = false;
        do {
            if (perm[0] != 0) break;  // fix rotation
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                if (!g.has_edge(perm[i], perm[(i + 1) % n])) ok = false;
            if (ok) expect = true;
        } while (!expect && std::next_permutation(perm.begin(), perm.end()));
        CHECK(has_hamilton_cycle(g) == expect);
    }
}

TEST_CASE("subgraph containment") {
    CHECK(contains_copy(Graph::complete(4), Graph::complete(3)));
    CHECK(!contains_copy(Graph::cycle(5), Graph::complete(3)));
    CHECK(contains_copy(petersen(), Graph::cycle(5)));
    CHECK(!contains_copy(petersen(), Graph::cycle(3)));
    CHECK(!contains_copy(petersen(), Graph::cycle(4)));  // girth 5
    CHECK(contains_copy(Graph::path(5), Graph::path(3)));
    CHECK_THROWS_AS(contains_copy(Graph::complete(8), Graph::complete(7)), std::invalid_argument);
}

TEST_CASE("independence number") {
    CHECK(independence_number(Graph::cycle(5)) == 2);
    CHECK(independence_number(Graph::complete(6)) == 1);
    CHECK(independence_number(Graph(6)) == 6);
    CHECK(independence_number(petersen()) == 4);

    Rng rng(105);
    for (int round = 0; round < 520; ++round) {
        int n = 1 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, rng, 20 + static_cast<int>(rng.below(70)));
        int expect = brute_independence(g);
        CHECK(independence_number(g) == expect);
        for (int k = 0; k <= n + 1; ++k) CHECK(has_independent_set(g, k) == (expect >= k));
    }
}

TEST_CASE("satisfies dispatch") {
    CHECK(satisfies(Graph::complete(4), Property::connectivity(3)));
    CHECK(satisfies(Graph::cycle(5), Property::matching(2)));
    Graph k3_iso = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(!satisfies(k3_iso, Property::perfect_matching()));
    CHECK(!satisfies(Graph(3), Property::chromatic_above(1)));
    CHECK(satisfies(Graph::from_edges(3, {{0, 1}}), Property::chromatic_above(1)));
    CHECK(satisfies(Graph::complete(5), Property::independence_below(2)));
    CHECK(!satisfies(Graph(2), Property::hamiltonicity()));
}

TEST_CASE("monotonicity: adding an edge preserves every property") {
    Rng rng(106);
    std::vector<Property> props = {
        Property::connectivity(1), Property::connectivity(2), Property::connectivity(3),
        Property::chromatic_above(2), Property::chromatic_above(3),
        Property::matching(2), Property::matching(3), Property::perfect_matching(),
        Property::independence_below(2), Property::independence_below(3),
        Property::hamiltonicity(), Property::contains_subgraph(Graph::complete(3)),
    };
    int done = 0;
    while (done < 1000) {
        int n = 3 + static_cast<int>(rng.below(6));
        Graph g = random_graph(n, rng, 20 + static_cast<int>(rng.below(60)));
        auto free = g.free_edges();
        if (free.empty()) continue;
        const Property& p = props[rng.below(props.size())];
        Edge e = free[rng.below(free.size())];
        bool before = satisfies(g, p);
        g.add_edge(e);
        bool after = satisfies(g, p);
        if (before) CHECK(after);
        ++done;
    }
}

TEST_CASE("is_legal basics and validation") {
    Graph empty4(4);
    CHECK(is_legal(empty4, Edge(0, 1), Property::matching(2)));
    Graph one = Graph::from_edges(4, {{0, 1}});
    CHECK(!is_legal(one, Edge(2, 3), Property::matching(2)));

    // still-disconnected extension (checked by the components oracle)
    Graph g(5);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            if (!(u == 0 && v == 1)) g.add_edge(u, v);
    CHECK(is_legal(g, Edge(0, 1), Property::connectivity(1)));
    {
        Graph h = g;
        h.add_edge(0, 1);
        CHECK(!h.connected());
    }

    CHECK_THROWS_AS(is_legal(one, Edge(0, 1), Property::matching(2)), std::invalid_argument);
    Graph k2_pair = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(is_legal(k2_pair, Edge(0, 2), Property::matching(2)), std::invalid_argument);
}

TEST_CASE("is_saturated definitional consistency") {
    Graph k3_plus3 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(is_saturated(k3_plus3, Property::matching(2)));

    Graph k23 = Graph::from_edges(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(is_saturated(k23, Property::chromatic_above(2)));

    CHECK(!is_saturated(Graph(4), Property::matching(2)));

    Rng rng(107);
    for (int round = 0; round < 200; ++round) {
        int n = 3 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, rng);
        Property p = Property::matching(2);
        if (satisfies(g, p)) continue;
        if (is_saturated(g, p))
            for (Edge e : g.free_edges()) CHECK(!is_legal(g, e, p));
    }
}

TEST_CASE("extremal brute force: cited closed forms") {
    auto k3 = extremal_bruteforce(5, Property::contains_subgraph(Graph::complete(3)));
    CHECK(k3.sat == 4);   // star is saturated: n-1
    CHECK(k3.ex == 6);    // Mantel: floor(25/4)
    CHECK(is_saturated(from_graph6(k3.sat_witness), Property::contains_subgraph(Graph::complete(3))));
    CHECK(is_saturated(from_graph6(k3.ex_witness), Property::contains_subgraph(Graph::complete(3))));

    auto c2 = extremal_bruteforce(6, Property::connectivity(2));
    CHECK(c2.ex == 11);   // binom(5,2) + 1

    auto chi3 = extremal_bruteforce(5, Property::chromatic_above(3));
    CHECK(chi3.sat == 7);  // (k-1)(n-1) - binom(k-1,2) = 2*4 - 1
    CHECK(chi3.ex == 8);   // complete 3-partite 2+2+1
}

TEST_CASE("extremal brute force: Erdos-Gallai matching numbers") {
    for (int n = 4; n <= 8; ++n) {
        for (int k = 2; k <= 3; ++k) {
            if (n < 2 * k) continue;
            auto r = extremal_bruteforce(n, Property::matching(k));
            long long expect = std::max<long long>((k - 1) * (n - 1) - binomial(k - 1, 2), binomial(2 * k - 1, 2));
            CHECK(r.ex == expect);
            CHECK(r.sat == 3 * (k - 1));  // Mader: 3(k-1) for k <= n/3... holds in this range
        }
    }
}

TEST_CASE("extremal brute force: chi and K3 sat/ex across n") {
    for (int n = 4; n <= 7; ++n) {
        auto chi = extremal_bruteforce(n, Property::chromatic_above(3));
        CHECK(chi.sat == 2 * (n - 1) - 1);
        long long ex = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) ex += static_cast<long long>((n + i) / 3) * ((n + j) / 3);
        CHECK(chi.ex == ex);

        auto k3 = extremal_bruteforce(n, Property::contains_subgraph(Graph::complete(3)));
        CHECK(k3.sat == n - 1);
        CHECK(k3.ex == n * n / 4);
    }
}

TEST_CASE("extremal rejects properties the empty graph already has") {
    CHECK_THROWS_AS(extremal_bruteforce(4, Property::independence_below(5)), std::invalid_argument);
}
