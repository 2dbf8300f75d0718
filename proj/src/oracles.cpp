#include "satgame/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace satgame {
namespace {

// --- vertex connectivity -------------------------------------------------

// Max number of internally vertex-disjoint s-t paths, capped at `cap`.
// Unit-capacity flow on the split digraph (v_in -> v_out), BFS augmentation.
class DisjointPathFinder {
public:
    DisjointPathFinder(const Graph& g, int cap) : g_(g), n_(g.vertex_count()), cap_(cap) {
        vertex_used_.assign(n_, 0);
        edge_flow_.assign(static_cast<size_t>(n_) * n_, 0);
    }

    int count(int s, int t) {
        s_ = s;
        t_ = t;
        std::fill(vertex_used_.begin(), vertex_used_.end(), 0);
        std::fill(edge_flow_.begin(), edge_flow_.end(), 0);
        int flow = 0;
        while (flow < cap_ && augment()) ++flow;
        return flow;
    }

private:
    int8_t& ef(int u, int v) { return edge_flow_[static_cast<size_t>(u) * n_ + v]; }

    // Nodes: v_in = 2v, v_out = 2v+1. BFS from s_out to t_in.
    bool augment() {
        const int nodes = 2 * n_;
        parent_.assign(nodes, -1);
        std::vector<int> queue{2 * s_ + 1};
        parent_[2 * s_ + 1] = 2 * s_ + 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int node = queue[qi];
            int v = node / 2;
            if (node & 1) {  // v_out: forward edge arcs, plus cancel v_in->v_out
                for_each_neighbor(g_, v, [&](int w) {
                    if (ef(v, w) == 0 && parent_[2 * w] < 0) {
                        // skip arcs that would push flow back out of t or into s
                        parent_[2 * w] = node;
                        queue.push_back(2 * w);
                    }
                });
                if (vertex_used_[v] && parent_[2 * v] < 0) {
                    parent_[2 * v] = node;
                    queue.push_back(2 * v);
                }
            } else {  // v_in: through arc if unused, plus cancel incoming edge flow
                if (v == t_) return apply_path();
                if ((v == s_ || !vertex_used_[v]) && parent_[2 * v + 1] < 0) {
                    parent_[2 * v + 1] = node;
                    queue.push_back(2 * v + 1);
                }
                for_each_neighbor(g_, v, [&](int w) {
                    if (ef(w, v) == 1 && parent_[2 * w + 1] < 0) {
                        parent_[2 * w + 1] = node;
                        queue.push_back(2 * w + 1);
                    }
                });
            }
        }
        return false;
    }

    bool apply_path() {
        int node = 2 * t_;
        while (node != 2 * s_ + 1) {
            int prev = parent_[node];
            if ((prev & 1) && !(node & 1)) {
                if (prev / 2 == node / 2) {
                    vertex_used_[node / 2] = 0;  // cancelled through-arc
                } else {
                    ef(prev / 2, node / 2) ^= 1;
                }
            } else {
                int v = node / 2;
                if (prev / 2 == v) {
                    if (v != s_ && v != t_) vertex_used_[v] = 1;
                } else {
                    ef(v, prev / 2) ^= 1;  // cancelled edge arc prev_in <- v ... reverse
                }
            }
            node = prev;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    int cap_;
    int s_ = 0, t_ = 0;
    std::vector<uint8_t> vertex_used_;
    std::vector<int8_t> edge_flow_;
    std::vector<int> parent_;
};

bool is_complete(const Graph& g) { return g.edge_count() == g.max_edges(); }

// Articulation-point test, iterative Tarjan.
bool is_biconnected(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<size_t> it(n, 0);
    int timer = 0;
    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        int u = stack.back();
        if (it[u] < adj[u].size()) {
            int v = adj[u][it[u]++];
            if (disc[v] < 0) {
                parent[v] = u;
                ++child_count[u];
                disc[v] = low[v] = timer++;
                stack.push_back(v);
            } else if (v != parent[u]) {
                low[u] = std::min(low[u], disc[v]);
            }
        } else {
            stack.pop_back();
            int p = parent[u];
            if (p >= 0) {
                low[p] = std::min(low[p], low[u]);
                if (p != 0 && low[u] >= disc[p]) return false;  // p is a cut vertex
            }
        }
    }
    if (child_count[0] > 1) return false;
    if (timer != n) return false;  // disconnected
    return true;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k <= 0) return true;
    if (n < k + 1) return false;
    if (is_complete(g)) return true;  // n >= k+1 checked above
    if (g.min_degree() < k) return false;
    if (k == 1) return g.connected();
    if (k == 2) return is_biconnected(g);

    // A cut of size < k misses some vertex of any fixed k-set W, so it
    // separates that vertex from a non-neighbor. Pick W with few non-neighbors.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    DisjointPathFinder flow(g, k);
    for (int i = 0; i < k; ++i) {
        int w = order[i];
        for (int u = 0; u < n; ++u) {
            if (u == w || g.has_edge(u, w)) continue;
            if (flow.count(w, u) < k) return false;
        }
    }
    return true;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("vertex_connectivity needs n >= 1");
    if (is_complete(g)) return n - 1;
    int best = g.min_degree();
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t) {
            if (g.has_edge(s, t)) continue;
            DisjointPathFinder flow(g, best);
            best = std::min(best, flow.count(s, t));
        }
    return best;
}

// --- coloring -------------------------------------------------------------

namespace {

struct ColorSearch {
    const Graph& g;
    int n;
    int k;
    std::vector<int> color;                // -1 = uncolored
    std::vector<uint32_t> neighbor_mask;   // colors seen among neighbors
    std::vector<int> colored_neighbors;

    ColorSearch(const Graph& graph, int limit)
        : g(graph), n(graph.vertex_count()), k(limit), color(n, -1), neighbor_mask(n, 0), colored_neighbors(n, 0) {}

    bool solve(int colored, int max_used) {
        if (colored == n) return true;
        // DSATUR: most saturated, then highest degree, then lowest index
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = std::popcount(neighbor_mask[v]);
            int deg = colored_neighbors[v];
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int limit = std::min(k, max_used + 1);  // new colors introduced in order
        for (int c = 0; c < limit; ++c) {
            if ((neighbor_mask[pick] >> c) & 1) continue;
            color[pick] = c;
            std::vector<int> touched;
            for_each_neighbor(g, pick, [&](int w) {
                if (color[w] >= 0) return;
                ++colored_neighbors[w];
                if (!((neighbor_mask[w] >> c) & 1)) {
                    neighbor_mask[w] |= uint32_t(1) << c;
                    touched.push_back(w);
                }
            });
            if (solve(colored + 1, std::max(max_used, c + 1))) return true;
            for (int w : touched) neighbor_mask[w] &= ~(uint32_t(1) << c);
            for_each_neighbor(g, pick, [&](int w) {
                if (color[w] >= 0) return;
                --colored_neighbors[w];
            });
            color[pick] = -1;
        }
        return false;
    }
};

int greedy_coloring_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n), color(n, -1);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    int used = 0;
    for (int v : order) {
        uint64_t taken = 0;
        for_each_neighbor(g, v, [&](int w) {
            if (color[w] >= 0) taken |= uint64_t(1) << color[w];
        });
        int c = 0;
        while ((taken >> c) & 1) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return std::max(used, n > 0 ? 1 : 0);
}

int greedy_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    int best = 1;
    for (int seed = 0; seed < n; ++seed) {
        std::vector<int> clique{seed};
        for (int v = 0; v < n; ++v) {
            if (v == seed) continue;
            bool ok = true;
            for (int c : clique)
                if (!g.has_edge(v, c)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 0) throw std::invalid_argument("color count must be >= 0");
    if (n == 0) return true;
    if (k == 0) return false;
    if (k >= n) return true;
    if (g.edge_count() == 0) return true;
    if (k > 31) return true;  // denser than any graph we play on
    ColorSearch s(g, k);
    return s.solve(0, 0);
}

ChromaticResult chromatic_number(const Graph& g, std::optional<int> cap) {
    const int n = g.vertex_count();
    if (n == 0) return {0, false};
    int lower = std::max(g.edge_count() > 0 ? 2 : 1, greedy_clique_size(g));
    int upper = greedy_coloring_count(g);
    if (cap && lower > *cap) return {0, true};
    int limit = cap ? std::min(*cap, upper) : upper;
    for (int c = lower; c <= limit; ++c)
        if (c == upper || is_k_colorable(g, c)) return {c, false};
    if (!cap) return {upper, false};
    return {0, true};
}

// --- matching -------------------------------------------------------------

namespace {

// Classic blossom-contraction augmenting search, O(V^3).
struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<uint8_t> used, blossom;

    explicit Blossom(const Graph& graph)
        : g(graph), n(graph.vertex_count()), match(n, -1), parent(n, -1), base(n, 0), used(n, 0), blossom(n, 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<uint8_t> mark(n, 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (match[a] < 0) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool try_augment(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            std::vector<int> nbrs = g.neighbors(v);
            for (int to : nbrs) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
                    // odd cycle: contract the blossom
                    int b = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent[to] < 0) {
                    parent[to] = v;
                    if (match[to] < 0) {
                        // augmenting path found; flip along it
                        int u = to;
                        while (u >= 0) {
                            int pv = parent[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return false;
    }

    int run(int stop_at) {
        int size = 0;
        // greedy seed
        for (int v = 0; v < n && size < stop_at; ++v) {
            if (match[v] >= 0) continue;
            for_each_neighbor(g, v, [&](int u) {
                if (match[v] < 0 && match[u] < 0 && u != v) {
                    match[v] = u;
                    match[u] = v;
                }
            });
            if (match[v] >= 0) ++size;
        }
        for (int v = 0; v < n && size < stop_at; ++v)
            if (match[v] < 0 && try_augment(v)) ++size;
        return size;
    }
};

}  // namespace

MatchingResult max_matching(const Graph& g) {
    Blossom b(g);
    MatchingResult out;
    out.size = b.run(g.vertex_count() / 2 + 1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (b.match[v] > v) out.matching.emplace_back(v, b.match[v]);
    return out;
}

int max_matching_size(const Graph& g) { return Blossom(g).run(g.vertex_count() / 2 + 1); }

bool has_matching_of_size(const Graph& g, int k) {
    if (k <= 0) return true;
    if (2 * k > g.vertex_count() || k > g.edge_count()) return false;
    return Blossom(g).run(k) >= k;
}

// --- hamilton cycle -------------------------------------------------------

namespace {

bool hamilton_extend(const Graph& g, std::vector<int>& path, std::vector<uint8_t>& on_path) {
    const int n = g.vertex_count();
    if (static_cast<int>(path.size()) == n) return g.has_edge(path.back(), path.front());
    int u = path.back();
    for (int v : g.neighbors(u)) {
        if (on_path[v]) continue;
        // a non-endpoint vertex must keep two usable connections
        path.push_back(v);
        on_path[v] = 1;
        bool dead = false;
        for (int w = 0; w < n && !dead; ++w) {
            if (on_path[w]) continue;
            int avail = 0;
            for_each_neighbor(g, w, [&](int x) {
                if (!on_path[x] || x == v || x == path.front()) ++avail;
            });
            if (avail < 2) dead = true;
        }
        if (!dead && hamilton_extend(g, path, on_path)) return true;
        on_path[v] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

bool has_hamilton_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("hamilton cycle needs n >= 3");
    if (g.min_degree() < 2 || !g.connected()) return false;
    std::vector<int> path{0};
    std::vector<uint8_t> on_path(n, 0);
    on_path[0] = 1;
    return hamilton_extend(g, path, on_path);
}

// --- subgraph containment --------------------------------------------------

namespace {

bool embed(const Graph& g, const Graph& h, const std::vector<int>& order, size_t idx, std::vector<int>& image,
           std::vector<uint8_t>& used) {
    if (idx == order.size()) return true;
    int hv = order[idx];
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
        if (used[gv] || g.degree(gv) < h.degree(hv)) continue;
        bool ok = true;
        for (size_t j = 0; j < idx && ok; ++j)
            if (h.has_edge(hv, order[j]) && !g.has_edge(gv, image[order[j]])) ok = false;
        if (!ok) continue;
        image[hv] = gv;
        used[gv] = 1;
        if (embed(g, h, order, idx + 1, image, used)) return true;
        used[gv] = 0;
        image[hv] = -1;
    }
    return false;
}

}  // namespace

bool contains_copy(const Graph& g, const Graph& pattern) {
    const int hn = pattern.vertex_count();
    if (hn > 6) throw std::invalid_argument("pattern larger than 6 vertices not supported");
    if (hn > g.vertex_count() || pattern.edge_count() > g.edge_count()) return false;
    // order pattern vertices: connected expansion from the max-degree vertex
    std::vector<int> order;
    std::vector<uint8_t> placed(hn, 0);
    for (int round = 0; round < hn; ++round) {
        int pick = -1, pick_links = -1, pick_deg = -1;
        for (int v = 0; v < hn; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order) links += pattern.has_edge(u, v) ? 1 : 0;
            int deg = pattern.degree(v);
            if (links > pick_links || (links == pick_links && deg > pick_deg)) {
                pick = v;
                pick_links = links;
                pick_deg = deg;
            }
        }
        placed[pick] = 1;
        order.push_back(pick);
    }
    std::vector<int> image(hn, -1);
    std::vector<uint8_t> used(g.vertex_count(), 0);
    return embed(g, pattern, order, 0, image, used);
}

// --- independence -----------------------------------------------------------

namespace {

// Max independent set via branch and bound on candidate bitsets (n <= 64).
int mis_search(const std::vector<uint64_t>& non_adj, uint64_t candidates, int current, int best, int stop_at) {
    if (best >= stop_at) return best;
    while (candidates) {
        if (current + std::popcount(candidates) <= best) return best;
        int v = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        best = std::max(best, mis_search(non_adj, candidates & non_adj[v], current + 1, best, stop_at));
        if (best >= stop_at) return best;
    }
    return std::max(best, current);
}

std::vector<uint64_t> non_adjacency_rows(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("independence oracle supports n <= 64");
    std::vector<uint64_t> rows(n, 0);
    uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    for (int v = 0; v < n; ++v) {
        uint64_t adj = 0;
        for_each_neighbor(g, v, [&](int u) { adj |= uint64_t(1) << u; });
        rows[v] = all & ~adj & ~(uint64_t(1) << v);
    }
    return rows;
}

}  // namespace

int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto rows = non_adjacency_rows(g);
    uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    return mis_search(rows, all, 0, 0, n + 1);
}

bool has_independent_set(const Graph& g, int k) {
    if (k <= 0) return true;
    const int n = g.vertex_count();
    if (k > n) return false;
    auto rows = non_adjacency_rows(g);
    uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    return mis_search(rows, all, 0, 0, k) >= k;
}

// --- property dispatch -------------------------------------------------------

bool satisfies(const Graph& g, const Property& p) {
    switch (p.kind()) {
        case Property::Kind::Connectivity:
            return is_k_connected(g, p.param());
        case Property::Kind::ChromaticAbove:
            return !is_k_colorable(g, p.param());
        case Property::Kind::Matching:
            return has_matching_of_size(g, p.param());
        case Property::Kind::PerfectMatching:
            return g.vertex_count() % 2 == 0 && has_matching_of_size(g, g.vertex_count() / 2);
        case Property::Kind::IndependenceBelow:
            return !has_independent_set(g, p.param());
        case Property::Kind::Hamiltonicity:
            return g.vertex_count() >= 3 && has_hamilton_cycle(g);
        case Property::Kind::ContainsSubgraph:
            return contains_copy(g, p.pattern());
    }
    return false;
}

bool is_legal(const Graph& g, Edge e, const Property& p) {
    if (g.has_edge(e)) throw std::invalid_argument("is_legal: edge not free");
    if (satisfies(g, p)) throw std::invalid_argument("is_legal: graph already satisfies the property");
    Graph h = g;
    h.add_edge(e);
    return !satisfies(h, p);
}

bool is_saturated(const Graph& g, const Property& p) {
    if (satisfies(g, p)) return false;
    Graph h = g;
    for (Edge e : g.free_edges()) {
        h.add_edge(e);
        bool sat = satisfies(h, p);
        h.remove_edge(e);
        if (!sat) return false;
    }
    return true;
}

}  // namespace satgame
