#include "satgame/strategy.hpp"

#include <algorithm>

namespace satgame {

Edge trivial_move(const GameState& s) {
    auto e = s.first_legal_edge();
    if (!e) throw std::logic_error("trivial move requested on a finished game");
    return *e;
}

Edge TrivialStrategy::next_move(const GameState& s) { return trivial_move(s); }

Edge RandomStrategy::next_move(const GameState& s) {
    const Graph& g = s.graph();
    std::vector<Edge> free = g.free_edges();
    if (free.empty()) throw std::logic_error("random move requested on a full graph");
    size_t cap = 4 * free.size();
    for (size_t tries = 0; tries < cap; ++tries) {
        Edge e = free[rng_.below(free.size())];
        if (s.legal(e)) return e;
    }
    std::vector<Edge> legal;
    for (Edge e : free)
        if (s.legal(e)) legal.push_back(e);
    if (legal.empty()) throw std::logic_error("random move requested on a finished game");
    return legal[rng_.below(legal.size())];
}

Edge GreedyDegreeStrategy::next_move(const GameState& s) {
    const Graph& g = s.graph();
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<uint8_t> rejected(static_cast<size_t>(g.max_edges()), 0);
    for (;;) {
        int best_score = -1;
        std::optional<Edge> best;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                Edge e(u, v);
                int id = edge_id(n, e);
                if (rejected[id] || g.has_edge(e)) continue;
                int score = deg[u] + deg[v];
                if (score > best_score) {
                    best_score = score;
                    best = e;
                }
            }
        if (!best) throw std::logic_error("greedy move requested on a finished game");
        if (s.legal(*best)) return *best;
        rejected[edge_id(n, *best)] = 1;
    }
}

}  // namespace satgame
