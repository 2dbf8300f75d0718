#pragma once

#include <optional>
#include <vector>

#include "satgame/graph.hpp"
#include "satgame/property.hpp"

namespace satgame {

// Exact minimum vertex-cut size; n-1 for complete graphs.
int vertex_connectivity(const Graph& g);
// Threshold form used on every game move; early exit both ways.
bool is_k_connected(const Graph& g, int k);

struct ChromaticResult {
    int value = 0;        // exact chi(G) when !exceeds_cap
    bool exceeds_cap = false;
};
// Exact chromatic number; with a cap, either the exact value <= cap or the
// verdict "greater than cap".
ChromaticResult chromatic_number(const Graph& g, std::optional<int> cap = std::nullopt);
bool is_k_colorable(const Graph& g, int k);

struct MatchingResult {
    int size = 0;
    std::vector<Edge> matching;  // one maximum matching as witness
};
// nu(G) by augmenting paths with blossom contraction.
MatchingResult max_matching(const Graph& g);
int max_matching_size(const Graph& g);
// nu(G) >= k with early exit once k augmenting paths are found.
bool has_matching_of_size(const Graph& g, int k);

bool has_hamilton_cycle(const Graph& g);

// True iff g contains a (not necessarily induced) subgraph isomorphic to
// pattern; pattern is capped at 6 vertices.
bool contains_copy(const Graph& g, const Graph& pattern);

int independence_number(const Graph& g);
bool has_independent_set(const Graph& g, int k);

bool satisfies(const Graph& g, const Property& p);

// True iff g + e still avoids p. Requires e free and g outside p.
bool is_legal(const Graph& g, Edge e, const Property& p);
bool is_saturated(const Graph& g, const Property& p);

}  // namespace satgame
