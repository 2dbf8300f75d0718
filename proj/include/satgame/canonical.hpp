#pragma once

#include <string>

#include "satgame/graph.hpp"

namespace satgame {

// Exact isomorphism-class keys are produced for n <= key_exact_limit by an
// individualization-refinement labeling search. Above the limit the key
// degrades to an isomorphism-invariant partition (degree sequence plus
// sorted neighborhood hashes) that may merge non-isomorphic graphs.
inline constexpr int key_exact_limit = 10;

std::string canonical_key(const Graph& g);

// Canonically relabeled copy (only for n <= key_exact_limit).
Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace satgame
