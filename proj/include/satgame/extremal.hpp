#pragma once

#include <string>

#include "satgame/graph.hpp"
#include "satgame/property.hpp"

namespace satgame {

struct ExtremalPair {
    int sat = 0;                  // minimum saturated size
    int ex = 0;                   // maximum saturated size
    std::string sat_witness;      // graph6
    std::string ex_witness;       // graph6
};

// Exact sat(n,P) and ex(n,P) by BFS over isomorphism classes of graphs
// outside P, one canonical representative per class. n <= 8.
ExtremalPair extremal_bruteforce(int n, const Property& p);

// Closed forms used for cross-checks.
long long binomial(int n, int k);

}  // namespace satgame
