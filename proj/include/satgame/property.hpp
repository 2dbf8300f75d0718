#pragma once

#include <memory>
#include <optional>
#include <string>

#include "satgame/graph.hpp"

namespace satgame {

// Monotone increasing graph property the players must avoid.
//   Connectivity(k)       G is k-vertex-connected (and spanning)
//   ChromaticAbove(k)     chi(G) >= k+1
//   Matching(k)           nu(G) >= k
//   PerfectMatching       G has a perfect matching
//   IndependenceBelow(k)  alpha(G) < k
//   Hamiltonicity         G has a Hamilton cycle
//   ContainsSubgraph(H)   G has a (not necessarily induced) copy of H
class Property {
public:
    enum class Kind {
        Connectivity,
        ChromaticAbove,
        Matching,
        PerfectMatching,
        IndependenceBelow,
        Hamiltonicity,
        ContainsSubgraph,
    };

    static Property connectivity(int k);
    static Property chromatic_above(int k);
    static Property matching(int k);
    static Property perfect_matching();
    static Property independence_below(int k);
    static Property hamiltonicity();
    static Property contains_subgraph(Graph pattern);

    Kind kind() const { return kind_; }
    int param() const { return k_; }
    const Graph& pattern() const;

    // "connectivity:2", "chromatic-gt:3", "matching:2", "pm",
    // "independence-lt:2", "hamiltonicity", "contains:K3" / "contains:<graph6>"
    std::string name() const;
    static Property parse(const std::string& text);

private:
    Property(Kind kind, int k) : kind_(kind), k_(k) {}
    Kind kind_;
    int k_;
    std::shared_ptr<const Graph> pattern_;  // ContainsSubgraph only
};

}  // namespace satgame
