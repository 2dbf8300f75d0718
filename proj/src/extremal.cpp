#include "satgame/extremal.hpp"

#include <deque>
#include <unordered_set>

#include "satgame/canonical.hpp"
#include "satgame/graph6.hpp"
#include "satgame/oracles.hpp"

namespace satgame {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

ExtremalPair extremal_bruteforce(int n, const Property& p) {
    if (n < 1 || n > 8) throw std::invalid_argument("extremal_bruteforce supports 1 <= n <= 8");
    Graph empty(n);
    if (satisfies(empty, p))
        throw std::invalid_argument("empty graph already satisfies the property; no saturated graphs exist");

    // Every graph outside P extends to a saturated one, so BFS over the
    // classes outside P reaches every saturated class.
    std::unordered_set<std::string> seen{canonical_key(empty)};
    std::deque<Graph> queue{empty};
    ExtremalPair out;
    bool found = false;

    while (!queue.empty()) {
        Graph g = std::move(queue.front());
        queue.pop_front();
        bool any_legal = false;
        for (Edge e : g.free_edges()) {
            g.add_edge(e);
            bool enters = satisfies(g, p);
            if (!enters) {
                any_legal = true;
                std::string key = canonical_key(g);
                if (seen.insert(std::move(key)).second) queue.push_back(g);
            }
            g.remove_edge(e);
        }
        if (!any_legal) {
            int e = g.edge_count();
            if (!found || e < out.sat) {
                out.sat = e;
                out.sat_witness = to_graph6(g);
            }
            if (!found || e > out.ex) {
                out.ex = e;
                out.ex_witness = to_graph6(g);
            }
            found = true;
        }
    }
    if (!found) throw std::logic_error("no saturated graph found");  // unreachable
    return out;
}

}  // namespace satgame
