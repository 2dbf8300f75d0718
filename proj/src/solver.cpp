#include "satgame/solver.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "satgame/canonical.hpp"
#include "satgame/graph6.hpp"

namespace satgame {
namespace {

struct Bounds {
    int lo;
    int hi;
};

class Searcher {
public:
    Searcher(const Property& p, Role first, int start_edges, const SolveOptions& opts)
        : prop_(p), first_(first), start_edges_(start_edges), opts_(opts) {}

    uint64_t nodes = 0;

    int value(Graph& g, int alpha, int beta) {
        if (++nodes > opts_.node_cap) throw BudgetExceeded(nodes);
        std::vector<Edge> moves = legal_edges(g);
        if (moves.empty()) return g.edge_count();

        Bounds* entry = nullptr;
        if (opts_.memoize) {
            // pointers into unordered_map stay valid across rehash
            auto [it, inserted] =
                table_.try_emplace(canonical_key(g), Bounds{0, std::numeric_limits<int>::max()});
            entry = &it->second;
            if (entry->lo == entry->hi) return entry->lo;
            if (opts_.alpha_beta) {
                if (entry->lo >= beta) return entry->lo;
                if (entry->hi <= alpha) return entry->hi;
                alpha = std::max(alpha, entry->lo);
                beta = std::min(beta, entry->hi);
            }
        }
        const int alpha0 = alpha, beta0 = beta;
        const bool maximizing = mover_of(g) == Role::Max;
        order_moves(g, moves, maximizing);

        int best = maximizing ? std::numeric_limits<int>::min() : std::numeric_limits<int>::max();
        for (Edge e : moves) {
            g.add_edge(e);
            int v = value(g, alpha, beta);
            g.remove_edge(e);
            if (maximizing) {
                best = std::max(best, v);
                alpha = std::max(alpha, v);
            } else {
                best = std::min(best, v);
                beta = std::min(beta, v);
            }
            if (opts_.alpha_beta && alpha >= beta) break;
        }
        if (entry) {
            if (best <= alpha0)
                entry->hi = std::min(entry->hi, best);
            else if (best >= beta0)
                entry->lo = std::max(entry->lo, best);
            else
                *entry = {best, best};
        }
        return best;
    }

    Role mover_of(const Graph& g) const {
        return (g.edge_count() - start_edges_) % 2 == 0 ? first_ : other(first_);
    }

    std::vector<Edge> legal_edges(Graph& g) const {
        std::vector<Edge> out;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                Edge e(u, v);
                if (g.has_edge(e)) continue;
                g.add_edge(e);
                bool enters = satisfies(g, prop_);
                g.remove_edge(e);
                if (!enters) out.push_back(e);
            }
        return out;
    }

private:
    // Degree-sum descending at Max nodes, ascending at Mini nodes; the value
    // is order-independent, this only helps pruning.
    void order_moves(const Graph& g, std::vector<Edge>& moves, bool maximizing) const {
        if (!opts_.alpha_beta) return;
        std::vector<int> deg(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
        std::stable_sort(moves.begin(), moves.end(), [&](Edge a, Edge b) {
            int sa = deg[a.u] + deg[a.v], sb = deg[b.u] + deg[b.v];
            return maximizing ? sa > sb : sa < sb;
        });
    }

    const Property& prop_;
    Role first_;
    int start_edges_;
    const SolveOptions& opts_;
    std::unordered_map<std::string, Bounds> table_;
};

}  // namespace

SolveResult solve_game(const GameState& start, const SolveOptions& opts) {
    Graph g = start.graph();
    Searcher s(start.property(), start.first(), start.start_edges(), opts);
    int lo = opts.window_lo.value_or(0) - 1;
    int hi = opts.window_hi.value_or(g.max_edges()) + 1;
    SolveResult out;
    out.first = start.first();
    out.score = s.value(g, lo, hi);

    // principal variation: lexicographically least optimal move at each step
    Graph cur = start.graph();
    while (true) {
        std::vector<Edge> moves = s.legal_edges(cur);
        if (moves.empty()) break;
        bool maximizing = s.mover_of(cur) == Role::Max;
        std::optional<Edge> pick;
        int best = maximizing ? std::numeric_limits<int>::min() : std::numeric_limits<int>::max();
        for (Edge e : moves) {
            cur.add_edge(e);
            int v = s.value(cur, -1, cur.max_edges() + 1);
            cur.remove_edge(e);
            if ((maximizing && v > best) || (!maximizing && v < best)) {
                best = v;
                pick = e;
            }
        }
        out.pv.push_back(*pick);
        cur.add_edge(*pick);
    }
    out.nodes = s.nodes;
    return out;
}

SolveResult solve(int n, const Property& p, Role first, const SolveOptions& opts) {
    return solve_game(GameState(n, p, first), opts);
}

Edge best_move(const GameState& s, const SolveOptions& opts) {
    std::vector<Edge> moves = s.legal_moves();
    if (moves.empty()) throw std::logic_error("best_move: game is over");
    bool maximizing = s.mover() == Role::Max;
    Searcher searcher(s.property(), s.first(), s.start_edges(), opts);
    Graph g = s.graph();
    std::optional<Edge> pick;
    int best = maximizing ? std::numeric_limits<int>::min() : std::numeric_limits<int>::max();
    for (Edge e : moves) {
        g.add_edge(e);
        int v = searcher.value(g, -1, g.max_edges() + 1);
        g.remove_edge(e);
        if ((maximizing && v > best) || (!maximizing && v < best)) {
            best = v;
            pick = e;
        }
    }
    return *pick;
}

// --- exhaustive strategy verification ---------------------------------------

namespace {

struct VerifyEntry {
    int value;
    uint64_t leaves;
    int choice;  // adversary edge id achieving the value; -1 at leaves
};

struct ViolationUnwind {
    std::string reason;
};

Transcript transcript_of(const GameState& s) {
    Transcript t;
    t.n = s.graph().vertex_count();
    t.property = s.property().name();
    t.first = s.first();
    t.moves = s.history();
    t.final_graph6 = to_graph6(s.graph());
    t.score = s.graph().edge_count();
    return t;
}

class Verifier {
public:
    Verifier(Role role, const VerifyOptions& opts, bool adversary_maximizes)
        : role_(role), opts_(opts), adversary_maximizes_(adversary_maximizes) {}

    uint64_t nodes = 0;

    // state invariant: it is the adversary's turn, or the game is over, or
    // it is the strategy's very first move at the root.
    VerifyEntry run(GameState& s, Strategy& strat) {
        if (++nodes > opts_.node_cap) throw BudgetExceeded(nodes);
        if (s.mover() == role_ && !s.over()) {
            step_strategy(s, strat);
            // fall through: now adversary to move (or game over)
        }
        std::string key = memo_key(s, strat);
        auto it = table_.find(key);
        if (it != table_.end()) return it->second;

        VerifyEntry out{0, 0, -1};
        std::vector<Edge> moves = s.legal_moves();
        if (moves.empty()) {
            out = {s.graph().edge_count(), 1, -1};
        } else {
            bool first_child = true;
            for (Edge e : moves) {
                GameState child = s;
                auto child_strat = strat.clone();
                child.apply(e);
                VerifyEntry sub = run(child, *child_strat);
                out.leaves += sub.leaves;
                bool better = first_child || (adversary_maximizes_ ? sub.value > out.value : sub.value < out.value);
                if (better) {
                    out.value = sub.value;
                    out.choice = edge_id(s.graph().vertex_count(), e);
                }
                first_child = false;
            }
        }
        table_.emplace(std::move(key), out);
        return out;
    }

    // replays the worst line recorded in the table
    Transcript worst_line(GameState s, std::unique_ptr<Strategy> strat) {
        while (true) {
            if (s.mover() == role_ && !s.over()) {
                Edge e = strat->next_move(s);
                s.apply(e);
                continue;
            }
            auto it = table_.find(memo_key(s, *strat));
            if (it == table_.end() || it->second.choice < 0) break;
            s.apply(edge_from_id(s.graph().vertex_count(), it->second.choice));
        }
        return transcript_of(s);
    }

private:
    void step_strategy(GameState& s, Strategy& strat) {
        Edge e(0, 1);
        try {
            e = strat.next_move(s);
        } catch (const std::exception& ex) {
            throw_violation(s, std::string("strategy failed to produce a move: ") + ex.what());
        }
        try {
            s.apply(e);
        } catch (const IllegalMoveError& ex) {
            throw_violation(s, ex.what());
        }
    }

    [[noreturn]] void throw_violation(const GameState& s, const std::string& why) {
        violation_state_ = s;
        throw ViolationUnwind{why};
    }

    std::string memo_key(const GameState& s, const Strategy& strat) const {
        std::string key = s.graph().triangle_bits();
        key.push_back('\x1f');
        key += strat.memory_key();
        return key;
    }

    Role role_;
    const VerifyOptions& opts_;
    bool adversary_maximizes_;
    std::unordered_map<std::string, VerifyEntry> table_;

public:
    std::optional<GameState> violation_state_;
};

}  // namespace

VerifyResult verify_strategy(const Strategy& strat, Role role, const GameState& start, const VerifyOptions& opts) {
    // the adversary works against the strategy's goal
    bool adversary_maximizes = role == Role::Mini;
    Verifier v(role, opts, adversary_maximizes);
    VerifyResult out;
    GameState root = start;
    auto s = strat.clone();
    try {
        VerifyEntry e = v.run(root, *s);
        out.guarantee = e.value;
        out.leaves = e.leaves;
        out.nodes = v.nodes;
        out.worst_line = v.worst_line(start, strat.clone());
    } catch (const ViolationUnwind& uv) {
        out.nodes = v.nodes;
        out.violation_reason = uv.reason;
        out.violation_line = transcript_of(*v.violation_state_);
    }
    return out;
}

UntilResult verify_until(const Strategy& strat, Role role, const GameState& start,
                         const std::function<bool(const GameState&, const Strategy&)>& check,
                         const VerifyOptions& opts) {
    struct Frame {
        GameState state;
        std::unique_ptr<Strategy> strat;
    };
    UntilResult out;
    out.all_hold = true;
    std::unordered_map<std::string, char> seen;
    std::vector<Frame> stack;
    stack.push_back({start, strat.clone()});
    auto key_of = [](const GameState& s, const Strategy& st) {
        std::string key = s.graph().triangle_bits();
        key.push_back('\x1f');
        key += st.memory_key();
        return key;
    };
    auto fail = [&](const GameState& s, const std::string& why) {
        out.all_hold = false;
        out.failure = why;
        out.counterexample = transcript_of(s);
    };

    while (!stack.empty() && out.all_hold) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (++out.nodes > opts.node_cap) throw BudgetExceeded(out.nodes);

        if (f.state.mover() == role && !f.strat->finished()) {
            if (f.state.over()) {
                fail(f.state, "game saturated before the strategy finished");
                break;
            }
            Edge e(0, 1);
            try {
                e = f.strat->next_move(f.state);
                f.state.apply(e);
            } catch (const std::exception& ex) {
                fail(f.state, std::string("strategy move rejected: ") + ex.what());
                break;
            }
        }
        if (f.strat->finished()) {
            ++out.lines;
            if (!check(f.state, *f.strat)) fail(f.state, "stop-state check failed");
            continue;
        }
        // adversary's turn
        if (f.state.over()) {
            fail(f.state, "game saturated before the strategy finished");
            break;
        }
        std::string k = key_of(f.state, *f.strat);
        if (!seen.emplace(std::move(k), 1).second) continue;
        for (Edge e : f.state.legal_moves()) {
            Frame child{f.state, f.strat->clone()};
            child.state.apply(e);
            stack.push_back(std::move(child));
        }
    }
    return out;
}

}  // namespace satgame
