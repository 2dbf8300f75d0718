#pragma once

#include <functional>
#include <optional>

#include "satgame/game.hpp"
#include "satgame/strategy.hpp"

namespace satgame {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(uint64_t visited)
        : std::runtime_error("search budget exceeded after " + std::to_string(visited) + " nodes"),
          nodes(visited) {}
    uint64_t nodes;
};

struct SolveOptions {
    uint64_t node_cap = 200'000'000;
    // Admissible window on the game value (e.g. [sat, ex]); the reported
    // score is exact whenever the true value lies inside.
    std::optional<int> window_lo;
    std::optional<int> window_hi;
    bool memoize = true;     // canonical-key transposition table
    bool alpha_beta = true;  // disabled => plain minimax, for cross-checks
};

struct SolveResult {
    int score = 0;
    std::vector<Edge> pv;
    uint64_t nodes = 0;
    Role first = Role::Max;
};

// Exact s(H, P) by minimax over the game DAG. Max maximizes the final edge
// count, Mini minimizes it; the mover is derived from move-count parity.
SolveResult solve_game(const GameState& start, const SolveOptions& opts = {});
SolveResult solve(int n, const Property& p, Role first, const SolveOptions& opts = {});

// A move achieving the minimax value for the current mover; lexicographic
// tie-break. Throws std::logic_error on finished games.
Edge best_move(const GameState& s, const SolveOptions& opts = {});

// Plays best_move every turn.
class OptimalStrategy final : public Strategy {
public:
    explicit OptimalStrategy(SolveOptions opts = {}) : opts_(opts) {}
    std::string name() const override { return "optimal"; }
    Edge next_move(const GameState& s) override { return best_move(s, opts_); }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<OptimalStrategy>(*this); }

private:
    SolveOptions opts_;
};

struct VerifyOptions {
    uint64_t node_cap = 2'000'000'000;
};

struct VerifyResult {
    // Worst final score over every adversary line: the minimum when the
    // fixed strategy is Max's, the maximum when it is Mini's.
    int guarantee = 0;
    uint64_t leaves = 0;
    uint64_t nodes = 0;
    std::optional<Transcript> worst_line;
    // Set when the strategy broke its move contract somewhere; guarantee is
    // then meaningless.
    std::optional<Transcript> violation_line;
    std::string violation_reason;
    bool ok() const { return !violation_line.has_value(); }
};

// Exhaustive adversarial check of a deterministic strategy: branches over
// every legal adversary move, follows `strat` for `role`, and plays every
// line to saturation. Transpositions merge on (graph, strategy memory).
VerifyResult verify_strategy(const Strategy& strat, Role role, const GameState& start,
                             const VerifyOptions& opts = {});

struct UntilResult {
    bool all_hold = false;
    uint64_t lines = 0;  // distinct stop points reached
    uint64_t nodes = 0;
    std::optional<Transcript> counterexample;
    std::string failure;
};

// Branches like verify_strategy but stops each line as soon as the strategy
// reports finished(), then applies `check` to the stop state. A game that
// saturates before the strategy finishes fails the check.
UntilResult verify_until(const Strategy& strat, Role role, const GameState& start,
                         const std::function<bool(const GameState&, const Strategy&)>& check,
                         const VerifyOptions& opts = {});

}  // namespace satgame
