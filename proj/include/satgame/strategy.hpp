#pragma once

#include <memory>
#include <string>

#include "satgame/game.hpp"
#include "satgame/rng.hpp"

namespace satgame {

// Stateful move generator. An automaton may consult the current state (its
// graph, the last move) and its own private memory only; deeper history is
// off limits so that exhaustive verification can merge transpositions on
// (graph, memory). Each game needs a fresh instance (or a clone).
class Strategy {
public:
    virtual ~Strategy() = default;

    virtual std::string name() const = 0;
    // May mutate private memory. Must return a free edge.
    virtual Edge next_move(const GameState& s) = 0;
    virtual std::unique_ptr<Strategy> clone() const = 0;
    // Serialized private memory; used as a transposition-key component.
    virtual std::string memory_key() const { return {}; }
    // True once the automaton has reached its declared goal (used by
    // verify_until; automata without a goal never finish).
    virtual bool finished() const { return false; }
};

// Lexicographically least legal edge.
class TrivialStrategy final : public Strategy {
public:
    std::string name() const override { return "trivial"; }
    Edge next_move(const GameState& s) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<TrivialStrategy>(*this); }
};

// Uniformly random legal edge (seeded, deterministic).
class RandomStrategy final : public Strategy {
public:
    explicit RandomStrategy(uint64_t seed) : seed_(seed), rng_(seed) {}
    std::string name() const override { return "random:" + std::to_string(seed_); }
    Edge next_move(const GameState& s) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(*this); }
    std::string memory_key() const override { return rng_.state_key(); }

private:
    uint64_t seed_;
    Rng rng_;
};

// Highest degree-sum free edge that is legal (ties broken lexicographically).
class GreedyDegreeStrategy final : public Strategy {
public:
    std::string name() const override { return "greedy"; }
    Edge next_move(const GameState& s) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<GreedyDegreeStrategy>(*this); }
};

// Builds a strategy from a registry name such as "trivial", "greedy",
// "random:7", "long-path:5", "max-pm", "max-mk:3", "mini-mk:3",
// "max-conn-sqrt:2", "max-conn-expander:5", "mini-chi4",
// "max-chik-random:6:42", "optimal".
std::unique_ptr<Strategy> make_strategy(const std::string& spec);

Edge trivial_move(const GameState& s);

}  // namespace satgame
