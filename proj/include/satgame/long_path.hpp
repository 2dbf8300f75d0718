#pragma once

#include <vector>

#include "satgame/strategy.hpp"

namespace satgame {

// Inductive path construction: responds to each opponent edge so that after
// some own move the graph contains a path of length target or target+1 that
// covers every positive-degree vertex and has an endpoint of degree one.
// The stored orientation keeps a degree-one endpoint at the front.
class PathBuilder {
public:
    explicit PathBuilder(int target);

    int target() const { return target_; }
    bool done() const { return done_; }
    const std::vector<int>& path() const { return path_; }
    int length() const { return path_.empty() ? -1 : static_cast<int>(path_.size()) - 1; }
    int front() const { return path_.front(); }
    int back() const { return path_.back(); }
    bool on_path(int v) const;

    // Chooses this player's move and commits the resulting path bookkeeping;
    // the caller must actually play the returned edge.
    Edge move(const GameState& s);

    std::string memory_key() const;

private:
    Edge open_or_extend_first(const GameState& s);
    void fix_orientation_after(const GameState& s, Edge claim);

    int target_;
    bool done_ = false;
    std::vector<int> path_;
};

// The path construction as a standalone automaton; plays trivially once the
// target is reached.
class LongPathStrategy final : public Strategy {
public:
    explicit LongPathStrategy(int target) : builder_(target) {}

    std::string name() const override { return "long-path:" + std::to_string(builder_.target()); }
    Edge next_move(const GameState& s) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<LongPathStrategy>(*this); }
    std::string memory_key() const override { return builder_.memory_key(); }
    bool finished() const override { return builder_.done(); }
    const PathBuilder& builder() const { return builder_; }

private:
    PathBuilder builder_;
};

int least_isolated_vertex(const Graph& g);

}  // namespace satgame
