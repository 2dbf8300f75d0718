#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satgame/graph.hpp"
#include "satgame/oracles.hpp"
#include "satgame/property.hpp"

namespace satgame {

enum class Role { Max, Mini };

inline Role other(Role r) { return r == Role::Max ? Role::Mini : Role::Max; }
inline const char* role_name(Role r) { return r == Role::Max ? "max" : "mini"; }
Role parse_role(const std::string& s);

struct MoveRecord {
    Role by;
    Edge e;
    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

struct IllegalMoveError : std::runtime_error {
    IllegalMoveError(Role by, Edge e, const std::string& why)
        : std::runtime_error(std::string(role_name(by)) + " move (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") rejected: " + why),
          role(by),
          edge(e) {}
    Role role;
    Edge edge;
};

struct NotFreeError : IllegalMoveError {
    using IllegalMoveError::IllegalMoveError;
};

// One position of the (H, P) saturation game. The graph never satisfies the
// property; the mover is derived from the move-count parity.
class GameState {
public:
    GameState(int n, Property p, Role first, std::optional<Graph> start = std::nullopt);

    const Graph& graph() const { return g_; }
    const Property& property() const { return prop_; }
    Role first() const { return first_; }
    int start_edges() const { return start_edges_; }
    int moves_played() const { return g_.edge_count() - start_edges_; }
    Role mover() const { return moves_played() % 2 == 0 ? first_ : other(first_); }
    const std::vector<MoveRecord>& history() const { return history_; }
    std::optional<MoveRecord> last_move() const {
        if (history_.empty()) return std::nullopt;
        return history_.back();
    }

    // Legality with a monotone cache: an edge that once enters the property
    // stays inside it, so "illegal" verdicts are cached for the game's life.
    bool legal(Edge e) const;
    std::vector<Edge> legal_moves() const;
    std::optional<Edge> first_legal_edge() const;
    bool over() const { return !first_legal_edge().has_value(); }

    // Validates freeness and legality; throws NotFreeError / IllegalMoveError.
    void apply(Edge e);

private:
    Graph g_;
    Property prop_;
    Role first_;
    int start_edges_;
    std::vector<MoveRecord> history_;
    mutable std::vector<uint8_t> dead_;  // edge id -> known illegal-forever
    mutable int scan_hint_ = 0;
    mutable int scan_cache_at_ = -1;     // edge_count the cached scan belongs to
    mutable std::optional<Edge> scan_cache_;
};

struct Transcript {
    int n = 0;
    std::string property;
    Role first = Role::Max;
    std::vector<MoveRecord> moves;
    std::string final_graph6;
    int score = 0;

    std::string to_json() const;
    static Transcript from_json(const std::string& text);
};

class Strategy;

// Runs strategies to saturation. Invariant monitors may inspect the state
// after every move (and are also told who moved).
struct MoveObserver {
    virtual ~MoveObserver() = default;
    virtual void on_move(const GameState& s, const MoveRecord& m) = 0;
};

Transcript play(GameState s, Strategy& max_strategy, Strategy& mini_strategy,
                MoveObserver* observer = nullptr);

// Replays a transcript from scratch, validating every move; returns the
// final state.
GameState replay(const Transcript& t);

}  // namespace satgame
