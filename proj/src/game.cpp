#include "satgame/game.hpp"

#include <json.hpp>

#include "satgame/graph6.hpp"
#include "satgame/strategy.hpp"

namespace satgame {

Role parse_role(const std::string& s) {
    if (s == "max") return Role::Max;
    if (s == "mini") return Role::Mini;
    throw std::invalid_argument("unknown role: " + s);
}

GameState::GameState(int n, Property p, Role first, std::optional<Graph> start)
    : g_(start ? std::move(*start) : Graph(n)), prop_(std::move(p)), first_(first) {
    if (g_.vertex_count() != n) throw std::invalid_argument("start graph has wrong vertex count");
    if (satisfies(g_, prop_)) throw std::invalid_argument("start graph already satisfies the property");
    start_edges_ = g_.edge_count();
    dead_.assign(static_cast<size_t>(g_.max_edges()), 0);
}

bool GameState::legal(Edge e) const {
    if (g_.has_edge(e)) return false;
    int id = edge_id(g_.vertex_count(), e);
    if (dead_[id]) return false;
    Graph& m = const_cast<Graph&>(g_);  // restored below; monotone cache only
    m.add_edge(e);
    bool enters = satisfies(m, prop_);
    m.remove_edge(e);
    if (enters) dead_[id] = 1;
    return !enters;
}

std::vector<Edge> GameState::legal_moves() const {
    std::vector<Edge> out;
    for (int u = 0; u < g_.vertex_count(); ++u)
        for (int v = u + 1; v < g_.vertex_count(); ++v) {
            Edge e(u, v);
            if (!g_.has_edge(e) && legal(e)) out.push_back(e);
        }
    return out;
}

std::optional<Edge> GameState::first_legal_edge() const {
    if (scan_cache_at_ == g_.edge_count()) return scan_cache_;
    const int n = g_.vertex_count();
    const int total = g_.max_edges();
    scan_cache_at_ = g_.edge_count();
    scan_cache_ = std::nullopt;
    // everything before scan_hint_ is claimed or dead forever
    for (int id = scan_hint_; id < total; ++id) {
        if (dead_[id]) continue;
        Edge e = edge_from_id(n, id);
        if (g_.has_edge(e)) continue;
        if (legal(e)) {
            while (scan_hint_ < id &&
                   (dead_[scan_hint_] || g_.has_edge(edge_from_id(n, scan_hint_))))
                ++scan_hint_;
            scan_cache_ = e;
            break;
        }
    }
    return scan_cache_;
}

void GameState::apply(Edge e) {
    Role by = mover();
    if (g_.has_edge(e)) throw NotFreeError(by, e, "edge already present");
    if (!legal(e)) throw IllegalMoveError(by, e, "completes the property");
    g_.add_edge(e);
    history_.push_back({by, e});
}

Transcript play(GameState s, Strategy& max_strategy, Strategy& mini_strategy, MoveObserver* observer) {
    const long long move_cap = s.graph().max_edges() + 1;
    long long made = 0;
    while (true) {
        if (s.over()) break;
        if (++made > move_cap) throw std::logic_error("game exceeded the move bound");
        Strategy& who = s.mover() == Role::Max ? max_strategy : mini_strategy;
        Edge e = who.next_move(s);
        s.apply(e);
        if (observer) observer->on_move(s, s.history().back());
    }
    Transcript t;
    t.n = s.graph().vertex_count();
    t.property = s.property().name();
    t.first = s.first();
    t.moves = s.history();
    t.final_graph6 = to_graph6(s.graph());
    t.score = s.graph().edge_count();
    return t;
}

GameState replay(const Transcript& t) {
    GameState s(t.n, Property::parse(t.property), t.first);
    for (const MoveRecord& m : t.moves) {
        if (m.by != s.mover()) throw std::invalid_argument("transcript mover out of turn");
        s.apply(m.e);
    }
    return s;
}

std::string Transcript::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["property"] = property;
    j["first"] = role_name(first);
    j["moves"] = nlohmann::ordered_json::array();
    for (const MoveRecord& m : moves) j["moves"].push_back({{"by", role_name(m.by)}, {"u", m.e.u}, {"v", m.e.v}});
    j["final_graph6"] = final_graph6;
    j["score"] = score;
    return j.dump();
}

Transcript Transcript::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Transcript t;
    t.n = j.at("n").get<int>();
    t.property = j.at("property").get<std::string>();
    t.first = parse_role(j.at("first").get<std::string>());
    for (const auto& m : j.at("moves"))
        t.moves.push_back({parse_role(m.at("by").get<std::string>()),
                           Edge(m.at("u").get<int>(), m.at("v").get<int>())});
    t.final_graph6 = j.at("final_graph6").get<std::string>();
    t.score = j.at("score").get<int>();
    return t;
}

}  // namespace satgame
