#include "satgame/long_path.hpp"

#include <algorithm>

namespace satgame {

int least_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return v;
    throw std::logic_error("no isolated vertex available");
}

PathBuilder::PathBuilder(int target) : target_(target) {
    if (target < 1) throw std::invalid_argument("path target must be >= 1");
}

bool PathBuilder::on_path(int v) const {
    return std::find(path_.begin(), path_.end(), v) != path_.end();
}

Edge PathBuilder::open_or_extend_first(const GameState& s) {
    auto last = s.last_move();
    if (!last) {
        path_ = {0, 1};
        return Edge(0, 1);
    }
    // second player: extend the opponent's opening edge to a path of length 2
    int a = last->e.u, b = last->e.v;
    int z = 0;
    while (z == a || z == b) ++z;
    path_ = {a, b, z};
    return Edge(b, z);
}

Edge PathBuilder::move(const GameState& s) {
    if (done_) throw std::logic_error("path builder already finished");
    const Graph& g = s.graph();
    Edge claim(0, 1);
    if (path_.empty()) {
        claim = open_or_extend_first(s);
    } else {
        auto last = s.last_move();
        if (!last) throw std::logic_error("path builder expects an opponent move");
        int x = last->e.u, y = last->e.v;
        bool xin = on_path(x), yin = on_path(y);
        if (!xin && yin) {
            std::swap(x, y);
            std::swap(xin, yin);
        }
        int tail = path_.back(), head = path_.front();
        if (xin && yin) {
            // (1) both on the path: extend by an isolated vertex
            int z = least_isolated_vertex(g);
            claim = Edge(tail, z);
            path_.push_back(z);
        } else if (!xin && !yin) {
            // (2) both off: absorb the whole opponent edge at the tail
            claim = Edge(tail, x);
            path_.push_back(x);
            path_.push_back(y);
        } else if (x == head || x == tail) {
            // (3) opponent extended an endpoint: extend once more by an
            // isolated vertex
            int z = least_isolated_vertex(g);
            claim = Edge(y, z);
            if (x == tail) {
                path_.push_back(y);
                path_.push_back(z);
            } else {
                path_.insert(path_.begin(), {z, y});
            }
        } else {
            // (4) interior-to-outside: pull the fresh endpoint to the tail
            claim = Edge(tail, y);
            path_.push_back(y);
        }
    }
    fix_orientation_after(s, claim);
    int len = length();
    if (len == target_ || len == target_ + 1) done_ = true;
    return claim;
}

// The orientation invariant (degree-one endpoint first) is re-established
// against the graph as it will look once `claim` is played.
void PathBuilder::fix_orientation_after(const GameState& s, Edge claim) {
    const Graph& g = s.graph();
    auto degree_after = [&](int v) {
        return g.degree(v) + ((v == claim.u || v == claim.v) ? 1 : 0);
    };
    if (degree_after(path_.front()) == 1) return;
    if (degree_after(path_.back()) != 1)
        throw std::logic_error("path lost both degree-one endpoints");
    std::reverse(path_.begin(), path_.end());
}

std::string PathBuilder::memory_key() const {
    std::string key;
    key.reserve(2 * path_.size() + 3);
    key.push_back(static_cast<char>(done_ ? 1 : 0));
    auto put16 = [&key](int v) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put16(target_);
    for (int v : path_) put16(v);
    return key;
}

Edge LongPathStrategy::next_move(const GameState& s) {
    if (!builder_.done()) return builder_.move(s);
    return trivial_move(s);
}

}  // namespace satgame
