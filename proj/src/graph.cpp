#include "satgame/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace satgame {

Graph::Graph(int n) : n_(n), words_(n > 0 ? (n + 63) / 64 : 0) {
    if (n < 0 || n > 4096) throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (e.u == e.v) throw std::invalid_argument("loop edge");
        if (g.has_edge(e)) throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        g.add_edge(e);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge");
    if (test_bit(u, v)) throw std::invalid_argument("edge already present");
    set_bit(u, v);
    set_bit(v, u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !test_bit(u, v)) throw std::invalid_argument("edge not present");
    clear_bit(u, v);
    clear_bit(v, u);
    --edge_count_;
}

int Graph::degree(int u) const {
    check_vertex(u);
    const uint64_t* r = row(u);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::min_degree() const {
    int best = n_;
    for (int u = 0; u < n_; ++u) best = std::min(best, degree(u));
    return best;
}

std::vector<int> Graph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    for_each_neighbor(*this, u, [&](int v) { out.push_back(v); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(*this, u, [&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

std::vector<Edge> Graph::free_edges() const {
    std::vector<Edge> out;
    out.reserve(max_edges() - edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!test_bit(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!test_bit(u, v)) g.add_edge(u, v);
    return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(*this, u, [&](int v) {
            if (v > u) g.add_edge(perm[u], perm[v]);
        });
    return g;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return static_cast<int>(component_of(0).size()) == n_;
}

std::vector<int> Graph::component_of(int start) const {
    check_vertex(start);
    std::vector<uint64_t> seen(words_, 0);
    std::vector<int> stack{start}, out;
    seen[start >> 6] |= uint64_t(1) << (start & 63);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        const uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            uint64_t fresh = r[w] & ~seen[w];
            seen[w] |= fresh;
            while (fresh) {
                stack.push_back(w * 64 + __builtin_ctzll(fresh));
                fresh &= fresh - 1;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<bool> done(n_, false);
    std::vector<std::vector<int>> out;
    for (int u = 0; u < n_; ++u) {
        if (done[u]) continue;
        out.push_back(component_of(u));
        for (int v : out.back()) done[v] = true;
    }
    return out;
}

std::string Graph::triangle_bits() const {
    std::string out((static_cast<size_t>(max_edges()) + 7) / 8, '\0');
    int pos = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v, ++pos)
            if (test_bit(u, v)) out[pos >> 3] = static_cast<char>(out[pos >> 3] | (1 << (pos & 7)));
    return out;
}

uint64_t Graph::triangle_bits_u64() const {
    if (max_edges() > 64) throw std::invalid_argument("graph too large for packed triangle bits");
    uint64_t out = 0;
    int pos = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v, ++pos)
            if (test_bit(u, v)) out |= uint64_t(1) << pos;
    return out;
}

Edge edge_from_id(int n, int id) {
    if (id < 0 || id >= n * (n - 1) / 2) throw std::out_of_range("edge id out of range");
    int u = 0;
    while (id >= n - 1 - u) {
        id -= n - 1 - u;
        ++u;
    }
    return Edge(u, u + 1 + id);
}

}  // namespace satgame
