#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satgame {

// Normalized vertex pair, u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a));
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on a fixed vertex set {0..n-1}.
// Adjacency is kept as one bitrow per vertex; edge count is cached.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    // Rejects out-of-range endpoints, loops and duplicate edges.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int max_edges() const { return n_ * (n_ - 1) / 2; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && test_bit(u, v);
    }
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    void add_edge(int u, int v);
    void add_edge(Edge e) { add_edge(e.u, e.v); }
    // Exact inverse of add_edge; restores bit-identical state.
    void remove_edge(int u, int v);
    void remove_edge(Edge e) { remove_edge(e.u, e.v); }

    int degree(int u) const;
    int min_degree() const;
    std::vector<int> neighbors(int u) const;

    // Row of u as words; bit v set iff uv is an edge.
    const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }
    int words_per_row() const { return words_; }

    std::vector<Edge> edges() const;
    // Non-edges in ascending lexicographic order.
    std::vector<Edge> free_edges() const;

    Graph complement() const;
    Graph induced(const std::vector<int>& keep) const;
    Graph permuted(const std::vector<int>& perm) const;  // vertex i -> perm[i]

    bool connected() const;
    std::vector<int> component_of(int start) const;  // sorted vertex list
    std::vector<std::vector<int>> components() const;

    // Upper-triangle bits (row-major), packed little-endian into bytes.
    std::string triangle_bits() const;
    // Same bits in a single word; requires max_edges() <= 64.
    uint64_t triangle_bits_u64() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
    }
    bool test_bit(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void set_bit(int u, int v) { bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63); }
    void clear_bit(int u, int v) { bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t(1) << (v & 63)); }

    int n_ = 0;
    int words_ = 0;
    int edge_count_ = 0;
    std::vector<uint64_t> bits_;
};

// Lexicographic rank of edge (u,v) among all pairs, and its inverse.
inline int edge_id(int n, Edge e) {
    return e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1);
}
Edge edge_from_id(int n, int id);

// Visits u's neighbors in increasing order.
template <typename F>
void for_each_neighbor(const Graph& g, int u, F&& f) {
    const uint64_t* r = g.row(u);
    for (int w = 0; w < g.words_per_row(); ++w) {
        uint64_t x = r[w];
        while (x) {
            int v = w * 64 + __builtin_ctzll(x);
            f(v);
            x &= x - 1;
        }
    }
}

}  // namespace satgame
