#include "satgame/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <vector>

namespace satgame {
namespace {

// Ordered partition of {0..n-1} as a list of cells.
using Cells = std::vector<std::vector<int>>;

// Splits every cell by neighbor counts into every other cell until the
// partition is equitable. Cell order is deterministic, so the refined
// partition is an isomorphism invariant of (graph, input partition).
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t splitter = 0; splitter < cells.size() && !changed; ++splitter) {
            const std::vector<int> splitter_cell = cells[splitter];
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::map<int, std::vector<int>> by_count;
                for (int v : cells[ci]) {
                    int cnt = 0;
                    for (int s : splitter_cell) cnt += g.has_edge(v, s) ? 1 : 0;
                    by_count[cnt].push_back(v);
                }
                if (by_count.size() <= 1) continue;
                Cells next;
                next.reserve(cells.size() + by_count.size());
                for (size_t cj = 0; cj < cells.size(); ++cj) {
                    if (cj == ci) {
                        for (auto& [cnt, vs] : by_count) next.push_back(std::move(vs));
                    } else {
                        next.push_back(std::move(cells[cj]));
                    }
                }
                cells = std::move(next);
                changed = true;
                break;
            }
        }
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::string best;       // max triangle-bit string over explored labelings
    bool have_best = false;
    std::vector<int> best_perm;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    std::string bits_under(const std::vector<int>& position_of) {
        std::string out((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
        // position_of[v] = new label of v; emit row-major over new labels
        std::vector<int> vertex_at(n);
        for (int v = 0; v < n; ++v) vertex_at[position_of[v]] = v;
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pos)
                if (g.has_edge(vertex_at[i], vertex_at[j]))
                    out[pos >> 3] = static_cast<char>(out[pos >> 3] | (1 << (pos & 7)));
        return out;
    }

    // Two vertices in the same cell that are twins (equal rows after
    // ignoring each other) generate identical subtrees; explore one.
    static bool twins(const Graph& g, int u, int v) {
        const uint64_t* ru = g.row(u);
        const uint64_t* rv = g.row(v);
        for (int w = 0; w < g.words_per_row(); ++w) {
            uint64_t a = ru[w], b = rv[w];
            if (w == (v >> 6)) a &= ~(uint64_t(1) << (v & 63));
            if (w == (u >> 6)) b &= ~(uint64_t(1) << (u & 63));
            if (a != b) return false;
        }
        return true;
    }

    void search(Cells cells) {
        refine(g, cells);
        int branch_cell = -1;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                branch_cell = static_cast<int>(i);
                break;
            }
        if (branch_cell < 0) {
            std::vector<int> position_of(n);
            for (size_t i = 0; i < cells.size(); ++i) position_of[cells[i][0]] = static_cast<int>(i);
            std::string cand = bits_under(position_of);
            if (!have_best || cand > best) {
                best = std::move(cand);
                best_perm = std::move(position_of);
                have_best = true;
            }
            return;
        }
        const std::vector<int> cell = cells[static_cast<size_t>(branch_cell)];
        std::vector<int> tried;
        for (int v : cell) {
            bool dup = false;
            for (int t : tried)
                if (twins(g, t, v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(v);
            Cells next;
            next.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == branch_cell) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int w : cell)
                        if (w != v) rest.push_back(w);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(cells[i]);
                }
            }
            search(std::move(next));
        }
    }
};

std::string exact_key(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return std::string(1, static_cast<char>(n));
    CanonSearch s(g);
    Cells start{std::vector<int>(static_cast<size_t>(n))};
    for (int v = 0; v < n; ++v) start[0][static_cast<size_t>(v)] = v;
    s.search(std::move(start));
    std::string key;
    key.push_back(static_cast<char>(n));
    key += s.best;
    return key;
}

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Non-exact partition key for large n: degree sequence plus sorted
// per-vertex hashes of sorted neighbor degree lists.
std::string large_key(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<uint64_t> vh(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        for_each_neighbor(g, v, [&](int u) { nd.push_back(deg[u]); });
        std::sort(nd.begin(), nd.end());
        uint64_t h = mix64(static_cast<uint64_t>(deg[v]));
        for (int d : nd) h = mix64(h ^ static_cast<uint64_t>(d));
        vh[v] = h;
    }
    std::sort(vh.begin(), vh.end());
    std::string key = "H";
    key.append(reinterpret_cast<const char*>(&n), sizeof(n));
    int e = g.edge_count();
    key.append(reinterpret_cast<const char*>(&e), sizeof(e));
    for (uint64_t h : vh) key.append(reinterpret_cast<const char*>(&h), sizeof(h));
    return key;
}

}  // namespace

std::string canonical_key(const Graph& g) {
    if (g.vertex_count() <= key_exact_limit) return exact_key(g);
    return large_key(g);
}

Graph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > key_exact_limit) throw std::invalid_argument("canonical_form: n above exact limit");
    if (n <= 1) return g;
    CanonSearch s(g);
    Cells start{std::vector<int>(static_cast<size_t>(n))};
    for (int v = 0; v < n; ++v) start[0][static_cast<size_t>(v)] = v;
    s.search(std::move(start));
    return g.permuted(s.best_perm);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() <= key_exact_limit) return canonical_key(a) == canonical_key(b);
    throw std::invalid_argument("are_isomorphic: n above exact limit");
}

}  // namespace satgame
