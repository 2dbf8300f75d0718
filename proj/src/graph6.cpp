#include "satgame/graph6.hpp"

#include <cstdint>

namespace satgame {
namespace {

void append_sextets(std::string& out, uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph too large for graph6");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        append_sextets(out, static_cast<uint64_t>(n), 3);
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(const std::string& text) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };

    int n;
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    if (static_cast<unsigned char>(text[0]) == 126) {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw std::invalid_argument("graph6: n >= 2^18 not supported");
        long v = 0;
        for (int i = 0; i < 3; ++i) v = (v << 6) | next();
        if (v > 4096) throw std::invalid_argument("graph6: vertex count too large");
        n = static_cast<int>(v);
    } else {
        n = next();
    }

    Graph g(n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> --nbits) & 1) g.add_edge(u, v);
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != text.size()) throw std::invalid_argument("graph6: trailing garbage");
    return g;
}

}  // namespace satgame
