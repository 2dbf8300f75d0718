#include "satgame/property.hpp"

#include "satgame/graph6.hpp"

namespace satgame {
namespace {

std::optional<Graph> named_pattern(const std::string& s) {
    if (s.size() == 2 && (s[0] == 'K' || s[0] == 'C' || s[0] == 'P') && s[1] >= '2' && s[1] <= '9') {
        int m = s[1] - '0';
        if (s[0] == 'K') return Graph::complete(m);
        if (s[0] == 'C' && m >= 3) return Graph::cycle(m);
        if (s[0] == 'P') return Graph::path(m);
    }
    return std::nullopt;
}

int parse_param(const std::string& text, size_t colon) {
    if (colon == std::string::npos || colon + 1 >= text.size())
        throw std::invalid_argument("property needs a parameter: " + text);
    return std::stoi(text.substr(colon + 1));
}

}  // namespace

Property Property::connectivity(int k) {
    if (k < 1) throw std::invalid_argument("connectivity parameter must be >= 1");
    return Property(Kind::Connectivity, k);
}

Property Property::chromatic_above(int k) {
    if (k < 1) throw std::invalid_argument("chromatic parameter must be >= 1");
    return Property(Kind::ChromaticAbove, k);
}

Property Property::matching(int k) {
    if (k < 1) throw std::invalid_argument("matching parameter must be >= 1");
    return Property(Kind::Matching, k);
}

Property Property::perfect_matching() { return Property(Kind::PerfectMatching, 0); }

Property Property::independence_below(int k) {
    if (k < 1) throw std::invalid_argument("independence parameter must be >= 1");
    return Property(Kind::IndependenceBelow, k);
}

Property Property::hamiltonicity() { return Property(Kind::Hamiltonicity, 0); }

Property Property::contains_subgraph(Graph pattern) {
    if (pattern.vertex_count() < 2) throw std::invalid_argument("pattern needs at least 2 vertices");
    if (pattern.vertex_count() > 6) throw std::invalid_argument("pattern larger than 6 vertices not supported");
    Property p(Kind::ContainsSubgraph, 0);
    p.pattern_ = std::make_shared<Graph>(std::move(pattern));
    return p;
}

const Graph& Property::pattern() const {
    if (!pattern_) throw std::logic_error("property has no pattern graph");
    return *pattern_;
}

std::string Property::name() const {
    switch (kind_) {
        case Kind::Connectivity: return "connectivity:" + std::to_string(k_);
        case Kind::ChromaticAbove: return "chromatic-gt:" + std::to_string(k_);
        case Kind::Matching: return "matching:" + std::to_string(k_);
        case Kind::PerfectMatching: return "pm";
        case Kind::IndependenceBelow: return "independence-lt:" + std::to_string(k_);
        case Kind::Hamiltonicity: return "hamiltonicity";
        case Kind::ContainsSubgraph: return "contains:" + to_graph6(pattern());
    }
    return "?";
}

Property Property::parse(const std::string& text) {
    size_t colon = text.find(':');
    std::string head = text.substr(0, colon);
    if (head == "connectivity") return connectivity(parse_param(text, colon));
    if (head == "chromatic-gt") return chromatic_above(parse_param(text, colon));
    if (head == "matching") return matching(parse_param(text, colon));
    if (head == "pm") return perfect_matching();
    if (head == "independence-lt") return independence_below(parse_param(text, colon));
    if (head == "hamiltonicity") return hamiltonicity();
    if (head == "contains") {
        if (colon == std::string::npos) throw std::invalid_argument("contains needs a pattern");
        std::string spec = text.substr(colon + 1);
        if (auto g = named_pattern(spec)) return contains_subgraph(*g);
        return contains_subgraph(from_graph6(spec));
    }
    throw std::invalid_argument("unknown property: " + text);
}

}  // namespace satgame
