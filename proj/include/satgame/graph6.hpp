#pragma once

#include <string>

#include "satgame/graph.hpp"

namespace satgame {

// graph6 text format: printable 63-offset sextets, column-major upper
// triangle, zero padding to a multiple of 6 bits.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

}  // namespace satgame
