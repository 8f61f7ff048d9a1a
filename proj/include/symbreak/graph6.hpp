#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Standard graph6 text encoding (bit-packed upper triangle, column major).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace symbreak
