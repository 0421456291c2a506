#pragma once

#include <string>
#include <string_view>

#include "sdt/graph.hpp"

namespace sdt {

/// Encodes a graph in graph6 format (single-byte order header, so n <= 62).
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line. Throws std::invalid_argument on malformed input
/// (bad header, wrong payload length, characters outside the graph6 alphabet)
/// and cap_error for multi-byte order headers (n > 62 is out of scope).
Graph graph6_decode(std::string_view text);

}  // namespace sdt
