#pragma once

#include <string>
#include <string_view>

#include "pratio/graph.hpp"

namespace pratio {

// Short-form graph6 only (n <= 62). Upper triangle, column-major, six bits
// per printable byte offset by 63, zero-padded.
inline constexpr int kGraph6MaxOrder = 62;

/// Accepts a trailing '\n' (and '\r'). Throws std::invalid_argument on a
/// malformed header, long-form header, bad character, wrong length or
/// nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// No trailing newline.
std::string encode_graph6(const Graph& g);

}  // namespace pratio
