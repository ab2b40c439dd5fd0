#pragma once

#include <string>
#include <string_view>

#include "girreg/graph.hpp"
#include "girreg/walk.hpp"

namespace girreg {

/// Text form of a labeling:
///
///     group: Z4xZ3
///     0 1 : 3,2
///     ...
///     weights:
///     0 : 1,1
///     ...
///
/// Every edge of g is listed, u < v; the weights section is informational.
std::string format_labeling(const Graph& g, const EdgeLabeling& lab);

/// Reads the format above. Edges not listed are 0. The weights section is
/// ignored. Throws std::invalid_argument on malformed input or edges
/// missing from g.
EdgeLabeling parse_labeling(std::string_view text, const Graph& g);

}  // namespace girreg
