#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "girreg/graph.hpp"
#include "girreg/group.hpp"

namespace girreg {

/// Exhaustive labeling search over element indices 0..order-1.
///
/// Edges are visited in an order that completes vertices early (BFS vertex
/// order, edges keyed by their later endpoint). When a vertex's last edge
/// is assigned its weight is final and must differ from every earlier
/// completed weight.
struct SearchProblem {
    int order = 0;
    std::vector<int> sum;                      // sum[a * order + b]
    int vertex_count = 0;
    std::vector<Edge> edges;                   // in search order
    std::vector<int> original_index;           // search position -> Graph::edges() index
    std::vector<std::vector<Vertex>> completes; // vertices final after position i
    std::vector<Vertex> isolated;               // final from the start, weight 0

    double log10_space() const;
};

SearchProblem make_search_problem(const Graph& g, const GroupSpec& spec);

/// Lexicographically least irregular label vector (search order), if any.
/// Single-threaded reference implementation.
std::optional<std::vector<int>> search_serial(const SearchProblem& problem);

/// Same result as search_serial. Splits the first edges' label choices
/// across OpenMP threads and keeps the least successful prefix.
/// jobs <= 0 uses the OpenMP default.
std::optional<std::vector<int>> search_parallel(const SearchProblem& problem, int jobs);

}  // namespace girreg
