#pragma once

#include <random>
#include <string>
#include <vector>

#include "girreg/graph.hpp"

namespace girreg::testing {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph k4_minus_edge();
Graph disjoint_union(const std::vector<Graph>& parts);

struct Named {
    std::string name;
    Graph graph;
};

/// Small connected graphs with known exact values.
std::vector<Named> connected_corpus();

/// Disjoint unions and connected graphs used by the construction sweeps.
std::vector<Named> construction_corpus();

/// G(n, p) graph on n vertices.
Graph random_graph(int n, double p, std::mt19937& rng);

}  // namespace girreg::testing
