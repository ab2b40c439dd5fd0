#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace girreg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    /// Throws std::invalid_argument on loops, duplicate edges or
    /// out-of-range endpoints. Endpoints may be given in either order.
    Graph(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges sorted lexicographically with u < v.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Neighbours of v in increasing order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

    /// Index into edges(), or -1 if u and v are not adjacent.
    int edge_index(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

enum class ComponentTag {
    TooSmall,
    BipartiteBothEven,
    BipartiteBothOdd,
    BipartiteMixed,
    NonBipartiteOdd,
    NonBipartiteEven,
    OddStar,
};

std::string_view to_string(ComponentTag tag);

struct Component {
    std::vector<Vertex> vertices;  // ascending
    std::vector<Edge> edges;
    /// Color classes when the component has no odd cycle; the first class
    /// holds the smallest vertex.
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition;
    ComponentTag tag = ComponentTag::TooSmall;

    int order() const { return static_cast<int>(vertices.size()); }
    bool bipartite() const { return bipartition.has_value(); }
};

/// Connected components ordered by smallest vertex, each 2-colored by BFS.
std::vector<Component> components(const Graph& g);

struct ComponentCensus {
    int r = 0;                // components
    int p = 0;                // odd order
    int even_nonbipartite = 0;
    int bipartite = 0;
    int p1 = 0;  // bipartite, both classes odd
    int p2 = 0;  // bipartite, both classes even
    int p3 = 0;  // bipartite, one class odd and one even
    int p4 = 0;  // non-bipartite, odd order
    int p5 = 0;  // non-bipartite, even order

    /// Vertex triples needed by the odd-cyclic construction.
    int triple_demand() const { return 2 * p1 + p3 + p4; }
};

ComponentCensus census(const Graph& g);

/// Hypothesis families of the two main constructions.
enum class Hypothesis {
    /// Every component has order >= 3 and every bipartite component has
    /// both color classes of even order.
    EvenColorClasses,
    /// Every component has order >= 3 and none is a star K_{1,2u+1}, u >= 1.
    NoOddStar,
};

struct Violation {
    int component;  // index into components(g)
    std::string reason;
};

/// Empty result means the hypothesis holds.
std::vector<Violation> hypothesis_check(const Graph& g, Hypothesis h);
bool satisfies(const Graph& g, Hypothesis h);

/// Edge-list text: optional '#' comments, then "n m", then m lines "u v".
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace girreg
