#pragma once

#include <optional>
#include <vector>

#include "girreg/graph.hpp"
#include "girreg/group.hpp"

namespace girreg {

/// Parity of the number of EDGES on a walk.
///
/// Graph-labeling literature counts vertices instead: its "even walk" (even
/// vertex count) is an Odd walk here, and its "odd walk" is an Even walk.
enum class EdgeParity { Even, Odd };

struct Walk {
    std::vector<Vertex> vertices;

    std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool operator==(const Walk&) const = default;
};

/// Group labels on the edges of one graph, zero until assigned.
class EdgeLabeling {
public:
    EdgeLabeling(const Graph& g, GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<GroupElement>& labels() const { return labels_; }

    /// Throws std::invalid_argument if uv is not an edge.
    const GroupElement& label(Vertex u, Vertex v) const;
    void set(Vertex u, Vertex v, GroupElement value);
    void add_to(Vertex u, Vertex v, const GroupElement& delta);

    bool operator==(const EdgeLabeling&) const = default;

private:
    std::size_t slot(Vertex u, Vertex v) const;

    GroupSpec spec_;
    std::vector<Edge> edges_;
    std::vector<GroupElement> labels_;
};

/// Shortest walk from `from` to `to` whose edge count has the given parity,
/// or nothing if none exists. Among shortest walks the lexicographically
/// least vertex sequence is returned. Throws std::out_of_range for a bad
/// vertex.
std::optional<Walk> shortest_walk(const Graph& g, Vertex from, Vertex to, EdgeParity parity);

/// Adds a to edges at odd positions (1-based from the start) and -a to edges
/// at even positions. Repeated edges accumulate.
void apply_walk_increment(EdgeLabeling& lab, const Walk& w, const GroupElement& a);

/// Along the shortest odd-edge walk from x1 to x2: both endpoints gain a
/// (x1 gains 2a when x1 == x2). Throws HypothesisError if no such walk.
void phi_e(EdgeLabeling& lab, const Graph& g, Vertex x1, Vertex x2, const GroupElement& a);

/// Along the shortest even-edge walk from x1 to x2, x1 != x2: x1 gains a and
/// x2 gains -a. Throws std::invalid_argument when x1 == x2 and
/// HypothesisError if no such walk.
void phi_o(EdgeLabeling& lab, const Graph& g, Vertex x1, Vertex x2, const GroupElement& a);

}  // namespace girreg
