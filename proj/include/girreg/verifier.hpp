#pragma once

#include <optional>
#include <vector>

#include "girreg/graph.hpp"
#include "girreg/group.hpp"
#include "girreg/walk.hpp"

namespace girreg {

/// Weighted degree of every vertex, indexed by vertex.
using WeightTable = std::vector<GroupElement>;

struct Collision {
    Vertex u;
    Vertex v;
    GroupElement value;

    bool operator==(const Collision&) const = default;
};

/// w(v) = sum of the labels on edges incident to v. Throws
/// std::invalid_argument if the labeling is over a different group or does
/// not belong to g.
WeightTable weights(const Graph& g, const EdgeLabeling& lab, const GroupSpec& spec);

/// The lexicographically least pair (u, v), u < v, with equal weights.
std::optional<Collision> find_collision(const Graph& g, const EdgeLabeling& lab,
                                        const GroupSpec& spec);

inline bool is_irregular(const Graph& g, const EdgeLabeling& lab, const GroupSpec& spec)
{
    return !find_collision(g, lab, spec).has_value();
}

}  // namespace girreg
