#include "girreg/walk.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "girreg/errors.hpp"

namespace girreg {

EdgeLabeling::EdgeLabeling(const Graph& g, GroupSpec spec)
    : spec_(std::move(spec))
    , edges_(g.edges())
    , labels_(g.edge_count(), spec_.zero())
{
}

std::size_t EdgeLabeling::slot(Vertex u, Vertex v) const
{
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge of the labeled graph");
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

const GroupElement& EdgeLabeling::label(Vertex u, Vertex v) const
{
    return labels_[slot(u, v)];
}

void EdgeLabeling::set(Vertex u, Vertex v, GroupElement value)
{
    if (!spec_.contains(value)) {
        throw std::invalid_argument("label is not an element of " + spec_.name());
    }
    labels_[slot(u, v)] = std::move(value);
}

void EdgeLabeling::add_to(Vertex u, Vertex v, const GroupElement& delta)
{
    auto& cur = labels_[slot(u, v)];
    cur = add(spec_, cur, delta);
}

std::optional<Walk> shortest_walk(const Graph& g, Vertex from, Vertex to, EdgeParity parity)
{
    const int n = g.vertex_count();
    if (from < 0 || from >= n || to < 0 || to >= n) {
        throw std::out_of_range("walk endpoint out of range");
    }
    // Distances to the target state (to, parity) in the graph x Z_2 layer
    // graph. The layer graph is undirected, so one BFS from the target gives
    // the remaining length from every state.
    const int target_layer = parity == EdgeParity::Odd ? 1 : 0;
    std::vector<std::array<int, 2>> dist(static_cast<std::size_t>(n), {-1, -1});
    std::deque<std::pair<Vertex, int>> queue;
    dist[to][target_layer] = 0;
    queue.emplace_back(to, target_layer);
    while (!queue.empty()) {
        auto [v, layer] = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w][1 - layer] == -1) {
                dist[w][1 - layer] = dist[v][layer] + 1;
                queue.emplace_back(w, 1 - layer);
            }
        }
    }
    if (dist[from][0] == -1) {
        return std::nullopt;
    }
    // Greedy walk forward, always to the least neighbour one step closer.
    Walk walk{{from}};
    Vertex v = from;
    int layer = 0;
    while (dist[v][layer] > 0) {
        for (Vertex w : g.neighbors(v)) {
            if (dist[w][1 - layer] == dist[v][layer] - 1) {
                v = w;
                layer = 1 - layer;
                break;
            }
        }
        walk.vertices.push_back(v);
    }
    return walk;
}

void apply_walk_increment(EdgeLabeling& lab, const Walk& w, const GroupElement& a)
{
    const GroupElement minus_a = negate(lab.spec(), a);
    for (std::size_t j = 1; j < w.vertices.size(); ++j) {
        lab.add_to(w.vertices[j - 1], w.vertices[j], j % 2 == 1 ? a : minus_a);
    }
}

void phi_e(EdgeLabeling& lab, const Graph& g, Vertex x1, Vertex x2, const GroupElement& a)
{
    auto w = shortest_walk(g, x1, x2, EdgeParity::Odd);
    if (!w) {
        throw HypothesisError("no odd-length walk between " + std::to_string(x1) + " and " +
                              std::to_string(x2));
    }
    apply_walk_increment(lab, *w, a);
}

void phi_o(EdgeLabeling& lab, const Graph& g, Vertex x1, Vertex x2, const GroupElement& a)
{
    if (x1 == x2) {
        throw std::invalid_argument("phi_o needs distinct endpoints");
    }
    auto w = shortest_walk(g, x1, x2, EdgeParity::Even);
    if (!w) {
        throw HypothesisError("no even-length walk between " + std::to_string(x1) + " and " +
                              std::to_string(x2));
    }
    apply_walk_increment(lab, *w, a);
}

}  // namespace girreg
