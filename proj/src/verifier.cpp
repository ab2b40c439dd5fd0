#include "girreg/verifier.hpp"

#include <map>
#include <stdexcept>

namespace girreg {

WeightTable weights(const Graph& g, const EdgeLabeling& lab, const GroupSpec& spec)
{
    if (!(lab.spec() == spec)) {
        throw std::invalid_argument("labeling is over " + lab.spec().name() + ", not " + spec.name());
    }
    if (lab.edges() != g.edges()) {
        throw std::invalid_argument("labeling belongs to a different graph");
    }
    WeightTable w(static_cast<std::size_t>(g.vertex_count()), spec.zero());
    const auto& edges = g.edges();
    const auto& labels = lab.labels();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        w[edges[e].first] = add(spec, w[edges[e].first], labels[e]);
        w[edges[e].second] = add(spec, w[edges[e].second], labels[e]);
    }
    return w;
}

std::optional<Collision> find_collision(const Graph& g, const EdgeLabeling& lab,
                                        const GroupSpec& spec)
{
    const auto w = weights(g, lab, spec);
    // First two vertices carrying each value; the answer is the least such pair.
    std::map<GroupElement, std::pair<Vertex, Vertex>> seen;
    std::optional<Collision> best;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [it, inserted] = seen.try_emplace(w[v], v, -1);
        if (inserted || it->second.second != -1) {
            continue;
        }
        it->second.second = v;
        const auto pair = it->second;
        if (!best || pair < std::pair{best->u, best->v}) {
            best = Collision{pair.first, pair.second, w[v]};
        }
    }
    return best;
}

}  // namespace girreg
