#include <doctest.h>

#include <stdexcept>

#include <functional>
#include <random>

#include "corpus.hpp"
#include "girreg/graph.hpp"

using namespace girreg;
using namespace girreg::testing;

namespace {

// Odd simple cycle through the component of `start`, by exhaustive DFS.
bool has_odd_cycle(const Graph& g, const std::vector<Vertex>& vertices)
{
    std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
    std::function<bool(Vertex, Vertex, int)> dfs = [&](Vertex start, Vertex v, int len) {
        for (Vertex w : g.neighbors(v)) {
            if (w == start && len >= 3 && len % 2 == 1) {
                return true;
            }
            if (!on_path[w] && w > start) {
                on_path[w] = true;
                const bool found = dfs(start, w, len + 1);
                on_path[w] = false;
                if (found) {
                    return true;
                }
            }
        }
        return false;
    };
    for (Vertex s : vertices) {
        on_path[s] = true;
        const bool found = dfs(s, s, 1);
        on_path[s] = false;
        if (found) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("parse_graph")
{
    const auto k3 = parse_graph("3 3\n0 1\n1 2\n0 2");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    const auto k13 = parse_graph("# claw\n4 3\n0 1\n0 2\n0 3\n");
    CHECK(k13.degree(0) == 3);
    CHECK(k13.edge_index(0, 3) == 2);
    CHECK(k13.edge_index(2, 3) == -1);
    CHECK_THROWS_AS(parse_graph("3 1\n0 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 1\n0 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 1\n0 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3 1\n0 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
    CHECK(parse_graph(format_graph(k3)).edges() == k3.edges());
}

TEST_CASE("components and classification")
{
    const auto two_k3 = disjoint_union({complete(3), complete(3)});
    auto cs = components(two_k3);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].tag == ComponentTag::NonBipartiteOdd);
    CHECK(cs[1].tag == ComponentTag::NonBipartiteOdd);
    CHECK(cs[1].vertices == std::vector<Vertex>{3, 4, 5});

    cs = components(disjoint_union({cycle(4), complete(3)}));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].tag == ComponentTag::BipartiteBothEven);
    CHECK(cs[0].bipartition->first == std::vector<Vertex>{0, 2});
    CHECK(cs[0].bipartition->second == std::vector<Vertex>{1, 3});
    CHECK(cs[1].tag == ComponentTag::NonBipartiteOdd);

    CHECK(components(star(3))[0].tag == ComponentTag::OddStar);
    CHECK(components(star(5))[0].tag == ComponentTag::OddStar);
    CHECK(components(star(4))[0].tag == ComponentTag::BipartiteMixed);
    CHECK(components(path(2))[0].tag == ComponentTag::TooSmall);
    CHECK(components(cycle(6))[0].tag == ComponentTag::BipartiteBothOdd);
    CHECK(components(complete(4))[0].tag == ComponentTag::NonBipartiteEven);
    CHECK(components(path(4))[0].tag == ComponentTag::BipartiteBothEven);
    CHECK(components(Graph(3, {}))[2].tag == ComponentTag::TooSmall);
}

TEST_CASE("census")
{
    auto cs = census(disjoint_union({cycle(6), complete(3)}));
    CHECK(cs.r == 2);
    CHECK(cs.p1 == 1);
    CHECK(cs.p4 == 1);
    CHECK(cs.p2 + cs.p3 + cs.p5 == 0);
    CHECK(cs.triple_demand() == 3);

    cs = census(disjoint_union({cycle(4), cycle(4)}));
    CHECK(cs.p2 == 2);
    CHECK(cs.r == 2);
    CHECK(cs.bipartite == 2);

    cs = census(disjoint_union({complete(3), complete(4)}));
    CHECK(cs.p4 == 1);
    CHECK(cs.p5 == 1);
    CHECK(cs.p == 1);
    CHECK(cs.even_nonbipartite == 1);
}

TEST_CASE("hypothesis_check")
{
    const auto two_k3 = disjoint_union({complete(3), complete(3)});
    CHECK(satisfies(two_k3, Hypothesis::EvenColorClasses));
    const auto c6k3 = disjoint_union({cycle(6), complete(3)});
    const auto v = hypothesis_check(c6k3, Hypothesis::EvenColorClasses);
    REQUIRE(v.size() == 1);
    CHECK(v[0].component == 0);
    CHECK(v[0].reason.find("3+3") != std::string::npos);
    CHECK(satisfies(c6k3, Hypothesis::NoOddStar));
    CHECK_FALSE(satisfies(disjoint_union({star(3), complete(3)}), Hypothesis::NoOddStar));
    CHECK_FALSE(satisfies(disjoint_union({path(2), complete(3)}), Hypothesis::NoOddStar));
    CHECK_FALSE(satisfies(disjoint_union({path(2), complete(3)}), Hypothesis::EvenColorClasses));
    CHECK(satisfies(star(4), Hypothesis::NoOddStar));
}

TEST_CASE("2-coloring succeeds iff there is no odd cycle")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto g = random_graph(n, 0.15 + 0.1 * (trial % 5), rng);
        for (const auto& c : components(g)) {
            CHECK(c.bipartite() == !has_odd_cycle(g, c.vertices));
            if (c.bipartite()) {
                for (auto [u, w] : c.edges) {
                    const auto& a = c.bipartition->first;
                    const bool u_in_a = std::find(a.begin(), a.end(), u) != a.end();
                    const bool w_in_a = std::find(a.begin(), a.end(), w) != a.end();
                    CHECK(u_in_a != w_in_a);
                }
            }
        }
        const auto cs = census(g);
        CHECK(cs.p1 + cs.p2 + cs.p3 + cs.p4 + cs.p5 == cs.r);
        // Bipartite components with both classes even have even order, so
        // every odd component is non-bipartite under the hypothesis.
        if (satisfies(g, Hypothesis::EvenColorClasses)) {
            for (const auto& c : components(g)) {
                if (c.order() % 2 == 1) {
                    CHECK_FALSE(c.bipartite());
                }
            }
        }
        if (satisfies(g, Hypothesis::NoOddStar)) {
            CHECK(3 * cs.triple_demand() <= n);
            CHECK((n - 3 * cs.triple_demand()) % 2 == 0);
        }
    }
}
