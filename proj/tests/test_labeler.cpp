#include <doctest.h>

#include <random>
#include <stdexcept>

#include "corpus.hpp"
#include "girreg/errors.hpp"
#include "girreg/labeler.hpp"
#include "girreg/verifier.hpp"

using namespace girreg;
using namespace girreg::testing;

namespace {

bool irregular(const Graph& g, const EdgeLabeling& lab)
{
    return is_irregular(g, lab, lab.spec());
}

std::vector<GroupSpec> groups_with_at_most_one_involution(int order)
{
    std::vector<GroupSpec> out;
    for (const auto& spec : groups_of_order(order)) {
        if (involutions(spec).size() <= 1) {
            out.push_back(spec);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("bounds")
{
    CHECK(bounds(complete(3)).lower == 3);
    CHECK(bounds(complete(3)).upper == 3);
    const auto b6 = bounds(cycle(6));
    CHECK(b6.lower == 7);
    CHECK(b6.upper == 7);
    const auto b8 = bounds(cycle(8));
    CHECK(b8.lower == 8);
    CHECK(b8.upper == 9);
    CHECK(bounds(path(5)).upper == 5);
}

TEST_CASE("label_with_group examples")
{
    const auto k3 = complete(3);
    CHECK(irregular(k3, label_with_group(k3, make_group({3}))));

    const auto two_k3 = disjoint_union({complete(3), complete(3)});
    const auto lab = label_with_group(two_k3, make_group({7}));
    CHECK(lab.spec() == make_group({7}));
    CHECK(irregular(two_k3, lab));

    // Three involutions.
    CHECK_THROWS_AS(label_with_group(two_k3, make_group({4, 2})), HypothesisError);
    // Order below n.
    CHECK_THROWS_AS(label_with_group(two_k3, make_group({5})), HypothesisError);
    // n = 2 mod 4 needs order n + 1.
    CHECK_THROWS_AS(label_with_group(two_k3, make_group({3, 2})), HypothesisError);
    // Both color classes of C6 are odd.
    CHECK_THROWS_AS(label_with_group(cycle(6), make_group({7})), HypothesisError);
    CHECK_THROWS_AS(label_with_group(disjoint_union({path(2), complete(3)}), make_group({5})),
                    HypothesisError);
}

TEST_CASE("tight order n = 0 mod 4")
{
    // Bipartite only, odd components, and a non-bipartite even component.
    for (const auto& g : {cycle(8), disjoint_union({complete(3), complete(5)}),
                          disjoint_union({complete(4), cycle(4)}), disjoint_union({cycle(4), cycle(4)}),
                          disjoint_union({complete(3), complete(3), complete(3), complete(3)})}) {
        const int n = g.vertex_count();
        REQUIRE(n % 4 == 0);
        for (const auto& spec : groups_with_at_most_one_involution(n)) {
            CHECK_MESSAGE(irregular(g, label_with_group(g, spec)), spec.name() << " n=" << n);
        }
    }
}

TEST_CASE("label_cyclic_odd examples")
{
    const auto k3c4 = disjoint_union({complete(3), cycle(4)});
    const auto lab = label_cyclic_odd(k3c4, 7);
    CHECK(lab.spec() == make_group({7}));
    CHECK(irregular(k3c4, lab));

    const auto c6k3 = disjoint_union({cycle(6), complete(3)});
    CHECK(irregular(c6k3, label_cyclic_odd(c6k3, 9)));
    CHECK(irregular(c6k3, label_cyclic_odd(c6k3, 11)));

    // Tight even order with the triple count forcing a zero-free partition.
    const auto two_k3 = disjoint_union({complete(3), complete(3)});
    CHECK(irregular(two_k3, label_cyclic_odd(two_k3, 7)));

    CHECK_THROWS_AS(label_cyclic_odd(disjoint_union({star(3), complete(3)}), 7), HypothesisError);
    CHECK_THROWS_AS(label_cyclic_odd(c6k3, 7), HypothesisError);
    CHECK_THROWS_AS(label_cyclic_odd(c6k3, 10), HypothesisError);
}

TEST_CASE("sg_labeling")
{
    auto r = sg_labeling(disjoint_union({complete(3), complete(3)}));
    CHECK(r.s == 7);
    CHECK(r.exact);
    REQUIRE(r.labelings.size() == 1);
    CHECK(r.labelings[0].first == make_group({7}));

    r = sg_labeling(disjoint_union({complete(3), cycle(5)}));
    CHECK(r.s == 9);
    CHECK_FALSE(r.exact);
    CHECK(r.range.lower == 8);
    REQUIRE(r.labelings.size() == 2);
    CHECK(r.labelings[0].first == make_group({9}));
    CHECK(r.labelings[1].first == make_group({3, 3}));

    r = sg_labeling(disjoint_union({cycle(4), complete(3)}));
    CHECK(r.s == 7);
    CHECK(r.exact);

    CHECK_THROWS_AS(sg_labeling(cycle(6)), HypothesisError);
}

TEST_CASE("k_labeling")
{
    auto r = k_labeling(disjoint_union({cycle(4), cycle(4)}));
    CHECK(r.k == 8);
    CHECK(r.exact);
    CHECK(r.construction == Construction::InvolutionFree);

    const auto c6k3 = disjoint_union({cycle(6), complete(3)});
    r = k_labeling(c6k3);
    CHECK(r.k == 9);
    CHECK(r.exact);
    CHECK(r.construction == Construction::CyclicOdd);
    CHECK(irregular(c6k3, r.labeling));

    r = k_labeling(disjoint_union({complete(3), complete(3)}));
    CHECK(r.k == 7);
    CHECK(r.exact);

    // Fails the even-class test with n = 0 mod 4: only an upper bound.
    r = k_labeling(disjoint_union({cycle(6), cycle(6)}));
    CHECK(r.k == 13);
    CHECK_FALSE(r.exact);

    r = k_labeling(disjoint_union({path(3), cycle(5)}));
    CHECK(r.k == 9);
    CHECK_FALSE(r.exact);

    CHECK_THROWS_AS(k_labeling(disjoint_union({star(3), cycle(6)})), HypothesisError);
}

TEST_CASE("plans are deterministic and replay to the labeling")
{
    for (const auto& [name, g] : construction_corpus()) {
        if (satisfies(g, Hypothesis::EvenColorClasses)) {
            const auto spec = GroupSpec({bounds(g).upper});
            const auto a = plan_with_group(g, spec);
            const auto b = plan_with_group(g, spec);
            REQUIRE(a.ops.size() == b.ops.size());
            for (std::size_t i = 0; i < a.ops.size(); ++i) {
                CHECK(a.ops[i].x1 == b.ops[i].x1);
                CHECK(a.ops[i].x2 == b.ops[i].x2);
                CHECK(a.ops[i].value == b.ops[i].value);
            }
            CHECK(replay(a, g) == label_with_group(g, spec));
        }
        if (satisfies(g, Hypothesis::NoOddStar)) {
            const int t = g.vertex_count() | 1;
            CHECK_MESSAGE(replay(plan_cyclic_odd(g, t), g) == label_cyclic_odd(g, t), name);
        }
    }
}

TEST_CASE("constructions over random graphs")
{
    std::mt19937 rng(41);
    int involution_free = 0;
    int cyclic = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const auto g = random_graph(n, 0.2 + 0.05 * (trial % 6), rng);
        if (satisfies(g, Hypothesis::EvenColorClasses)) {
            const int lo = bounds(g).lower;
            for (int t = lo; t <= lo + 3; ++t) {
                for (const auto& spec : groups_with_at_most_one_involution(t)) {
                    CHECK_MESSAGE(irregular(g, label_with_group(g, spec)), format_graph(g) << spec.name());
                    ++involution_free;
                }
            }
        }
        if (satisfies(g, Hypothesis::NoOddStar)) {
            for (int t = n | 1; t <= n + 6; t += 2) {
                CHECK_MESSAGE(irregular(g, label_cyclic_odd(g, t)), format_graph(g) << "t=" << t);
                ++cyclic;
            }
        }
    }
    CHECK(involution_free > 50);
    CHECK(cyclic > 50);
}
