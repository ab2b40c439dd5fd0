#include "girreg/labeler.hpp"

#include <algorithm>
#include <stdexcept>

#include "girreg/errors.hpp"
#include "girreg/verifier.hpp"
#include "girreg/zero_sum.hpp"

namespace girreg {

EdgeLabeling replay(const LabelingPlan& plan, const Graph& g)
{
    EdgeLabeling lab(g, plan.spec);
    for (const auto& op : plan.ops) {
        if (op.kind == PhiOp::Kind::E) {
            phi_e(lab, g, op.x1, op.x2, op.value);
        } else {
            phi_o(lab, g, op.x1, op.x2, op.value);
        }
    }
    return lab;
}

Bounds bounds(const Graph& g)
{
    const int n = g.vertex_count();
    return {n % 4 == 2 ? n + 1 : n, n % 2 == 1 ? n : n + 1};
}

std::string describe(const std::vector<Violation>& violations)
{
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) {
            s += "; ";
        }
        s += v.reason;
    }
    return s;
}

namespace {

void require(const Graph& g, Hypothesis h)
{
    auto violations = hypothesis_check(g, h);
    if (!violations.empty()) {
        throw HypothesisError(describe(violations));
    }
}

// Hands out +/- pairs of group elements in enumeration order.
class ElementPool {
public:
    explicit ElementPool(const GroupSpec& spec)
        : spec_(spec), elements_(enumerate_elements(spec)), used_(elements_.size(), false)
    {
        take(spec.zero());
    }

    void take(const GroupElement& a) { used_[static_cast<std::size_t>(spec_.index_of(a))] = true; }

    /// Next unused g with g != -g (and g/2 existing if asked); marks g and -g.
    std::optional<GroupElement> next_pair(bool need_half)
    {
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (used_[i]) {
                continue;
            }
            const auto& g = elements_[i];
            const auto minus_g = negate(spec_, g);
            if (g == minus_g || used_[static_cast<std::size_t>(spec_.index_of(minus_g))]) {
                continue;
            }
            if (need_half && !halve(spec_, g)) {
                continue;
            }
            take(g);
            take(minus_g);
            return g;
        }
        return std::nullopt;
    }

private:
    const GroupSpec& spec_;
    std::vector<GroupElement> elements_;
    std::vector<bool> used_;
};

// Pairs consecutive vertices of each list; every list has even size.
std::vector<std::pair<Vertex, Vertex>> pair_up(const std::vector<std::vector<Vertex>>& groups)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& grp : groups) {
        if (grp.size() % 2 != 0) {
            throw std::logic_error("odd number of vertices left to pair");
        }
        for (std::size_t i = 0; i + 1 < grp.size(); i += 2) {
            out.emplace_back(grp[i], grp[i + 1]);
        }
    }
    return out;
}

// Vertices of c not in `consumed`, split by color class when bipartite.
std::vector<std::vector<Vertex>> leftovers(const Component& c, const std::vector<Vertex>& consumed)
{
    auto keep = [&](const std::vector<Vertex>& vs) {
        std::vector<Vertex> out;
        for (Vertex v : vs) {
            if (std::find(consumed.begin(), consumed.end(), v) == consumed.end()) {
                out.push_back(v);
            }
        }
        return out;
    };
    if (c.bipartite()) {
        return {keep(c.bipartition->first), keep(c.bipartition->second)};
    }
    return {keep(c.vertices)};
}

}  // namespace

LabelingPlan plan_with_group(const Graph& g, const GroupSpec& spec)
{
    require(g, Hypothesis::EvenColorClasses);
    const auto invs = involutions(spec);
    if (invs.size() > 1) {
        throw HypothesisError(spec.pretty_name() + " has " + std::to_string(invs.size()) +
                              " involutions; at most one is allowed");
    }
    const int n = g.vertex_count();
    const auto t = spec.order();
    const int s = bounds(g).lower;
    if (t < s) {
        throw HypothesisError("group order " + std::to_string(t) + " is below " + std::to_string(s));
    }
    // t = n even forces n = 0 (mod 4); one vertex then carries the involution.
    const bool tight = t == n && n % 2 == 0;
    std::optional<GroupElement> half_i;
    if (tight) {
        half_i = halve(spec, invs.front());
        if (!half_i) {
            throw HypothesisError("the involution of " + spec.pretty_name() + " has no half");
        }
    }

    auto comps = components(g);
    std::stable_partition(comps.begin(), comps.end(), [](const Component& c) { return c.order() % 2 == 1; });
    const int p = static_cast<int>(std::count_if(comps.begin(), comps.end(),
                                                 [](const Component& c) { return c.order() % 2 == 1; }));
    const int k = p / 2;

    LabelingPlan plan{spec, Construction::InvolutionFree, {}};
    ElementPool pool(spec);
    for (const auto& i : invs) {
        pool.take(i);
    }
    std::vector<std::vector<Vertex>> consumed(comps.size());

    const int halves_needed = tight && p > 0 ? k - 1 : k;
    std::vector<GroupElement> gs;
    for (int j = 0; j < halves_needed; ++j) {
        auto gj = pool.next_pair(true);
        if (!gj) {
            throw std::logic_error("fewer halvable +/- pairs than odd components need");
        }
        gs.push_back(*gj);
    }
    // Odd components alternate weights g_j, -g_j on their least vertex.
    for (int j = 0; j < 2 * halves_needed; ++j) {
        const Vertex x = comps[j].vertices.front();
        const auto& gj = gs[j / 2];
        auto half = j % 2 == 0 ? halve(spec, gj) : halve(spec, negate(spec, gj));
        plan.ops.push_back({PhiOp::Kind::E, x, x, *half});
        consumed[j].push_back(x);
    }
    if (n % 2 == 1) {
        consumed[p - 1].push_back(comps[p - 1].vertices.front());  // weight 0
    } else if (tight && p > 0) {
        const Vertex x = comps[p - 2].vertices.front();
        plan.ops.push_back({PhiOp::Kind::E, x, x, *half_i});
        consumed[p - 2].push_back(x);
        consumed[p - 1].push_back(comps[p - 1].vertices.front());
    } else if (tight) {
        // No odd component to host the weights i and 0.
        auto nb = std::find_if(comps.begin(), comps.end(), [](const Component& c) { return !c.bipartite(); });
        if (nb != comps.end()) {
            const auto idx = static_cast<std::size_t>(nb - comps.begin());
            const Vertex x = nb->vertices[0];
            plan.ops.push_back({PhiOp::Kind::E, x, x, *half_i});
            consumed[idx] = {x, nb->vertices[1]};
        } else {
            // Weights 0, e in one class and i, -e in the other, e = i/2;
            // both class sums are e.
            const auto& [xs, ys] = *comps.front().bipartition;
            const auto& e = *half_i;
            plan.ops.push_back({PhiOp::Kind::E, xs[1], ys[0], e});
            plan.ops.push_back({PhiOp::Kind::O, ys[0], ys[1], e});
            pool.take(e);
            pool.take(negate(spec, e));
            consumed[0] = {xs[0], xs[1], ys[0], ys[1]};
        }
    }

    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (auto [a, b] : pair_up(leftovers(comps[c], consumed[c]))) {
            auto gj = pool.next_pair(false);
            if (!gj) {
                throw std::logic_error("ran out of +/- pairs while pairing vertices");
            }
            plan.ops.push_back({PhiOp::Kind::O, a, b, *gj});
        }
    }
    return plan;
}

EdgeLabeling label_with_group(const Graph& g, const GroupSpec& spec)
{
    return replay(plan_with_group(g, spec), g);
}

LabelingPlan plan_cyclic_odd(const Graph& g, int t)
{
    require(g, Hypothesis::NoOddStar);
    const int n = g.vertex_count();
    if (t % 2 == 0) {
        throw HypothesisError("modulus " + std::to_string(t) + " is even");
    }
    if (t < n) {
        throw HypothesisError("modulus " + std::to_string(t) + " is below the order " + std::to_string(n));
    }
    const auto cs = census(g);
    const int demand = cs.triple_demand();
    ZeroSumPartition part;
    if (n % 2 == 1) {
        part = zero_sum_partition(t, demand);
    } else if (3 * (demand + 1) <= t) {
        part = remove_zero(zero_sum_partition(t, demand + 1));
    } else {
        part = zero_free_partition(t, demand);
    }

    const GroupSpec spec({t});
    // Z_t may split into coprime prime-power factors; (1,..,1) generates it.
    const GroupElement one{std::vector<int>(spec.factors().size(), 1)};
    auto elem = [&](int v) { return scalar_mul(spec, v, one); };
    LabelingPlan plan{spec, Construction::CyclicOdd, {}};
    std::size_t next_triple = 0;
    std::size_t next_pair = 0;
    auto triple = [&]() -> const std::array<int, 3>& {
        if (next_triple >= part.triples.size()) {
            throw std::logic_error("vertex triples exceed the partition's triples");
        }
        return part.triples[next_triple++];
    };
    // Weights b, c at x, y and b + c = -a at z.
    auto place = [&](Vertex x, Vertex y, Vertex z) {
        const auto& tr = triple();
        plan.ops.push_back({PhiOp::Kind::E, x, z, elem(tr[1])});
        plan.ops.push_back({PhiOp::Kind::E, y, z, elem(tr[2])});
    };

    for (const auto& c : components(g)) {
        std::vector<Vertex> consumed;
        if (c.bipartite()) {
            const auto& [xs, ys] = *c.bipartition;
            const bool x_odd = xs.size() % 2 == 1;
            const bool y_odd = ys.size() % 2 == 1;
            if (x_odd && y_odd) {
                place(xs[0], xs[1], ys[2]);
                place(ys[0], ys[1], xs[2]);
                consumed = {xs[0], xs[1], xs[2], ys[0], ys[1], ys[2]};
            } else if (x_odd != y_odd) {
                const auto& odd_class = x_odd ? xs : ys;
                const auto& even_class = x_odd ? ys : xs;
                place(even_class[0], even_class[1], odd_class[0]);
                consumed = {even_class[0], even_class[1], odd_class[0]};
            }
        } else if (c.order() % 2 == 1) {
            place(c.vertices[0], c.vertices[1], c.vertices[2]);
            consumed = {c.vertices[0], c.vertices[1], c.vertices[2]};
        }
        for (auto [a, b] : pair_up(leftovers(c, consumed))) {
            if (next_pair >= part.pairs.size()) {
                throw std::logic_error("vertex pairs exceed the partition's pairs");
            }
            plan.ops.push_back({PhiOp::Kind::O, a, b, elem(part.pairs[next_pair++][0])});
        }
    }
    if (next_triple != part.triples.size()) {
        throw std::logic_error("partition triples left unused");
    }
    return plan;
}

EdgeLabeling label_cyclic_odd(const Graph& g, int t)
{
    return replay(plan_cyclic_odd(g, t), g);
}

namespace {

void expect_irregular(const Graph& g, const EdgeLabeling& lab)
{
    if (auto c = find_collision(g, lab, lab.spec())) {
        throw std::logic_error("construction over " + lab.spec().pretty_name() +
                               " is not irregular: vertices " + std::to_string(c->u) + "," +
                               std::to_string(c->v));
    }
}

}  // namespace

SgResult sg_labeling(const Graph& g)
{
    require(g, Hypothesis::EvenColorClasses);
    const auto range = bounds(g);
    SgResult out{range.upper, range, g.vertex_count() % 4 != 0, {}};
    for (const auto& spec : groups_of_order(range.upper)) {
        auto lab = label_with_group(g, spec);
        expect_irregular(g, lab);
        out.labelings.emplace_back(spec, std::move(lab));
    }
    return out;
}

KResult k_labeling(const Graph& g)
{
    const int n = g.vertex_count();
    if (satisfies(g, Hypothesis::EvenColorClasses)) {
        const int k = n % 4 == 2 ? n + 1 : n;
        auto lab = label_with_group(g, GroupSpec({k}));
        expect_irregular(g, lab);
        return {k, true, Construction::InvolutionFree, std::move(lab)};
    }
    auto violations = hypothesis_check(g, Hypothesis::NoOddStar);
    if (!violations.empty()) {
        throw HypothesisError("neither construction applies: " + describe(violations) + "; " +
                              describe(hypothesis_check(g, Hypothesis::EvenColorClasses)));
    }
    const int k = n % 2 == 1 ? n : n + 1;
    auto lab = label_cyclic_odd(g, k);
    expect_irregular(g, lab);
    return {k, n % 4 != 0, Construction::CyclicOdd, std::move(lab)};
}

}  // namespace girreg
