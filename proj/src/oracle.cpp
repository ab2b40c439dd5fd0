#include "girreg/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "girreg/errors.hpp"
#include "girreg/search_kernel.hpp"

namespace girreg {

std::optional<int> star_leaves(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 2 || static_cast<int>(g.edge_count()) != n - 1) {
        return std::nullopt;
    }
    int centres = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            ++centres;
        } else if (g.degree(v) != 1) {
            return std::nullopt;
        }
    }
    if (centres == 0) {
        return std::nullopt;
    }
    return n - 1;
}

std::optional<std::vector<GroupElement>> star_labels(int m, const GroupSpec& spec)
{
    const auto t = static_cast<int>(spec.order());
    if (m < 1 || m > t) {
        return std::nullopt;
    }
    const auto elements = enumerate_elements(spec);
    GroupElement total = spec.zero();
    for (const auto& e : elements) {
        total = add(spec, total, e);
    }
    // Choose `size` indices; with complements, S is everything not chosen.
    const bool by_complement = m > t - m;
    const int size = by_complement ? t - m : m;
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        pick[i] = i;
    }
    while (true) {
        GroupElement chosen_sum = spec.zero();
        for (int i : pick) {
            chosen_sum = add(spec, chosen_sum, elements[i]);
        }
        const auto s_sum = by_complement ? subtract(spec, total, chosen_sum) : chosen_sum;
        const auto s_idx = static_cast<int>(spec.index_of(s_sum));
        const bool in_pick = std::find(pick.begin(), pick.end(), s_idx) != pick.end();
        // Irregular iff the centre's weight is not a leaf label.
        if (in_pick == by_complement) {
            std::vector<GroupElement> out;
            for (int i = 0; i < t; ++i) {
                const bool picked = std::find(pick.begin(), pick.end(), i) != pick.end();
                if (picked != by_complement) {
                    out.push_back(elements[i]);
                }
            }
            return out;
        }
        int i = size - 1;
        while (i >= 0 && pick[i] == t - size + i) {
            --i;
        }
        if (i < 0) {
            return std::nullopt;
        }
        ++pick[i];
        for (int j = i + 1; j < size; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

std::optional<EdgeLabeling> exists_labeling(const Graph& g, const GroupSpec& spec,
                                            const SearchOptions& opts)
{
    if (auto m = star_leaves(g); m && *m >= 2) {
        auto labels = star_labels(*m, spec);
        if (!labels) {
            return std::nullopt;
        }
        Vertex centre = 0;
        while (g.degree(centre) != *m) {
            ++centre;
        }
        EdgeLabeling lab(g, spec);
        std::size_t next = 0;
        for (Vertex leaf : g.neighbors(centre)) {
            lab.set(centre, leaf, (*labels)[next++]);
        }
        return lab;
    }

    const auto problem = make_search_problem(g, spec);
    if (!opts.force && problem.log10_space() > std::log10(opts.budget) + 1e-9) {
        throw BudgetError("search space " + std::to_string(spec.order()) + "^" +
                          std::to_string(g.edge_count()) + " exceeds the budget");
    }
    auto found = opts.jobs == 1 ? search_serial(problem) : search_parallel(problem, opts.jobs);
    if (!found) {
        return std::nullopt;
    }
    EdgeLabeling lab(g, spec);
    for (std::size_t i = 0; i < found->size(); ++i) {
        const auto [u, v] = problem.edges[i];
        lab.set(u, v, spec.element_at((*found)[i]));
    }
    return lab;
}

namespace {

StrengthReport strength(const Graph& g, int max_order, const SearchOptions& opts,
                        StrengthReport::Quantity q)
{
    const int n = g.vertex_count();
    if (n < 2) {
        throw std::invalid_argument("strength needs at least two vertices");
    }
    StrengthReport report{q, 0, {}, {}};
    for (int s = n; s <= max_order; ++s) {
        auto specs = q == StrengthReport::Quantity::Sg ? groups_of_order(s)
                                                       : std::vector<GroupSpec>{GroupSpec({s})};
        std::vector<std::pair<GroupSpec, EdgeLabeling>> witnesses;
        bool all = true;
        for (const auto& spec : specs) {
            auto lab = exists_labeling(g, spec, opts);
            if (!lab) {
                report.failures.push_back(spec);
                all = false;
                break;
            }
            witnesses.emplace_back(spec, std::move(*lab));
        }
        if (all) {
            report.value = s;
            report.witnesses = std::move(witnesses);
            return report;
        }
    }
    throw BudgetError("no order in [" + std::to_string(n) + ", " + std::to_string(max_order) +
                      "] works");
}

}  // namespace

StrengthReport sg_exact(const Graph& g, int s_max, const SearchOptions& opts)
{
    return strength(g, s_max, opts, StrengthReport::Quantity::Sg);
}

StrengthReport k_exact(const Graph& g, int k_max, const SearchOptions& opts)
{
    return strength(g, k_max, opts, StrengthReport::Quantity::K);
}

}  // namespace girreg
