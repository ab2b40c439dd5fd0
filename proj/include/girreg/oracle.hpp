#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "girreg/graph.hpp"
#include "girreg/group.hpp"
#include "girreg/walk.hpp"

namespace girreg {

struct SearchOptions {
    /// Largest |group|^|E| searched without `force`.
    double budget = 1e9;
    bool force = false;
    /// OpenMP workers; 0 means the runtime default, 1 the serial reference.
    int jobs = 0;
};

/// An irregular labeling of g over spec if one exists. Single stars
/// K_{1,m} go through the subset criterion; everything else through the
/// exhaustive search. Throws BudgetError when the space exceeds the budget.
std::optional<EdgeLabeling> exists_labeling(const Graph& g, const GroupSpec& spec,
                                            const SearchOptions& opts = {});

/// Labels for the m leaves of K_{1,m}: m distinct elements whose sum is
/// not one of them, or nothing. Enumerates complements when m > |G|/2.
std::optional<std::vector<GroupElement>> star_labels(int m, const GroupSpec& spec);

inline bool exists_star_labeling(int m, const GroupSpec& spec)
{
    return star_labels(m, spec).has_value();
}

/// Leaf count if g is a single star K_{1,m}, m >= 1.
std::optional<int> star_leaves(const Graph& g);

struct StrengthReport {
    enum class Quantity { Sg, K };

    Quantity quantity;
    int value;
    /// A labeling for every tested group of order `value`.
    std::vector<std::pair<GroupSpec, EdgeLabeling>> witnesses;
    /// One group without any irregular labeling per rejected order.
    std::vector<GroupSpec> failures;
};

/// Least s in [n, s_max] such that every Abelian group of order s admits an
/// irregular labeling. Throws BudgetError if none is found.
StrengthReport sg_exact(const Graph& g, int s_max, const SearchOptions& opts = {});

/// Least k in [n, k_max] such that Z_k admits an irregular labeling.
StrengthReport k_exact(const Graph& g, int k_max, const SearchOptions& opts = {});

}  // namespace girreg
