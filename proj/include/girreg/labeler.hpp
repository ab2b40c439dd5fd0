#pragma once

#include <string>
#include <utility>
#include <vector>

#include "girreg/graph.hpp"
#include "girreg/group.hpp"
#include "girreg/walk.hpp"

namespace girreg {

/// One walk increment: kind E adds `value` at both endpoints along an
/// odd-edge walk, kind O adds +value / -value along an even-edge walk.
struct PhiOp {
    enum class Kind { E, O };
    Kind kind;
    Vertex x1;
    Vertex x2;
    GroupElement value;
};

enum class Construction {
    /// Groups with at most one involution, graphs with even color classes.
    InvolutionFree,
    /// Z_t with t odd, graphs without odd star components.
    CyclicOdd,
};

struct LabelingPlan {
    GroupSpec spec;
    Construction construction;
    std::vector<PhiOp> ops;
};

/// Applies the plan to the all-zero labeling.
EdgeLabeling replay(const LabelingPlan& plan, const Graph& g);

struct Bounds {
    int lower;
    int upper;
};

/// lower = n+1 if n = 2 (mod 4) else n; upper = n for odd n, else n+1.
Bounds bounds(const Graph& g);

/// Irregular labeling over any Abelian group with at most one involution.
/// Needs every component of order >= 3, every bipartite component with
/// both color classes even, |spec| >= n (>= n+1 when n = 2 mod 4), and for
/// |spec| = n even the involution must be halvable. Throws HypothesisError
/// otherwise.
LabelingPlan plan_with_group(const Graph& g, const GroupSpec& spec);
EdgeLabeling label_with_group(const Graph& g, const GroupSpec& spec);

/// Irregular Z_t labeling for odd t >= n on graphs with no component of
/// order < 3 and no star K_{1,2u+1}.
LabelingPlan plan_cyclic_odd(const Graph& g, int t);
EdgeLabeling label_cyclic_odd(const Graph& g, int t);

struct SgResult {
    int s;
    Bounds range;
    bool exact;  // false when n = 0 (mod 4): s is only an upper bound
    std::vector<std::pair<GroupSpec, EdgeLabeling>> labelings;
};

/// Labels g over every Abelian group of order bounds(g).upper. Requires
/// the even-color-class hypothesis.
SgResult sg_labeling(const Graph& g);

struct KResult {
    int k;
    bool exact;
    Construction construction;
    EdgeLabeling labeling;
};

/// Cyclic labeling realizing the modular edge-gracefulness value (or upper
/// bound). Tries the even-color-class route first, then the odd-star-free
/// one. Throws HypothesisError if neither applies.
KResult k_labeling(const Graph& g);

std::string describe(const std::vector<Violation>& violations);

}  // namespace girreg
