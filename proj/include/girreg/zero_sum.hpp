#pragma once

#include <array>
#include <vector>

namespace girreg {

/// Disjoint triples and pairs of values from {1..t} (t standing for 0 in
/// Z_t), each summing to 0 mod t.
///
/// Construction guarantees beyond the zero sums: pairs are {d, t-d}; the
/// triples other than the zero triple (t, d, t-d) come in negation pairs
/// (x, y, z), (t-x, t-y, t-z). Reading a triple (a, b, c) as vertex weights
/// (b, c, -a) therefore reuses exactly the triples' own values.
struct ZeroSumPartition {
    int t = 0;
    std::vector<std::array<int, 3>> triples;
    std::vector<std::array<int, 2>> pairs;
};

/// Partition of {1..t}, t odd >= 3, into num_triples triples (odd, 3q <= t)
/// and (t - 3q)/2 pairs. The first triple is (t, d, t-d). Throws
/// std::invalid_argument on a bad argument.
ZeroSumPartition zero_sum_partition(int t, int num_triples);

/// Partition of {1..t-1}, t odd, into num_triples triples (even, 3q <= t-1)
/// and pairs; no part contains t.
ZeroSumPartition zero_free_partition(int t, int num_triples);

/// Drops t from the zero triple (t, d, t-d), which becomes the last pair
/// (d, t-d). Throws std::invalid_argument if there is no such triple.
ZeroSumPartition remove_zero(ZeroSumPartition p);

}  // namespace girreg
