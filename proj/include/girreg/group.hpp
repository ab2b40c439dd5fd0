#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace girreg {

/// Element of a finite Abelian group: one reduced residue per cyclic factor.
struct GroupElement {
    std::vector<int> residues;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

/// Finite Abelian group as a direct product of cyclic prime-power factors.
///
/// The factor list is canonical: primes ascending, and within one prime the
/// exponents descending. Two isomorphic groups always have identical factor
/// lists, so equality of specs is isomorphism.
class GroupSpec {
public:
    /// Canonicalizes Z_{o1} x Z_{o2} x ... . Throws std::invalid_argument on
    /// an empty list or an order below 2.
    explicit GroupSpec(const std::vector<std::int64_t>& orders);

    const std::vector<int>& factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }

    GroupElement zero() const;
    bool contains(const GroupElement& a) const;

    /// "Z4xZ3" style descriptor; parse_group accepts it back.
    std::string name() const;
    /// "Z_4xZ_3", used in human-facing reports.
    std::string pretty_name() const;

    /// Position of an element in lexicographic enumeration order.
    std::int64_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::int64_t index) const;

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<int> factors_;
    std::int64_t order_ = 1;
};

GroupSpec make_group(const std::vector<std::int64_t>& orders);

/// Parses `Z8xZ3`, `Z_8xZ_3`, `8x3` or `8,3`.
GroupSpec parse_group(std::string_view descriptor);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& spec, const GroupElement& a);
GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement scalar_mul(const GroupSpec& spec, std::int64_t k, const GroupElement& a);

/// Some b with 2b = g, the lexicographically least one if several exist.
std::optional<GroupElement> halve(const GroupSpec& spec, const GroupElement& g);

/// Nonzero elements of order two, lexicographic.
std::vector<GroupElement> involutions(const GroupSpec& spec);

/// Number of elements g for which g/2 exists.
std::int64_t mu(const GroupSpec& spec);

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec);

/// One spec per isomorphism class of Abelian groups of order t.
std::vector<GroupSpec> groups_of_order(std::int64_t t);

/// Integer partitions of n, parts non-increasing, in reverse lexicographic
/// order ([n] first, [1,...,1] last).
std::vector<std::vector<int>> integer_partitions(int n);

std::string to_string(const GroupElement& a);

}  // namespace girreg
