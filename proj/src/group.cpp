#include "girreg/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace girreg {

namespace {

struct PrimePower {
    int prime;
    int exponent;
    int value;
};

std::vector<PrimePower> factorize(std::int64_t n)
{
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        PrimePower pp{static_cast<int>(p), 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
            pp.value *= static_cast<int>(p);
        }
        out.push_back(pp);
    }
    if (n > 1) {
        out.push_back({static_cast<int>(n), 1, static_cast<int>(n)});
    }
    return out;
}

int mod(std::int64_t a, int m)
{
    auto r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

void check_dims(const GroupSpec& spec, const GroupElement& a)
{
    if (a.residues.size() != spec.rank()) {
        throw std::invalid_argument("element dimension does not match group " + spec.name());
    }
}

}  // namespace

GroupSpec::GroupSpec(const std::vector<std::int64_t>& orders)
{
    if (orders.empty()) {
        throw std::invalid_argument("group needs at least one cyclic factor");
    }
    std::vector<PrimePower> parts;
    for (auto o : orders) {
        if (o < 2) {
            throw std::invalid_argument("cyclic factor order must be >= 2, got " + std::to_string(o));
        }
        auto f = factorize(o);
        parts.insert(parts.end(), f.begin(), f.end());
        order_ *= o;
    }
    std::sort(parts.begin(), parts.end(), [](const PrimePower& a, const PrimePower& b) {
        if (a.prime != b.prime) {
            return a.prime < b.prime;
        }
        return a.exponent > b.exponent;
    });
    for (const auto& p : parts) {
        factors_.push_back(p.value);
    }
}

GroupElement GroupSpec::zero() const
{
    return GroupElement{std::vector<int>(factors_.size(), 0)};
}

bool GroupSpec::contains(const GroupElement& a) const
{
    if (a.residues.size() != factors_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (a.residues[i] < 0 || a.residues[i] >= factors_[i]) {
            return false;
        }
    }
    return true;
}

std::string GroupSpec::name() const
{
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) {
            s += 'x';
        }
        s += 'Z' + std::to_string(factors_[i]);
    }
    return s;
}

std::string GroupSpec::pretty_name() const
{
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) {
            s += 'x';
        }
        s += "Z_" + std::to_string(factors_[i]);
    }
    return s;
}

std::int64_t GroupSpec::index_of(const GroupElement& a) const
{
    check_dims(*this, a);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx = idx * factors_[i] + a.residues[i];
    }
    return idx;
}

GroupElement GroupSpec::element_at(std::int64_t index) const
{
    if (index < 0 || index >= order_) {
        throw std::out_of_range("element index out of range");
    }
    GroupElement e{std::vector<int>(factors_.size(), 0)};
    for (std::size_t i = factors_.size(); i-- > 0;) {
        e.residues[i] = static_cast<int>(index % factors_[i]);
        index /= factors_[i];
    }
    return e;
}

GroupSpec make_group(const std::vector<std::int64_t>& orders)
{
    return GroupSpec(orders);
}

GroupSpec parse_group(std::string_view descriptor)
{
    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    auto bad = [&] {
        return std::invalid_argument("malformed group descriptor '" + std::string(descriptor) + "'");
    };
    while (pos < descriptor.size()) {
        if (descriptor[pos] == 'Z' || descriptor[pos] == 'z') {
            ++pos;
            if (pos < descriptor.size() && descriptor[pos] == '_') {
                ++pos;
            }
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(descriptor.data() + pos, descriptor.data() + descriptor.size(), value);
        if (ec != std::errc{}) {
            throw bad();
        }
        orders.push_back(value);
        pos = static_cast<std::size_t>(ptr - descriptor.data());
        if (pos == descriptor.size()) {
            break;
        }
        if (descriptor[pos] != 'x' && descriptor[pos] != ',' && descriptor[pos] != '*') {
            throw bad();
        }
        ++pos;
        if (pos == descriptor.size()) {
            throw bad();
        }
    }
    if (orders.empty()) {
        throw bad();
    }
    return GroupSpec(orders);
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b)
{
    check_dims(spec, a);
    check_dims(spec, b);
    GroupElement r = a;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        r.residues[i] = mod(static_cast<std::int64_t>(a.residues[i]) + b.residues[i], spec.factors()[i]);
    }
    return r;
}

GroupElement negate(const GroupSpec& spec, const GroupElement& a)
{
    return scalar_mul(spec, -1, a);
}

GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b)
{
    return add(spec, a, negate(spec, b));
}

GroupElement scalar_mul(const GroupSpec& spec, std::int64_t k, const GroupElement& a)
{
    check_dims(spec, a);
    GroupElement r = a;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        const int m = spec.factors()[i];
        r.residues[i] = mod(static_cast<std::int64_t>(mod(k, m)) * a.residues[i], m);
    }
    return r;
}

std::optional<GroupElement> halve(const GroupSpec& spec, const GroupElement& g)
{
    check_dims(spec, g);
    // Coordinates are independent, so the per-coordinate least root is the
    // lexicographically least root overall.
    GroupElement b = g;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        const int m = spec.factors()[i];
        const int v = g.residues[i];
        if (m % 2 == 1) {
            b.residues[i] = mod(static_cast<std::int64_t>(v) * ((m + 1) / 2), m);
        } else if (v % 2 == 0) {
            b.residues[i] = v / 2;
        } else {
            return std::nullopt;
        }
    }
    return b;
}

std::vector<GroupElement> involutions(const GroupSpec& spec)
{
    std::vector<GroupElement> out;
    for (const auto& e : enumerate_elements(spec)) {
        if (e != spec.zero() && scalar_mul(spec, 2, e) == spec.zero()) {
            out.push_back(e);
        }
    }
    return out;
}

std::int64_t mu(const GroupSpec& spec)
{
    std::int64_t count = 0;
    for (const auto& e : enumerate_elements(spec)) {
        if (halve(spec, e)) {
            ++count;
        }
    }
    return count;
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec)
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(spec.order()));
    GroupElement e = spec.zero();
    for (std::int64_t n = 0; n < spec.order(); ++n) {
        out.push_back(e);
        for (std::size_t i = spec.rank(); i-- > 0;) {
            if (++e.residues[i] < spec.factors()[i]) {
                break;
            }
            e.residues[i] = 0;
        }
    }
    return out;
}

std::vector<std::vector<int>> integer_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<GroupSpec> groups_of_order(std::int64_t t)
{
    if (t < 1) {
        throw std::invalid_argument("group order must be >= 1");
    }
    if (t == 1) {
        // The trivial group has no cyclic factor of order >= 2.
        return {};
    }
    // Cartesian product over primes of the partitions of each exponent.
    std::vector<std::vector<std::int64_t>> specs{{}};
    for (const auto& pp : factorize(t)) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& prefix : specs) {
            for (const auto& partition : integer_partitions(pp.exponent)) {
                auto orders = prefix;
                for (int e : partition) {
                    std::int64_t v = 1;
                    for (int k = 0; k < e; ++k) {
                        v *= pp.prime;
                    }
                    orders.push_back(v);
                }
                next.push_back(std::move(orders));
            }
        }
        specs = std::move(next);
    }
    std::vector<GroupSpec> out;
    out.reserve(specs.size());
    for (const auto& orders : specs) {
        out.emplace_back(orders);
    }
    return out;
}

std::string to_string(const GroupElement& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.residues.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(a.residues[i]);
    }
    return s;
}

}  // namespace girreg
