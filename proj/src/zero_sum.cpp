#include "girreg/zero_sum.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace girreg {

namespace {

// A triple of values in 1..t-1 summing to 0 mod t whose negation classes
// {v, t-v} are pairwise distinct.
using SignedTriple = std::array<int, 3>;

// Chooses `count` disjoint signed triples among the representatives 1..h
// (t = 2h+1), leaving at least `spare` representatives free.
class TripleSearch {
public:
    TripleSearch(int t, int count, int spare)
        : t_(t), h_((t - 1) / 2), count_(count), free_budget_(h_ - 3 * count), spare_(spare)
        , used_(static_cast<std::size_t>(h_ + 1), false)
    {
        if (free_budget_ < spare) {
            throw std::invalid_argument("not enough elements for the requested triples");
        }
    }

    std::vector<SignedTriple> run()
    {
        if (auto s = explicit_scheme()) {
            return *s;
        }
        if (!search(count_, free_budget_ - spare_)) {
            throw std::runtime_error("no zero-sum partition found for t=" + std::to_string(t_));
        }
        return chosen_;
    }

private:
    // Odd x = 2i-1, y = 3l-i, z = x+y = 3l+i-1 for i = 1..l. Uses the
    // representatives up to 4l-1.
    std::optional<std::vector<SignedTriple>> explicit_scheme() const
    {
        const int l = count_;
        if (l == 0) {
            return std::vector<SignedTriple>{};
        }
        if (h_ < 4 * l - 1 || h_ - 3 * l < spare_) {
            return std::nullopt;
        }
        std::vector<SignedTriple> out;
        for (int i = 1; i <= l; ++i) {
            const int x = 2 * i - 1;
            const int y = 3 * l - i;
            out.push_back({x, y, t_ - (x + y)});
        }
        return out;
    }

    // Branches on the largest free representative x, which has the fewest
    // completions: a + b = x, or a + b + x = t, with a < b < x.
    bool search(int remaining, int free_left)
    {
        if (remaining == 0) {
            return true;
        }
        int x = h_;
        while (x > 0 && used_[x]) {
            --x;
        }
        if (x < 3) {
            return false;
        }
        used_[x] = true;
        for (int sum : {t_ - x, x}) {
            for (int b = std::min(sum - 1, x - 1); 2 * b > sum; --b) {
                const int a = sum - b;
                if (used_[a] || used_[b]) {
                    continue;
                }
                used_[a] = used_[b] = true;
                chosen_.push_back(sum == x ? SignedTriple{a, b, t_ - x} : SignedTriple{a, b, x});
                if (search(remaining - 1, free_left)) {
                    return true;
                }
                chosen_.pop_back();
                used_[a] = used_[b] = false;
            }
        }
        if (free_left > 0 && search(remaining, free_left - 1)) {
            return true;
        }
        used_[x] = false;
        return false;
    }

    int t_;
    int h_;
    int count_;
    int free_budget_;
    int spare_;
    std::vector<bool> used_;
    std::vector<SignedTriple> chosen_;
};

ZeroSumPartition assemble(int t, const std::vector<SignedTriple>& signed_triples, bool with_zero)
{
    const int h = (t - 1) / 2;
    std::vector<bool> used(static_cast<std::size_t>(h + 1), false);
    for (const auto& tr : signed_triples) {
        for (int v : tr) {
            used[v <= h ? v : t - v] = true;
        }
    }
    ZeroSumPartition p;
    p.t = t;
    if (with_zero) {
        int d = 1;
        while (used[d]) {
            ++d;
        }
        used[d] = true;
        p.triples.push_back({t, d, t - d});
    }
    for (const auto& tr : signed_triples) {
        p.triples.push_back(tr);
        p.triples.push_back({t - tr[0], t - tr[1], t - tr[2]});
    }
    for (int e = 1; e <= h; ++e) {
        if (!used[e]) {
            p.pairs.push_back({e, t - e});
        }
    }
    return p;
}

void check_modulus(int t)
{
    if (t < 3 || t % 2 == 0) {
        throw std::invalid_argument("modulus must be odd and >= 3, got " + std::to_string(t));
    }
}

}  // namespace

ZeroSumPartition zero_sum_partition(int t, int num_triples)
{
    check_modulus(t);
    if (num_triples < 1 || num_triples % 2 == 0) {
        throw std::invalid_argument("triple count must be odd and >= 1");
    }
    if (3 * num_triples > t) {
        throw std::invalid_argument("too many triples for t=" + std::to_string(t));
    }
    TripleSearch search(t, (num_triples - 1) / 2, 1);
    return assemble(t, search.run(), true);
}

ZeroSumPartition zero_free_partition(int t, int num_triples)
{
    check_modulus(t);
    if (num_triples < 0 || num_triples % 2 == 1) {
        throw std::invalid_argument("triple count must be even and >= 0");
    }
    if (3 * num_triples > t - 1) {
        throw std::invalid_argument("too many triples for t=" + std::to_string(t));
    }
    TripleSearch search(t, num_triples / 2, 0);
    return assemble(t, search.run(), false);
}

ZeroSumPartition remove_zero(ZeroSumPartition p)
{
    for (auto it = p.triples.begin(); it != p.triples.end(); ++it) {
        const auto& tr = *it;
        if (tr[0] == p.t && (tr[1] + tr[2]) == p.t) {
            p.pairs.push_back({tr[1], tr[2]});
            p.triples.erase(it);
            return p;
        }
    }
    throw std::invalid_argument("partition has no zero triple");
}

}  // namespace girreg
