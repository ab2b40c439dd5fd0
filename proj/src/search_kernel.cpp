#include "girreg/search_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace girreg {

double SearchProblem::log10_space() const
{
    return static_cast<double>(edges.size()) * std::log10(static_cast<double>(order));
}

SearchProblem make_search_problem(const Graph& g, const GroupSpec& spec)
{
    SearchProblem p;
    p.order = static_cast<int>(spec.order());
    p.vertex_count = g.vertex_count();
    const auto elements = enumerate_elements(spec);
    p.sum.resize(static_cast<std::size_t>(p.order) * static_cast<std::size_t>(p.order));
    for (int a = 0; a < p.order; ++a) {
        for (int b = 0; b < p.order; ++b) {
            p.sum[static_cast<std::size_t>(a * p.order + b)] =
                static_cast<int>(spec.index_of(add(spec, elements[a], elements[b])));
        }
    }

    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (pos[s] != -1) {
            continue;
        }
        std::queue<Vertex> q;
        pos[s] = next++;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (pos[w] == -1) {
                    pos[w] = next++;
                    q.push(w);
                }
            }
        }
    }
    std::vector<int> idx(g.edge_count());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = static_cast<int>(i);
    }
    auto key = [&](int e) {
        auto [u, v] = g.edges()[e];
        return std::pair{std::max(pos[u], pos[v]), std::min(pos[u], pos[v])};
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) < key(b); });

    std::vector<int> last(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto e = g.edges()[idx[i]];
        p.edges.push_back(e);
        p.original_index.push_back(idx[i]);
        last[e.first] = static_cast<int>(i);
        last[e.second] = static_cast<int>(i);
    }
    p.completes.resize(idx.size());
    for (Vertex v = 0; v < n; ++v) {
        if (last[v] == -1) {
            p.isolated.push_back(v);
        } else {
            p.completes[last[v]].push_back(v);
        }
    }
    return p;
}

namespace {

class Searcher {
public:
    explicit Searcher(const SearchProblem& p)
        : p_(p)
        , weight_(static_cast<std::size_t>(p.vertex_count), 0)
        , taken_(static_cast<std::size_t>(p.order), false)
        , labels_(p.edges.size(), 0)
    {
    }

    /// Marks isolated vertices; false if two of them already collide.
    bool start()
    {
        for (Vertex v : p_.isolated) {
            (void)v;
            if (taken_[0]) {
                return false;
            }
            taken_[0] = true;
        }
        return true;
    }

    /// Assigns label a at position i; on conflict leaves state unchanged.
    bool assign(std::size_t i, int a)
    {
        const auto [u, v] = p_.edges[i];
        saved_u_ = weight_[u];
        saved_v_ = weight_[v];
        weight_[u] = p_.sum[static_cast<std::size_t>(weight_[u] * p_.order + a)];
        weight_[v] = p_.sum[static_cast<std::size_t>(weight_[v] * p_.order + a)];
        const auto& done = p_.completes[i];
        for (std::size_t k = 0; k < done.size(); ++k) {
            const int w = weight_[done[k]];
            if (taken_[w]) {
                for (std::size_t r = 0; r < k; ++r) {
                    taken_[weight_[done[r]]] = false;
                }
                weight_[u] = saved_u_;
                weight_[v] = saved_v_;
                return false;
            }
            taken_[w] = true;
        }
        labels_[i] = a;
        return true;
    }

    void unassign(std::size_t i, int old_u, int old_v)
    {
        for (Vertex w : p_.completes[i]) {
            taken_[weight_[w]] = false;
        }
        const auto [u, v] = p_.edges[i];
        weight_[u] = old_u;
        weight_[v] = old_v;
    }

    bool dfs(std::size_t i)
    {
        if (i == p_.edges.size()) {
            return true;
        }
        const auto [u, v] = p_.edges[i];
        const int old_u = weight_[u];
        const int old_v = weight_[v];
        for (int a = 0; a < p_.order; ++a) {
            if (!assign(i, a)) {
                continue;
            }
            if (dfs(i + 1)) {
                return true;
            }
            unassign(i, old_u, old_v);
        }
        return false;
    }

    const std::vector<int>& labels() const { return labels_; }

private:
    const SearchProblem& p_;
    std::vector<int> weight_;
    std::vector<bool> taken_;
    std::vector<int> labels_;
    int saved_u_ = 0;
    int saved_v_ = 0;
};

}  // namespace

std::optional<std::vector<int>> search_serial(const SearchProblem& problem)
{
    Searcher s(problem);
    if (!s.start()) {
        return std::nullopt;
    }
    if (!s.dfs(0)) {
        return std::nullopt;
    }
    return s.labels();
}

std::optional<std::vector<int>> search_parallel(const SearchProblem& problem, int jobs)
{
#ifdef _OPENMP
    if (jobs <= 0) {
        jobs = omp_get_max_threads();
    }
#else
    jobs = 1;
#endif
    // Prefix depth: enough tasks to balance, never deeper than the edges.
    std::size_t depth = 0;
    std::int64_t tasks = 1;
    while (depth < problem.edges.size() && tasks < 16 * static_cast<std::int64_t>(jobs)) {
        tasks *= problem.order;
        ++depth;
    }
    if (depth == 0) {
        return search_serial(problem);
    }

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::optional<std::vector<int>> result;

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::int64_t task = 0; task < tasks; ++task) {
        std::int64_t current_best;
#pragma omp atomic read
        current_best = best;
        if (task > current_best) {
            continue;
        }
        Searcher s(problem);
        if (!s.start()) {
            continue;
        }
        // Digits of task, most significant first, are the prefix labels.
        std::vector<int> prefix(depth);
        std::int64_t rest = task;
        for (std::size_t i = depth; i-- > 0;) {
            prefix[i] = static_cast<int>(rest % problem.order);
            rest /= problem.order;
        }
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
            ok = s.assign(i, prefix[i]);
        }
        if (!ok || !s.dfs(depth)) {
            continue;
        }
#pragma omp critical(girreg_search_best)
        {
            if (task < best) {
#pragma omp atomic write
                best = task;
                result = s.labels();
            }
        }
    }
    return result;
}

}  // namespace girreg
