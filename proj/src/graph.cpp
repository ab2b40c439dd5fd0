#include "girreg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace girreg {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count)
{
    if (n_ < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has a vertex index >= n=" + std::to_string(n_));
        }
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");
    }
    adjacency_.resize(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

int Graph::edge_index(Vertex u, Vertex v) const
{
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return -1;
    }
    return static_cast<int>(it - edges_.begin());
}

std::string_view to_string(ComponentTag tag)
{
    switch (tag) {
    case ComponentTag::TooSmall: return "TooSmall";
    case ComponentTag::BipartiteBothEven: return "BipartiteBothEven";
    case ComponentTag::BipartiteBothOdd: return "BipartiteBothOdd";
    case ComponentTag::BipartiteMixed: return "BipartiteMixed";
    case ComponentTag::NonBipartiteOdd: return "NonBipartiteOdd";
    case ComponentTag::NonBipartiteEven: return "NonBipartiteEven";
    case ComponentTag::OddStar: return "OddStar";
    }
    return "?";
}

namespace {

// K_{1,2u+1}, u >= 1: even order >= 4, one centre adjacent to every other
// vertex, all other vertices leaves.
bool is_odd_star(const Graph& g, const Component& c)
{
    const int order = c.order();
    if (order < 4 || order % 2 != 0) {
        return false;
    }
    int centres = 0;
    for (Vertex v : c.vertices) {
        if (g.degree(v) == order - 1) {
            ++centres;
        } else if (g.degree(v) != 1) {
            return false;
        }
    }
    return centres == 1;
}

ComponentTag classify(const Graph& g, const Component& c)
{
    if (c.order() < 3) {
        return ComponentTag::TooSmall;
    }
    if (!c.bipartite()) {
        return c.order() % 2 == 1 ? ComponentTag::NonBipartiteOdd : ComponentTag::NonBipartiteEven;
    }
    if (is_odd_star(g, c)) {
        return ComponentTag::OddStar;
    }
    const bool a_odd = c.bipartition->first.size() % 2 == 1;
    const bool b_odd = c.bipartition->second.size() % 2 == 1;
    if (a_odd && b_odd) {
        return ComponentTag::BipartiteBothOdd;
    }
    if (!a_odd && !b_odd) {
        return ComponentTag::BipartiteBothEven;
    }
    return ComponentTag::BipartiteMixed;
}

}  // namespace

std::vector<Component> components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Component> out;
    for (Vertex start = 0; start < n; ++start) {
        if (color[start] != -1) {
            continue;
        }
        Component c;
        bool two_colorable = true;
        std::queue<Vertex> queue;
        color[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            c.vertices.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    two_colorable = false;
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        for (Vertex v : c.vertices) {
            for (Vertex w : g.neighbors(v)) {
                if (v < w) {
                    c.edges.emplace_back(v, w);
                }
            }
        }
        if (two_colorable) {
            std::pair<std::vector<Vertex>, std::vector<Vertex>> classes;
            for (Vertex v : c.vertices) {
                (color[v] == 0 ? classes.first : classes.second).push_back(v);
            }
            c.bipartition = std::move(classes);
        }
        c.tag = classify(g, c);
        out.push_back(std::move(c));
    }
    return out;
}

ComponentCensus census(const Graph& g)
{
    ComponentCensus cs;
    for (const auto& c : components(g)) {
        ++cs.r;
        const bool odd_order = c.order() % 2 == 1;
        if (odd_order) {
            ++cs.p;
        }
        if (c.bipartite()) {
            ++cs.bipartite;
            const bool a_odd = c.bipartition->first.size() % 2 == 1;
            const bool b_odd = c.bipartition->second.size() % 2 == 1;
            if (a_odd && b_odd) {
                ++cs.p1;
            } else if (!a_odd && !b_odd) {
                ++cs.p2;
            } else {
                ++cs.p3;
            }
        } else if (odd_order) {
            ++cs.p4;
        } else {
            ++cs.even_nonbipartite;
            ++cs.p5;
        }
    }
    return cs;
}

std::vector<Violation> hypothesis_check(const Graph& g, Hypothesis h)
{
    std::vector<Violation> out;
    const auto comps = components(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        const int idx = static_cast<int>(i);
        const std::string where = "component " + std::to_string(i) + " (vertices from " +
                                  std::to_string(c.vertices.front()) + ", order " +
                                  std::to_string(c.order()) + ")";
        if (c.tag == ComponentTag::TooSmall) {
            out.push_back({idx, where + " has order less than 3"});
            continue;
        }
        if (h == Hypothesis::EvenColorClasses && c.bipartite() &&
            c.tag != ComponentTag::BipartiteBothEven) {
            out.push_back({idx, where + " is bipartite with color classes " +
                                    std::to_string(c.bipartition->first.size()) + "+" +
                                    std::to_string(c.bipartition->second.size()) +
                                    ", not both even"});
        }
        if (h == Hypothesis::NoOddStar && c.tag == ComponentTag::OddStar) {
            out.push_back({idx, where + " is a star K_{1," + std::to_string(c.order() - 1) + "}"});
        }
    }
    return out;
}

bool satisfies(const Graph& g, Hypothesis h)
{
    return hypothesis_check(g, h).empty();
}

namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no)
{
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        if (pos == line.size()) {
            break;
        }
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
        if (ec != std::errc{}) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed '" +
                                        std::string(line) + "'");
        }
        out.push_back(v);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text)
{
    std::vector<std::vector<long long>> rows;
    std::vector<int> row_lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        rows.push_back(parse_ints(line, line_no));
        row_lines.push_back(line_no);
    }
    if (rows.empty() || rows[0].size() != 2) {
        throw std::invalid_argument("expected header line 'n m'");
    }
    const long long n = rows[0][0];
    const long long m = rows[0][1];
    if (n < 1 || m < 0) {
        throw std::invalid_argument("header must have n >= 1 and m >= 0");
    }
    if (static_cast<long long>(rows.size()) - 1 != m) {
        throw std::invalid_argument("header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(rows.size() - 1));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2) {
            throw std::invalid_argument("line " + std::to_string(row_lines[i]) +
                                        ": expected 'u v'");
        }
        const long long u = rows[i][0];
        const long long v = rows[i][1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("line " + std::to_string(row_lines[i]) +
                                        ": vertex index out of range");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open graph file " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string format_graph(const Graph& g)
{
    std::string s = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        s += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return s;
}

}  // namespace girreg
