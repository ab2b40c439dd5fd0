#include "girreg/labeling_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "girreg/verifier.hpp"

namespace girreg {

std::string format_labeling(const Graph& g, const EdgeLabeling& lab)
{
    std::ostringstream out;
    out << "group: " << lab.spec().name() << '\n';
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto [u, v] = g.edges()[e];
        out << u << ' ' << v << " : " << to_string(lab.labels()[e]) << '\n';
    }
    out << "weights:\n";
    const auto w = weights(g, lab, lab.spec());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << v << " : " << to_string(w[v]) << '\n';
    }
    return out.str();
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<long long> numbers(std::string_view s, char sep, int line_no)
{
    std::vector<long long> out;
    while (true) {
        const auto cut = s.find(sep);
        const auto field = trim(s.substr(0, cut));
        // Runs of spaces separate "u v".
        if (!(field.empty() && sep == ' ')) {
            long long v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
                throw std::invalid_argument("labeling line " + std::to_string(line_no) +
                                            ": bad number '" + std::string(field) + "'");
            }
            out.push_back(v);
        }
        if (cut == std::string_view::npos) {
            break;
        }
        s.remove_prefix(cut + 1);
    }
    return out;
}

}  // namespace

EdgeLabeling parse_labeling(std::string_view text, const Graph& g)
{
    std::optional<EdgeLabeling> lab;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        const auto line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line == "weights:") {
            break;
        }
        if (line.starts_with("group:")) {
            if (lab) {
                throw std::invalid_argument("labeling has two group headers");
            }
            lab.emplace(g, parse_group(trim(line.substr(6))));
            continue;
        }
        if (!lab) {
            throw std::invalid_argument("labeling must start with a 'group:' header");
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("labeling line " + std::to_string(line_no) + ": missing ':'");
        }
        const auto ends = numbers(trim(line.substr(0, colon)), ' ', line_no);
        const auto value = numbers(trim(line.substr(colon + 1)), ',', line_no);
        if (ends.size() != 2) {
            throw std::invalid_argument("labeling line " + std::to_string(line_no) + ": expected 'u v'");
        }
        if (ends[0] < 0 || ends[1] < 0 || ends[0] >= g.vertex_count() || ends[1] >= g.vertex_count()) {
            throw std::invalid_argument("labeling line " + std::to_string(line_no) + ": vertex out of range");
        }
        GroupElement e;
        for (auto r : value) {
            e.residues.push_back(static_cast<int>(r));
        }
        lab->set(static_cast<Vertex>(ends[0]), static_cast<Vertex>(ends[1]), std::move(e));
    }
    if (!lab) {
        throw std::invalid_argument("labeling must start with a 'group:' header");
    }
    return *lab;
}

}  // namespace girreg
