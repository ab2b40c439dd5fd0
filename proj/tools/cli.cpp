#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "girreg/errors.hpp"
#include "girreg/graph.hpp"
#include "girreg/group.hpp"
#include "girreg/labeler.hpp"
#include "girreg/labeling_io.hpp"
#include "girreg/oracle.hpp"
#include "girreg/verifier.hpp"
#include "girreg/zero_sum.hpp"

namespace girreg::cli {

namespace {

struct Options {
    std::string graph;
    std::string group;
    std::string labeling;
    int cyclic_odd = 0;
    bool exact = false;
    int max_order = 0;
    int order = 0;
    int t = 0;
    int triples = 0;
    bool zero_free = false;
    int jobs = 0;
    double budget = 1e9;
    bool force = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SearchOptions search_options(const Options& o)
{
    return {o.budget, o.force, o.jobs};
}

int report_collision(const Graph& g, const EdgeLabeling& lab, std::ostream& out)
{
    if (auto c = find_collision(g, lab, lab.spec())) {
        out << "collision: vertices " << c->u << "," << c->v << " weight " << to_string(c->value)
            << '\n';
        return kVerificationFailed;
    }
    out << "ok: " << g.vertex_count() << " distinct weights over " << lab.spec().pretty_name()
        << '\n';
    return kOk;
}

int cmd_label(const Options& o, std::ostream& out)
{
    const auto g = read_graph_file(o.graph);
    std::optional<EdgeLabeling> lab;
    if (o.cyclic_odd > 0) {
        lab = label_cyclic_odd(g, o.cyclic_odd);
    } else {
        lab = label_with_group(g, parse_group(o.group));
    }
    out << format_labeling(g, *lab);
    return report_collision(g, *lab, out);
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto g = read_graph_file(o.graph);
    const auto lab = parse_labeling(read_file(o.labeling), g);
    if (!o.group.empty() && !(parse_group(o.group) == lab.spec())) {
        throw std::invalid_argument("labeling is over " + lab.spec().name() + ", --group says " +
                                    parse_group(o.group).name());
    }
    return report_collision(g, lab, out);
}

std::string failures_text(const StrengthReport& r)
{
    std::string s;
    for (const auto& f : r.failures) {
        s += (s.empty() ? "" : ", ") + std::to_string(f.order()) + " (" + f.pretty_name() + " fails)";
    }
    return s.empty() ? "none" : s;
}

int cmd_sg(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto g = read_graph_file(o.graph);
    const auto range = bounds(g);
    out << "n=" << g.vertex_count() << ", lower=" << range.lower << ", upper=" << range.upper;
    int status = kOk;
    const auto violations = hypothesis_check(g, Hypothesis::EvenColorClasses);
    if (violations.empty()) {
        const auto result = sg_labeling(g);
        out << ", constructed: ";
        for (std::size_t i = 0; i < result.labelings.size(); ++i) {
            out << (i > 0 ? ", " : "") << result.labelings[i].first.pretty_name() << " ok";
        }
        out << '\n';
        out << (result.exact ? "s_g = " : "s_g <= ") << result.s << '\n';
    } else {
        out << ", constructed: not applicable\n";
        err << "hypothesis violated: " << describe(violations) << '\n';
        status = kHypothesisViolated;
    }
    if (o.exact) {
        const int cap = o.max_order > 0 ? o.max_order : range.upper + 2;
        const auto report = sg_exact(g, cap, search_options(o));
        out << "exact: s_g=" << report.value << ", rejected orders: " << failures_text(report) << '\n';
        status = kOk;
    }
    return status;
}

int cmd_kval(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto g = read_graph_file(o.graph);
    out << "n=" << g.vertex_count();
    int status = kOk;
    try {
        const auto result = k_labeling(g);
        out << ", k" << (result.exact ? "=" : "<=") << result.k
            << (result.exact ? " (exact)" : " (upper bound)") << ", constructed: "
            << result.labeling.spec().pretty_name() << " ok\n";
    } catch (const HypothesisError& e) {
        out << ", constructed: not applicable\n";
        err << "hypothesis violated: " << e.what() << '\n';
        status = kHypothesisViolated;
    }
    if (o.exact) {
        const int cap = o.max_order > 0 ? o.max_order : g.vertex_count() + 3;
        const auto report = k_exact(g, cap, search_options(o));
        out << "exact: k=" << report.value << ", rejected orders: " << failures_text(report) << '\n';
        status = kOk;
    }
    return status;
}

int cmd_partition(const Options& o, std::ostream& out)
{
    const auto p = o.zero_free ? zero_free_partition(o.t, o.triples) : zero_sum_partition(o.t, o.triples);
    for (const auto& tr : p.triples) {
        out << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
    }
    for (const auto& pr : p.pairs) {
        out << pr[0] << ' ' << pr[1] << '\n';
    }
    return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const auto g = read_graph_file(o.graph);
    int status = kOk;
    for (const auto& spec : groups_of_order(o.order)) {
        auto lab = exists_labeling(g, spec, search_options(o));
        if (lab) {
            out << spec.pretty_name() << ": irregular labeling found\n" << format_labeling(g, *lab);
        } else {
            out << spec.pretty_name() << ": no irregular labeling\n";
            status = kVerificationFailed;
        }
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Group-irregular labelings of graphs", "girreg"};
    app.require_subcommand(1);
    Options o;

    auto* label = app.add_subcommand("label", "Construct an irregular labeling");
    label->add_option("--graph", o.graph, "Edge-list file")->required();
    auto* group_opt = label->add_option("--group", o.group, "Group descriptor, e.g. Z4xZ3");
    auto* cyc_opt = label->add_option("--cyclic-odd", o.cyclic_odd, "Odd modulus t for the Z_t construction");
    group_opt->excludes(cyc_opt);
    cyc_opt->excludes(group_opt);

    auto* verify = app.add_subcommand("verify", "Check a labeling for irregularity");
    verify->add_option("--graph", o.graph, "Edge-list file")->required();
    verify->add_option("--labeling", o.labeling, "Labeling file")->required();
    verify->add_option("--group", o.group, "Expected group");

    auto* sg = app.add_subcommand("sg", "Group irregularity strength");
    auto* kval = app.add_subcommand("kval", "Modular edge-gracefulness");
    for (auto* sub : {sg, kval}) {
        sub->add_option("--graph", o.graph, "Edge-list file")->required();
        sub->add_flag("--exact", o.exact, "Also run the exhaustive oracle");
        sub->add_option("--max-order", o.max_order, "Largest order the oracle tries");
    }

    auto* partition = app.add_subcommand("partition", "Zero-sum partition of {1..t}");
    partition->add_option("--t", o.t, "Odd modulus")->required();
    partition->add_option("--triples", o.triples, "Number of triples")->required();
    partition->add_flag("--zero-free", o.zero_free, "Partition {1..t-1} with an even triple count");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search over every group of one order");
    oracle->add_option("--graph", o.graph, "Edge-list file")->required();
    oracle->add_option("--order", o.order, "Group order")->required()->check(CLI::PositiveNumber);

    for (auto* sub : {sg, kval, oracle}) {
        sub->add_option("--jobs", o.jobs, "Search threads (0 = default)");
        sub->add_option("--budget", o.budget, "Largest |G|^|E| searched");
        sub->add_flag("--force", o.force, "Ignore the search budget");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    if (label->parsed() && o.group.empty() && o.cyclic_odd == 0) {
        err << "label needs --group or --cyclic-odd\n";
        return kHypothesisViolated;
    }

    try {
        if (label->parsed()) return cmd_label(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (sg->parsed()) return cmd_sg(o, out, err);
        if (kval->parsed()) return cmd_kval(o, out, err);
        if (partition->parsed()) return cmd_partition(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
    } catch (const HypothesisError& e) {
        err << "hypothesis violated: " << e.what() << '\n';
        return kHypothesisViolated;
    } catch (const BudgetError& e) {
        err << "limit: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kHypothesisViolated;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kOk;
}

}  // namespace girreg::cli
