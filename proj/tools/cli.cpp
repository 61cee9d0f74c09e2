#include "cli.hpp"

#include "CLI11.hpp"
#include "wis/cliquewidth.hpp"
#include "wis/graph_io.hpp"
#include "wis/ordering.hpp"
#include "wis/so_counter.hpp"
#include "wis/testkit.hpp"

#include <optional>

namespace wis::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph, weights, order, expr, circuit, out, method = "so", kind;
    std::uint64_t budget = 1'000'000;
    int size = 0;
    std::uint64_t seed = 0;
    bool exact = false, soft = false;
};

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

WeightFunction load_weights(const std::string& path, const Graph& g)
{
    return path.empty() ? WeightFunction::ones(g) : parse_weights(read_file(path), g);
}

std::optional<StrongOrdering> load_order(const std::string& path, const Graph& g)
{
    if (path.empty())
        return std::nullopt;
    return parse_ordering(read_file(path), g);
}

StrongOrdering order_or_search(const Options& o, const Graph& g)
{
    if (auto order = load_order(o.order, g))
        return *order;
    auto found = find_strong_ordering(g, {o.budget});
    if (!found)
        throw DomainError("graph has no strong ordering");
    return *found;
}

Rational count(const Options& o)
{
    const Graph g = load_graph(o.graph);
    const WeightFunction w = load_weights(o.weights, g);

    if (o.method == "oracle")
        return testkit::oracle_count(g, w);
    if (o.method == "cwd") {
        if (o.expr.empty())
            throw UsageError("--method cwd needs --expr");
        const auto e = parse_cw(read_file(o.expr));
        if (!(realize(e).graph == g))
            throw UsageError("expression does not describe the graph");
        return count_cw(e, w);
    }
    if (o.method == "so")
        return count_so(g, w, load_order(o.order, g), {o.budget});
    if (o.method == "circuit-exact" || o.method == "circuit-float") {
        if (!w.positive_on(g))
            throw DomainError("circuit methods need positive weights");
        const auto c = build_counting_circuit(g, order_or_search(o, g));
        if (o.method == "circuit-float")
            return count_via_soft_circuit(c, g, w);
        return eval_exact(c, weight_vector(g, w)).front();
    }
    throw UsageError("unknown method '" + o.method + "'");
}

void print_counts(std::ostream& out, const std::vector<BigInt>& counts)
{
    for (std::size_t k = 0; k < counts.size(); ++k)
        out << (k ? " " : "") << counts[k].get_str();
    out << '\n';
}

int guarded(std::ostream& err, const std::function<void()>& body)
{
    try {
        body();
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact weighted independent set counting"};
    app.name("wiscount");
    app.require_subcommand(1);
    Options o;
    int status = 0;

    auto* count_cmd = app.add_subcommand("count", "Weighted number of independent sets");
    count_cmd->add_option("--graph", o.graph, "Graph file")->required();
    count_cmd->add_option("--weights", o.weights, "Weight file (default: all ones)");
    count_cmd->add_option("--order", o.order, "Strong ordering file");
    count_cmd->add_option("--method", o.method, "so | circuit-exact | circuit-float | cwd | oracle")
        ->check(CLI::IsMember({"so", "circuit-exact", "circuit-float", "cwd", "oracle"}));
    count_cmd->add_option("--expr", o.expr, "Clique-width expression file (for --method cwd)");
    count_cmd->add_option("--budget", o.budget, "Node budget for the ordering search");
    count_cmd->callback([&] { status = guarded(err, [&] { out << to_string(count(o)) << '\n'; }); });

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Number of independent sets of each size");
    coeffs_cmd->add_option("--graph", o.graph, "Graph file")->required();
    coeffs_cmd->add_option("--order", o.order, "Strong ordering file");
    coeffs_cmd->add_option("--budget", o.budget, "Node budget for the ordering search");
    coeffs_cmd->callback([&] {
        status = guarded(err, [&] {
            const Graph g = load_graph(o.graph);
            print_counts(out, count_by_size(g, load_order(o.order, g), {o.budget}));
        });
    });

    auto* verify_cmd = app.add_subcommand("verify-order", "Check a strong ordering");
    verify_cmd->add_option("--graph", o.graph, "Graph file")->required();
    verify_cmd->add_option("--order", o.order, "Ordering file")->required();
    verify_cmd->callback([&] {
        status = guarded(err, [&] {
            const Graph g = load_graph(o.graph);
            auto check = verify_strong_ordering(g, *load_order(o.order, g));
            if (check) {
                out << "strong\n";
                return;
            }
            const auto& q = *check.witness;
            out << "not strong: i=" << q.i << " j=" << q.j << " k=" << q.k << " l=" << q.l << '\n';
            throw DomainError("ordering violates the strong-ordering condition");
        });
    });

    auto* find_cmd = app.add_subcommand("find-order", "Search for a strong ordering");
    find_cmd->add_option("--graph", o.graph, "Graph file")->required();
    find_cmd->add_option("--budget", o.budget, "Node budget");
    find_cmd->callback([&] {
        status = guarded(err, [&] {
            const Graph g = load_graph(o.graph);
            auto found = find_strong_ordering(g, {o.budget});
            if (!found) {
                out << "none\n";
                throw DomainError("graph has no strong ordering");
            }
            out << serialize_ordering(*found);
        });
    });

    auto* circuit_cmd = app.add_subcommand("circuit", "Build or evaluate counting circuits");
    circuit_cmd->require_subcommand(1);
    auto* build_cmd = circuit_cmd->add_subcommand("build", "Write the positive counting circuit of a graph");
    build_cmd->add_option("--graph", o.graph, "Graph file")->required();
    build_cmd->add_option("--order", o.order, "Strong ordering file");
    build_cmd->add_option("--budget", o.budget, "Node budget for the ordering search");
    build_cmd->add_option("--out", o.out, "Circuit file to write")->required();
    build_cmd->callback([&] {
        status = guarded(err, [&] {
            const Graph g = load_graph(o.graph);
            write_file(o.out, serialize_circuit(build_counting_circuit(g, order_or_search(o, g))));
        });
    });
    auto* eval_cmd = circuit_cmd->add_subcommand("eval", "Evaluate a circuit file");
    eval_cmd->add_option("--circuit", o.circuit, "Circuit file")->required();
    eval_cmd->add_option("--weights", o.weights, "Weight file; input i reads vertex i+1");
    auto* exact_flag = eval_cmd->add_flag("--exact", o.exact, "Exact rational evaluation (default)");
    eval_cmd->add_flag("--float", o.soft, "Certified soft-float evaluation with exact recovery")->excludes(exact_flag);
    eval_cmd->callback([&] {
        status = guarded(err, [&] {
            const Circuit c = parse_circuit(read_file(o.circuit));
            const Graph inputs(static_cast<int>(c.input_count()));
            const WeightFunction w = load_weights(o.weights, inputs);
            if (o.soft) {
                if (c.outputs().size() != 1)
                    throw UsageError("--float needs a single-output circuit");
                if (!w.positive_on(inputs))
                    throw DomainError("--float needs positive weights");
                out << to_string(count_via_soft_circuit(c, inputs, w)) << '\n';
                return;
            }
            for (const auto& v : eval_exact(c, weight_vector(inputs, w)))
                out << to_string(v) << '\n';
        });
    });

    auto* cwd_cmd = app.add_subcommand("cwd", "Clique-width expression tools");
    cwd_cmd->require_subcommand(1);
    auto* cwd_count = cwd_cmd->add_subcommand("count", "Count through the label-subset dynamic program");
    cwd_count->add_option("--expr", o.expr, "Expression file")->required();
    cwd_count->add_option("--weights", o.weights, "Weight file (default: all ones)");
    cwd_count->callback([&] {
        status = guarded(err, [&] {
            const auto e = parse_cw(read_file(o.expr));
            const auto g = realize(e).graph;
            out << to_string(count_cw(e, load_weights(o.weights, g))) << '\n';
        });
    });

    auto* gen_cmd = app.add_subcommand("gen", "Generate a test instance");
    gen_cmd->add_option("--kind", o.kind, "tree | chain_graph | cograph | bipartite_permutation | "
                                          "complete_bipartite | random_cw_expr")
        ->required();
    gen_cmd->add_option("--size", o.size, "Vertex count")->required();
    gen_cmd->add_option("--seed", o.seed, "Random seed")->required();
    gen_cmd->add_option("--out", o.out, "Output file")->required();
    gen_cmd->callback([&] {
        status = guarded(err, [&] {
            auto kind = testkit::parse_kind(o.kind);
            if (!kind)
                throw UsageError("unknown kind '" + o.kind + "'");
            auto inst = testkit::generate({*kind, o.size, o.seed});
            if (auto* g = std::get_if<Graph>(&inst))
                write_file(o.out, serialize_graph(*g));
            else
                write_file(o.out, serialize_cw(std::get<CwExpression>(inst)));
        });
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    return status;
}

} // namespace wis::cli
