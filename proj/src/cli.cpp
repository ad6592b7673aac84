#include "socstable/cli.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "socstable/exact_oracle.hpp"
#include "socstable/generators.hpp"
#include "socstable/rng.hpp"
#include "socstable/socgs.hpp"
#include "socstable/stability.hpp"
#include "socstable/text_io.hpp"

namespace socstable {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream contents;
    contents << in.rdbuf();
    return std::move(contents).str();
}

std::string fixed_decimal(double value, int precision) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                   std::chars_format::fixed, precision);
    assert(ec == std::errc());
    return std::string(buffer, ptr);
}

const char* outcome_label(ProposalOutcome outcome) {
    switch (outcome) {
    case ProposalOutcome::Accepted: return "accepted";
    case ProposalOutcome::Rejected: return "rejected";
    case ProposalOutcome::Displaced: return "displaced";
    }
    return "?";
}

void dump_trace(const Market& market, const SocGsResult& result, std::ostream& err) {
    for (size_t i = 0; i < result.iterations.size(); ++i) {
        const auto& iteration = result.iterations[i];
        err << "run " << (i + 1) << ' '
            << (iteration.promoted_man ? "second-chance " + market.man_name(*iteration.promoted_man)
                                       : std::string("initial"))
            << '\n';
        for (const auto& event : iteration.trace.proposals)
            err << "  " << market.man_name(event.man) << " -> " << market.woman_name(event.woman)
                << ' ' << outcome_label(event.outcome) << '\n';
        for (const auto& [m, w] : iteration.matching.pairs())
            err << "  match " << market.man_name(m) << ' ' << market.woman_name(w) << '\n';
    }
    err << "da-runs " << result.da_run_count << '\n';
}

int cmd_solve(const std::string& file, bool trace, std::ostream& out, std::ostream& err) {
    const Instance instance = parse_instance(read_file(file));
    const Market market(instance);
    const SocGsResult result = socgs(market);
    out << serialize_matching(market, result.matching);
    if (trace) dump_trace(market, result, err);
    return 0;
}

int cmd_exact(const std::string& file, int limit, std::ostream& out) {
    const Instance instance = parse_instance(read_file(file));
    const Market market(instance);
    out << serialize_matching(market, exact_max_socially_stable(market, limit));
    return 0;
}

int cmd_check(const std::string& instance_file, const std::string& matching_file, bool classic,
              std::ostream& out) {
    const Instance instance = parse_instance(read_file(instance_file));
    const Market market(instance);
    const Matching matching = parse_matching(read_file(matching_file), market);

    bool ok = true;
    for (const auto& [m, w] : matching.pairs()) {
        if (market.man_rank(m, w) < 0 || market.woman_rank(w, m) < 0) {
            out << "unacceptable " << market.man_name(m) << ' ' << market.woman_name(w) << '\n';
            ok = false;
        }
    }
    const BlockingReport report =
        classic ? blocking_pairs(market, matching) : social_blocking_pairs(market, matching);
    if (!report.empty()) {
        out << format_blocking_report(market, report);
        ok = false;
    }
    return ok ? 0 : 1;
}

int cmd_reduce(const std::string& graph_file, std::ostream& out) {
    const UndirectedGraph graph = parse_graph(read_file(graph_file));
    out << serialize_instance(reduce_is_to_socstable(graph).instance);
    return 0;
}

int cmd_extract(const std::string& graph_file, const std::string& matching_file,
                std::ostream& out) {
    const UndirectedGraph graph = parse_graph(read_file(graph_file));
    const ReducedInstance reduced = reduce_is_to_socstable(graph);
    const Market market(reduced.instance);
    const Matching matching = parse_matching(read_file(matching_file), market);
    if (!is_socially_stable(market, matching))
        throw Error(Errc::ParseError, "matching in '" + matching_file +
                                          "' is not socially stable on the reduced instance");
    for (int v : extract_independent_set(market, reduced.map, matching))
        out << graph.vertices[v] << '\n';
    return 0;
}

int cmd_gen(const GenConfig& config, std::ostream& out) {
    out << serialize_instance(gen_random(config));
    return 0;
}

// One bench row per generated instance. Exact sizes (and the ratio) are
// filled in only when the oracle can afford the instance; the ratio cell is
// also left empty when the optimum is zero pairs.
void run_bench(int count, int max_agents, std::uint64_t seed, std::ostream& out) {
    constexpr double kAcceptChoices[] = {0.3, 0.5, 0.7, 1.0};
    constexpr double kSocialChoices[] = {0.0, 0.3, 0.7, 1.0};
    std::mt19937_64 master(seed);

    out << "instance_id,n_men,n_women,p_accept,p_social,seed,size_socgs,size_baseline,"
           "size_exact,ratio_socgs,da_runs\n";
    for (int id = 0; id < count; ++id) {
        GenConfig config;
        config.n_men = 1 + static_cast<int>(master() % std::max(1, max_agents / 2));
        config.n_women = 1 + static_cast<int>(master() % std::max(1, max_agents - config.n_men));
        config.p_accept = kAcceptChoices[master() % 4];
        config.p_social = kSocialChoices[master() % 4];
        config.seed = master();

        const Instance instance = gen_random(config);
        const Market market(instance);
        const SocGsResult result = socgs(market);
        const int size_socgs = cardinality(result.matching);
        const int size_baseline = cardinality(stable_baseline(market));

        out << id << ',' << config.n_men << ',' << config.n_women << ','
            << fixed_decimal(config.p_accept, 2) << ',' << fixed_decimal(config.p_social, 2)
            << ',' << config.seed << ',' << size_socgs << ',' << size_baseline << ',';
        if (config.n_men + config.n_women <= kDefaultOracleLimit) {
            const int size_exact = cardinality(exact_max_socially_stable(market));
            assert(3 * size_socgs >= 2 * size_exact);
            out << size_exact << ',';
            if (size_exact > 0)
                out << fixed_decimal(static_cast<double>(size_socgs) / size_exact, 6);
        } else {
            out << ',';
        }
        out << ',' << result.da_run_count << '\n';
    }
}

int cmd_bench(int count, int max_agents, std::uint64_t seed, const std::string& csv_path,
              std::ostream& out) {
    if (csv_path.empty()) {
        run_bench(count, max_agents, seed, out);
    } else {
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw Error(Errc::ParseError, "cannot write '" + csv_path + "'");
        run_bench(count, max_agents, seed, file);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"socially stable matching toolkit"};
    app.require_subcommand(1);

    std::string instance_file, matching_file, graph_file, csv_path;
    bool trace = false, social = false, classic = false;
    int limit = kDefaultOracleLimit;
    GenConfig gen_config;
    int bench_count = 100, bench_max_agents = 12;
    std::uint64_t bench_seed = 0;

    auto* solve = app.add_subcommand("solve", "run the 3/2-approximation on an instance file");
    solve->add_option("file", instance_file, "instance file")->required();
    solve->add_flag("--trace", trace, "write the per-run proposal log to stderr");

    auto* exact = app.add_subcommand("exact", "exhaustive maximum socially stable matching");
    exact->add_option("file", instance_file, "instance file")->required();
    exact->add_option("--limit", limit, "largest allowed men + women count");

    auto* check = app.add_subcommand("check", "test a matching for (social) stability");
    check->add_option("instance", instance_file, "instance file")->required();
    check->add_option("matching", matching_file, "matching file")->required();
    auto* social_flag = check->add_flag("--social", social, "check social stability (default)");
    check->add_flag("--classic", classic, "check classical stability")->excludes(social_flag);

    auto* reduce = app.add_subcommand("reduce", "encode an independent-set instance as a market");
    reduce->add_option("graph", graph_file, "graph file")->required();

    auto* extract = app.add_subcommand(
        "extract", "recover an independent set from a socially stable matching");
    extract->add_option("graph", graph_file, "graph file")->required();
    extract->add_option("matching", matching_file, "matching file")->required();

    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    gen->add_option("--men", gen_config.n_men, "number of men")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--women", gen_config.n_women, "number of women")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--p-accept", gen_config.p_accept, "mutual acceptability probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--p-social", gen_config.p_social, "social edge probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_config.seed, "generator seed")->required();
    gen->add_flag(
        "--asymmetric", [&](std::int64_t) { gen_config.symmetric = false; },
        "draw each side's acceptance independently");

    auto* bench = app.add_subcommand("bench", "solver comparison over random instances, as CSV");
    bench->add_option("--count", bench_count, "number of instances")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--max-agents", bench_max_agents, "upper bound on men + women")
        ->check(CLI::Range(2, 1000));
    bench->add_option("--seed", bench_seed, "master seed");
    bench->add_option("--csv", csv_path, "write rows to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(instance_file, trace, out, err);
        if (exact->parsed()) return cmd_exact(instance_file, limit, out);
        if (check->parsed()) return cmd_check(instance_file, matching_file, classic, out);
        if (reduce->parsed()) return cmd_reduce(graph_file, out);
        if (extract->parsed()) return cmd_extract(graph_file, matching_file, out);
        if (gen->parsed()) return cmd_gen(gen_config, out);
        if (bench->parsed()) return cmd_bench(bench_count, bench_max_agents, bench_seed, csv_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return (e.code() == Errc::InstanceTooLarge || e.code() == Errc::GraphTooLarge) ? 3 : 2;
    }
    return 2;
}

} // namespace socstable
