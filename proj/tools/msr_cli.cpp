// msr: solve, reduce, verify, fuzz, stats and gen for min-sum-radii instances.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 infeasible / invalid /
// mismatch, 3 size cap or timeout, 4 source screened as a trivial no.

#include "msr/msr.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>

namespace {

using namespace msr;

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::size_cap:
    case ErrorKind::timeout:
    case ErrorKind::weight_overflow:
        return 3;
    case ErrorKind::trivial_no:
        return 4;
    default:
        return 1;
    }
}

SolveOptions solve_options(long long timeout_ms)
{
    SolveOptions opts;
    opts.timeout = std::chrono::milliseconds(timeout_ms);
    return opts;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::invalid_argument, "cannot write '" + path + "'");
    body(out);
}

std::string budget_text(const MsrInstance& inst) { return inst.delta() ? std::to_string(*inst.delta()) : "none"; }

// ------------------------------------------------------------------ solve

struct SolveArgs {
    std::string instance;
    std::string algo = "auto";
    std::string output;
    long long timeout_ms = 60'000;
};

int cmd_solve(const SolveArgs& a)
{
    const auto inst = io::read_instance_file(a.instance);
    const auto opts = solve_options(a.timeout_ms);
    SolveReport r;
    if (a.algo == "dp")
        r = solve_cover_dp(inst, opts);
    else if (a.algo == "bb")
        r = solve_branch_bound(inst, opts);
    else if (a.algo == "enum")
        r = solve_enumerate(inst, opts);
    else
        r = solve(inst, opts);
    if (r.status == SolveStatus::timeout) {
        std::cout << "timeout\n";
        return 3;
    }
    if (!r.optimal()) {
        std::cout << "infeasible\n";
    } else {
        std::cout << "cost " << r.optimal_cost << "; " << io::format_pairs(r.clustering) << '\n';
        if (!a.output.empty())
            write_file(a.output, [&](std::ostream& out) { io::write_clustering(out, r.clustering); });
    }
    std::cout << "algorithm " << to_string(r.algorithm) << '\n'
              << "nodes " << r.nodes_explored << '\n'
              << "elapsed_ms " << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << '\n';
    return r.optimal() ? 0 : 2;
}

// ----------------------------------------------------------------- reduce

struct ReduceArgs {
    std::string source;
    std::string reduction;
    std::string output;
    bool published_weights = false;
};

int cmd_reduce(const ReduceArgs& a)
{
    std::optional<MsrInstance> inst;
    std::vector<Role> roles;
    const std::string& id = a.reduction;
    if (id == "thm1" || id == "thm2" || id == "thm5" || id == "thm6") {
        const auto mcc = io::read_mcc_file(a.source);
        const auto weights = a.published_weights ? AnchorLeafWeights::as_published : AnchorLeafWeights::repaired;
        ReductionArtifact art = id == "thm1" ? reduce_mcc_weighted_bipartite(mcc)
            : id == "thm2"                   ? reduce_mcc_vertex_cover(mcc, weights)
            : id == "thm5"                   ? reduce_mcc_allowed_kdelta(mcc)
                                             : reduce_mcc_allowed_fvs(mcc, kDefaultSubdivisionCap, weights);
        inst = std::move(art.instance);
        roles = std::move(art.roles);
    } else if (id == "thm3c" || id == "thm3cb") {
        const auto source = io::read_instance_file(a.source);
        inst = id == "thm3c" ? augment_complete(source) : augment_complete_bipartite(source);
    } else if (id == "thm4") {
        inst = reduce_ds_to_exact(io::read_ds_file(a.source));
    } else {
        throw Error(ErrorKind::invalid_argument, "unknown reduction '" + id + "'");
    }
    write_file(a.output, [&](std::ostream& out) { io::write_instance(out, *inst); });
    if (!roles.empty())
        write_file(a.output + ".roles", [&](std::ostream& out) { io::write_roles(out, roles); });
    std::cout << inst->size() << " points, k=" << inst->k() << ", Δ=" << budget_text(*inst)
              << ", variant=" << to_string(inst->kind()) << '\n';
    return 0;
}

// ----------------------------------------------------------------- verify

/// "(c,r) (c,r)" or "c:r,c:r": any run of integers read pairwise.
Clustering parse_pairs(const std::string& text)
{
    static const std::regex number("[0-9]+");
    std::vector<std::uint64_t> values;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
        values.push_back(io::parse_unsigned(it->str(), "pair entry"));
    if (values.size() % 2 != 0)
        throw Error(ErrorKind::parse, "pairs need an even number of integers");
    Clustering c;
    for (std::size_t i = 0; i < values.size(); i += 2)
        c.pairs.push_back({static_cast<Vertex>(values[i]), values[i + 1]});
    return c;
}

struct VerifyArgs {
    std::string instance;
    std::string clustering;
    std::string pairs;
};

int cmd_verify(const VerifyArgs& a)
{
    const auto inst = io::read_instance_file(a.instance);
    if (a.clustering.empty() == a.pairs.empty())
        throw Error(ErrorKind::invalid_argument, "give exactly one of a clustering file or --pairs");
    const auto c = a.pairs.empty() ? io::read_clustering_file(a.clustering) : parse_pairs(a.pairs);
    const auto v = verify_clustering(inst, c);
    if (v.valid()) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid: " << to_string(v.reason) << (v.detail.empty() ? "" : " (" + v.detail + ")") << '\n';
    return 2;
}

// ------------------------------------------------------------------- fuzz

/// "k=2..3,class=1..3,n=2..7"; a single number sets both ends.
void apply_bounds(const std::string& text, harness::FuzzConfig& cfg)
{
    static const std::regex item(R"(\s*(k|class|n)\s*=\s*([0-9]+)(?:\.\.([0-9]+))?\s*)");
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        const auto end = std::min(text.find(',', start), text.size());
        const std::string part = text.substr(start, end - start);
        std::smatch m;
        if (!std::regex_match(part, m, item))
            throw Error(ErrorKind::parse, "bad bound '" + part + "'; expected k=a..b, class=a..b or n=a..b");
        const auto lo = io::parse_unsigned(m[2].str(), "bound");
        const auto hi = m[3].matched ? io::parse_unsigned(m[3].str(), "bound") : lo;
        if (lo > hi)
            throw Error(ErrorKind::invalid_argument, "empty bound range '" + part + "'");
        if (m[1] == "k")
            cfg.k_min = lo, cfg.k_max = hi;
        else if (m[1] == "class")
            cfg.class_min = lo, cfg.class_max = hi;
        else
            cfg.n_min = lo, cfg.n_max = hi;
        start = end + 1;
    }
}

int cmd_fuzz(harness::FuzzConfig cfg, const std::string& bounds, long long timeout_ms)
{
    apply_bounds(bounds, cfg);
    cfg.solve.timeout = std::chrono::milliseconds(timeout_ms);
    const auto report = harness::fuzz_equivalence(cfg);
    harness::write_report(std::cout, report);
    return report.clean() ? 0 : 2;
}

// ------------------------------------------------------------------ stats

WeightedGraph load_graph(const std::string& path)
{
    if (std::filesystem::path(path).extension() == ".json")
        return io::read_instance_file(path).graph();
    return io::read_graph_file(path);
}

int cmd_stats(const std::string& path)
{
    const auto g = load_graph(path);
    const auto p = structural_profile(g);
    auto field = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::cout << "td=" << field(p.treedepth) << " tw=" << field(p.treewidth) << " vc=" << field(p.vertex_cover)
              << " fvs=" << field(p.feedback_vertex) << " ell=" << field(p.longest_path_order)
              << " nbhd=" << p.neighborhood_count_max << '\n';
    return 0;
}

// -------------------------------------------------------------------- gen

struct GenArgs {
    std::string kind = "instance";
    std::uint64_t seed = 1;
    std::size_t n = 6;
    std::size_t k = 2;
    std::size_t class_size = 2;
    double edge_prob = 0.5;
    Weight max_weight = 5;
    std::string variant = "standard";
    std::optional<Distance> delta;
    std::string output;
};

int cmd_gen(const GenArgs& a)
{
    std::ostringstream text;
    if (a.kind == "graph") {
        io::write_graph(text, harness::random_graph(a.seed, a.n, a.edge_prob, a.max_weight));
    } else if (a.kind == "instance") {
        const auto g = harness::random_graph(a.seed, a.n, a.edge_prob, a.max_weight);
        Variant v;
        if (a.variant == "standard")
            v = Variant::standard();
        else if (a.variant == "exact")
            v = Variant::exact_nonzero();
        else if (a.variant == "allowed") {
            harness::Rng rng(a.seed ^ 0xA11CEULL);
            std::vector<Vertex> allowed;
            for (Vertex x = 0; x < a.n; ++x)
                if (rng.chance(0.5))
                    allowed.push_back(x);
            if (allowed.empty())
                allowed.push_back(static_cast<Vertex>(rng.below(a.n)));
            v = Variant::allowed_centers(std::move(allowed));
        } else {
            throw Error(ErrorKind::invalid_argument, "unknown variant '" + a.variant + "'");
        }
        io::write_instance(text, MsrInstance::make(g, a.k, a.delta, std::move(v)));
    } else if (a.kind == "mcc") {
        io::write_mcc(text, harness::random_mcc(a.seed, a.k, 1, a.class_size, a.edge_prob));
    } else if (a.kind == "ds") {
        io::write_ds(text, DsInstance::make(harness::random_bipartite_graph(a.seed, a.n, a.edge_prob, 1), a.k));
    } else {
        throw Error(ErrorKind::invalid_argument, "unknown kind '" + a.kind + "'");
    }
    if (a.output.empty())
        std::cout << text.str();
    else
        write_file(a.output, [&](std::ostream& out) { out << text.str(); });
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"min-sum-radii solvers, reductions and checks"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "optimal clustering of an instance file");
    solve_cmd->add_option("instance", solve_args.instance)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--algo", solve_args.algo)->check(CLI::IsMember({"dp", "bb", "enum", "auto"}));
    solve_cmd->add_option("-o,--output", solve_args.output, "write the clustering here");
    solve_cmd->add_option("--timeout-ms", solve_args.timeout_ms, "0 disables");
    std::size_t unused_threads = 0;
    solve_cmd->add_option("--threads", unused_threads, "accepted for symmetry; solving is single-threaded");

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "build a reduced instance and its roles file");
    reduce_cmd->add_option("source", reduce_args.source)->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("--reduction", reduce_args.reduction)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3c", "thm3cb", "thm4", "thm5", "thm6"}));
    reduce_cmd->add_option("-o,--output", reduce_args.output)->required();
    reduce_cmd->add_flag("--published-weights", reduce_args.published_weights,
        "anchor construction with the leaf weights exactly as printed (known unsound)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check a clustering against an instance");
    verify_cmd->add_option("instance", verify_args.instance)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("clustering", verify_args.clustering)->check(CLI::ExistingFile);
    verify_cmd->add_option("--pairs", verify_args.pairs, "inline pairs such as \"(1,1) (4,2)\"");

    harness::FuzzConfig fuzz_cfg;
    std::string bounds;
    long long fuzz_timeout_ms = 60'000;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "equivalence check of a reduction against brute force");
    fuzz_cmd->add_option("--reduction", fuzz_cfg.reduction)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3c", "thm3cb", "thm4", "thm5", "thm6"}));
    fuzz_cmd->add_option("--seed", fuzz_cfg.seed);
    fuzz_cmd->add_option("--trials", fuzz_cfg.trials);
    fuzz_cmd->add_option("--bounds", bounds, "e.g. k=2..3,class=1..3,n=2..7");
    fuzz_cmd->add_flag("--exhaustive", fuzz_cfg.exhaustive);
    fuzz_cmd->add_option("--threads", fuzz_cfg.threads, "0 uses every core");
    fuzz_cmd->add_option("--artifacts", fuzz_cfg.artifacts_dir, "directory for mismatching instances");
    fuzz_cmd->add_option("--timeout-ms", fuzz_timeout_ms);

    std::string stats_path;
    auto* stats_cmd = app.add_subcommand("stats", "structural parameters of a graph");
    stats_cmd->add_option("graph", stats_path)->required()->check(CLI::ExistingFile);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "seeded random graph, instance or source problem");
    gen_cmd->add_option("kind", gen_args.kind)->check(CLI::IsMember({"graph", "instance", "mcc", "ds"}));
    gen_cmd->add_option("--seed", gen_args.seed);
    gen_cmd->add_option("-n", gen_args.n);
    gen_cmd->add_option("-k", gen_args.k);
    gen_cmd->add_option("--class-size", gen_args.class_size);
    gen_cmd->add_option("-p,--edge-prob", gen_args.edge_prob)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--max-weight", gen_args.max_weight)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--variant", gen_args.variant)->check(CLI::IsMember({"standard", "exact", "allowed"}));
    gen_cmd->add_option("--delta", gen_args.delta);
    gen_cmd->add_option("-o,--output", gen_args.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(solve_args);
        if (*reduce_cmd)
            return cmd_reduce(reduce_args);
        if (*verify_cmd)
            return cmd_verify(verify_args);
        if (*fuzz_cmd)
            return cmd_fuzz(fuzz_cfg, bounds, fuzz_timeout_ms);
        if (*stats_cmd)
            return cmd_stats(stats_path);
        if (*gen_cmd)
            return cmd_gen(gen_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
