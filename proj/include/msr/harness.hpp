#pragma once

#include "msr/instance_io.hpp"
#include "msr/reductions.hpp"
#include "msr/reductions_io.hpp"
#include "msr/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace msr::harness {

/// splitmix64 step; used to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D), seeded
/// through splitmix64 so that nearby seeds give unrelated streams. Draws
/// are implemented here rather than through <random> distributions, whose
/// output differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
    {
        std::uint64_t s = seed;
        state_ = splitmix64(s);
        if (state_ == 0)
            state_ = 0x2545F4914F6CDD1DULL;
    }

    std::uint64_t next()
    {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true)
            if (const std::uint64_t x = next(); x >= threshold)
                return x % bound;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// True with probability p, using the top 53 bits.
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

private:
    std::uint64_t state_;
};

/// FNV-1a over a byte string.
inline std::uint64_t digest(std::string_view bytes)
{
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::string hex(std::uint64_t x)
{
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << x;
    return s.str();
}

inline std::string serialize(const MccInstance& mcc)
{
    std::ostringstream s;
    io::write_mcc(s, mcc);
    return s.str();
}

inline std::string serialize(const MsrInstance& inst)
{
    std::ostringstream s;
    io::write_instance(s, inst);
    return s.str();
}

inline std::string serialize(const DsInstance& ds)
{
    std::ostringstream s;
    io::write_ds(s, ds);
    return s.str();
}

// ---------------------------------------------------------------- oracles

/// First multicoloured clique in class-by-class, member-ascending order.
inline std::optional<std::vector<Vertex>> solve_mcc_bruteforce(const MccInstance& mcc, std::uint64_t cap = 1'000'000)
{
    const auto classes = mcc.classes();
    std::uint64_t product = 1;
    for (const auto& c : classes) {
        product *= c.size();
        if (product > cap)
            throw Error(ErrorKind::size_cap, "clique search space exceeds " + std::to_string(cap));
    }
    std::vector<Vertex> pick;
    std::function<bool(std::size_t)> extend = [&](std::size_t cls) {
        if (cls == classes.size())
            return true;
        for (const Vertex v : classes[cls]) {
            const bool fits = std::all_of(pick.begin(), pick.end(), [&](Vertex u) { return mcc.graph().has_edge(u, v); });
            if (!fits)
                continue;
            pick.push_back(v);
            if (extend(cls + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    if (extend(0))
        return pick;
    return std::nullopt;
}

inline bool dominates(const WeightedGraph& g, const std::vector<Vertex>& set)
{
    std::vector<bool> seen(g.order(), false);
    for (const Vertex v : set) {
        seen[v] = true;
        for (const Neighbor& nb : g.neighbors(v))
            seen[nb.to] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Smallest dominating set of size at most k, scanning subsets by size and
/// then lexicographically.
inline std::optional<std::vector<Vertex>> solve_ds_bruteforce(const WeightedGraph& g, std::size_t k, std::size_t cap = 20)
{
    const std::size_t n = g.order();
    if (n > cap)
        throw Error(ErrorKind::size_cap, "dominating-set search needs n <= " + std::to_string(cap));
    for (std::size_t s = 1; s <= std::min(k, n); ++s) {
        std::vector<Vertex> idx(s);
        for (Vertex i = 0; i < s; ++i)
            idx[i] = i;
        while (true) {
            if (dominates(g, idx))
                return idx;
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == n - s + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    if (n == 0)
        return std::vector<Vertex>{};
    return std::nullopt;
}

// ------------------------------------------------------------- generators

/// Classes get sizes drawn from [min_class, max_class]; vertices are laid
/// out class by class; each cross-class pair becomes an edge with
/// probability edge_prob.
inline MccInstance random_mcc(std::uint64_t seed, std::size_t k, std::size_t min_class, std::size_t max_class, double edge_prob)
{
    Rng rng(seed);
    std::vector<std::size_t> class_of;
    for (std::size_t c = 0; c < k; ++c) {
        const auto size = rng.between(min_class, max_class);
        for (std::size_t i = 0; i < size; ++i)
            class_of.push_back(c);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < class_of.size(); ++u)
        for (Vertex v = u + 1; v < class_of.size(); ++v)
            if (class_of[u] != class_of[v] && rng.chance(edge_prob))
                edges.push_back({u, v, 1});
    auto graph = build_graph(class_of.size(), std::move(edges));
    return MccInstance::make(std::move(graph), std::move(class_of), k);
}

/// G(n, p) with weights uniform in [1, max_weight], redrawn until connected.
inline WeightedGraph random_graph(std::uint64_t seed, std::size_t n, double edge_prob, Weight max_weight)
{
    Rng rng(seed);
    for (int attempt = 0; attempt < 100'000; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.chance(edge_prob))
                    edges.push_back({u, v, rng.between(1, max_weight)});
        auto g = build_graph(n, std::move(edges));
        if (is_connected(g))
            return g;
    }
    throw Error(ErrorKind::invalid_argument, "no connected graph drawn; edge probability too small");
}

/// Connected bipartite graph: vertices get random sides, cross pairs become
/// edges with probability edge_prob; redrawn until connected.
inline WeightedGraph random_bipartite_graph(std::uint64_t seed, std::size_t n, double edge_prob, Weight max_weight)
{
    Rng rng(seed);
    for (int attempt = 0; attempt < 100'000; ++attempt) {
        std::vector<bool> side(n);
        for (std::size_t v = 0; v < n; ++v)
            side[v] = rng.chance(0.5);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (side[u] != side[v] && rng.chance(edge_prob))
                    edges.push_back({u, v, rng.between(1, max_weight)});
        auto g = build_graph(n, std::move(edges));
        if (is_connected(g))
            return g;
    }
    throw Error(ErrorKind::invalid_argument, "no connected bipartite graph drawn");
}

/// Calls visit(graph) for every labelled connected graph on n vertices
/// (unit weights), in order of the edge bitmask over pairs (0,1),(0,2),...
inline void for_each_connected_graph(std::size_t n, const std::function<void(const WeightedGraph&)>& visit)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n)
            continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1)
                edges.push_back({pairs[i].first, pairs[i].second, 1});
        auto g = build_graph(n, std::move(edges));
        if (is_connected(g))
            visit(g);
    }
}

/// Every clique input with k classes of sizes in [1, max_class] and every
/// subset of cross-class edges.
inline std::vector<MccInstance> all_mcc(std::size_t k, std::size_t max_class)
{
    std::vector<MccInstance> out;
    std::vector<std::size_t> sizes(k, 1);
    while (true) {
        std::vector<std::size_t> class_of;
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t i = 0; i < sizes[c]; ++i)
                class_of.push_back(c);
        std::vector<std::pair<Vertex, Vertex>> cross;
        for (Vertex u = 0; u < class_of.size(); ++u)
            for (Vertex v = u + 1; v < class_of.size(); ++v)
                if (class_of[u] != class_of[v])
                    cross.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < cross.size(); ++i)
                if ((mask >> i) & 1)
                    edges.push_back({cross[i].first, cross[i].second, 1});
            out.push_back(MccInstance::make(build_graph(class_of.size(), std::move(edges)), class_of, k));
        }
        std::size_t c = 0;
        while (c < k && ++sizes[c] > max_class)
            sizes[c++] = 1;
        if (c == k)
            break;
    }
    return out;
}

// ----------------------------------------------------------------- fuzzing

struct FuzzConfig {
    std::string reduction = "thm1";
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    std::size_t k_min = 2;
    std::size_t k_max = 3;
    std::size_t class_min = 1;
    std::size_t class_max = 3;
    std::size_t n_min = 2; ///< dominating-set and corpus graphs
    std::size_t n_max = 7;
    std::size_t threads = 0; ///< 0: hardware concurrency
    std::string artifacts_dir;
    SolveOptions solve;
};

struct Mismatch {
    std::uint64_t seed = 0;
    bool source_answer = false;
    bool target_answer = false;
    std::string digest;
};

struct WitnessFailure {
    std::uint64_t seed = 0;
    std::string message;
};

struct EquivalenceReport {
    std::string reduction;
    std::size_t trials = 0;
    std::size_t agreements = 0;
    std::size_t yes_instances = 0;
    std::vector<Mismatch> mismatches;
    std::vector<WitnessFailure> witness_failures;
    std::vector<std::uint64_t> timeouts;
    double elapsed_seconds = 0;

    bool clean() const { return mismatches.empty() && witness_failures.empty() && timeouts.empty(); }
};

inline void write_report(std::ostream& out, const EquivalenceReport& r)
{
    out << "reduction " << r.reduction << '\n'
        << "trials " << r.trials << '\n'
        << "agreements " << r.agreements << '\n'
        << "yes_instances " << r.yes_instances << '\n'
        << "mismatches " << r.mismatches.size() << '\n'
        << "witness_failures " << r.witness_failures.size() << '\n'
        << "timeouts " << r.timeouts.size() << '\n';
    for (const auto& m : r.mismatches)
        out << "mismatch seed=" << m.seed << " source=" << (m.source_answer ? "yes" : "no")
            << " target=" << (m.target_answer ? "yes" : "no") << " digest=" << m.digest << '\n';
    for (const auto& w : r.witness_failures)
        out << "witness_failure seed=" << w.seed << " " << w.message << '\n';
    for (const auto t : r.timeouts)
        out << "timeout seed=" << t << '\n';
    out << (r.clean() ? "all agree" : "FAILED") << '\n';
}

/// What one trial produced.
struct TrialOutcome {
    std::uint64_t seed = 0;
    bool source_answer = false;
    bool target_answer = false;
    bool timed_out = false;
    std::string witness_error;
    std::string digest;
    std::string source_text;
    std::string target_text;
};

namespace detail {

inline void check_clique(const MccInstance& mcc, const CliqueExtraction& ex, TrialOutcome& t)
{
    if (!ex.ok())
        t.witness_error = ex.failure;
    else if (!is_multicolored_clique(mcc, ex.clique))
        t.witness_error = "extracted set is not a multicolored clique";
}

/// Source clique input -> reduction -> decide at the budget.
inline TrialOutcome mcc_trial(const std::string& id, const MccInstance& mcc, std::uint64_t seed, const SolveOptions& opts)
{
    TrialOutcome t;
    t.seed = seed;
    t.source_text = serialize(mcc);
    t.digest = hex(digest(t.source_text));
    t.source_answer = solve_mcc_bruteforce(mcc).has_value();
    ReductionArtifact a;
    try {
        if (id == "thm1")
            a = reduce_mcc_weighted_bipartite(mcc);
        else if (id == "thm2")
            a = reduce_mcc_vertex_cover(mcc);
        else if (id == "thm5")
            a = reduce_mcc_allowed_kdelta(mcc);
        else
            a = reduce_mcc_allowed_fvs(mcc);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::trivial_no)
            throw;
        t.target_answer = false;
        return t;
    }
    t.target_text = serialize(a.instance);
    const auto d = decide(a.instance, opts);
    t.target_answer = d.yes;
    if (!d.yes)
        return t;
    const bool anchors = id == "thm2" || id == "thm6";
    if (id == "thm1" && d.report.optimal_cost != *a.instance.delta())
        t.witness_error = "optimum " + std::to_string(d.report.optimal_cost) + " differs from budget";
    else
        check_clique(mcc, anchors ? extract_clique_thm2(a, d.report.clustering) : extract_clique_thm1(a, d.report.clustering), t);
    return t;
}

/// Decision at the budget before and after a fill augmentation.
inline TrialOutcome augment_trial(const std::string& id, const MsrInstance& inst, std::uint64_t seed, const SolveOptions& opts)
{
    TrialOutcome t;
    t.seed = seed;
    t.source_text = serialize(inst);
    t.digest = hex(digest(t.source_text));
    t.source_answer = decide(inst, opts).yes;
    const auto augmented = id == "thm3c" ? augment_complete(inst) : augment_complete_bipartite(inst);
    t.target_text = serialize(augmented);
    t.target_answer = decide(augmented, opts).yes;
    if (id == "thm3c" && !is_complete(augmented.graph()))
        t.witness_error = "augmented graph is not complete";
    if (id == "thm3cb" && !is_complete_bipartite(augmented.graph()))
        t.witness_error = "augmented graph is not complete bipartite";
    return t;
}

inline TrialOutcome ds_trial(const DsInstance& ds, std::uint64_t seed, const SolveOptions& opts)
{
    TrialOutcome t;
    t.seed = seed;
    t.source_text = serialize(ds);
    t.digest = hex(digest(t.source_text));
    t.source_answer = solve_ds_bruteforce(ds.graph, ds.k).has_value();
    const auto inst = reduce_ds_to_exact(ds);
    t.target_text = serialize(inst);
    const auto d = decide(inst, opts);
    t.target_answer = d.yes;
    if (d.yes) {
        std::vector<Vertex> centers;
        for (const auto& p : d.report.clustering.pairs) {
            centers.push_back(p.center);
            if (p.radius != 1)
                t.witness_error = "radius " + std::to_string(p.radius) + " at centre " + std::to_string(p.center);
        }
        if (t.witness_error.empty() && !dominates(ds.graph, centers))
            t.witness_error = "centres do not dominate";
    }
    return t;
}

/// Corpus instance for the augmentation checks: alternately a weighted
/// bipartite reduction output and a random connected bipartite instance
/// with budget at its optimum or one below.
inline MsrInstance augmentation_corpus_instance(std::uint64_t seed, const FuzzConfig& cfg)
{
    Rng rng(seed);
    if (rng.chance(0.5)) {
        while (true) {
            const auto mcc = random_mcc(rng.next(), 2, cfg.class_min, std::min<std::size_t>(cfg.class_max, 2), 0.6);
            try {
                return reduce_mcc_weighted_bipartite(mcc).instance;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::trivial_no)
                    throw;
            }
        }
    }
    const std::size_t n = rng.between(std::max<std::size_t>(cfg.n_min, 2), cfg.n_max);
    const auto g = random_bipartite_graph(rng.next(), n, 0.5, 5);
    const std::size_t k = rng.between(1, 3);
    auto inst = MsrInstance::make(g, k, std::nullopt, rng.chance(0.5) ? Variant::standard() : Variant::exact_nonzero());
    SolveOptions opts = cfg.solve;
    const auto opt = solve(inst, opts);
    Distance delta = opt.optimal() ? opt.optimal_cost : 0;
    if (delta > 0 && rng.chance(0.5))
        --delta;
    return inst.with_delta(delta);
}

} // namespace detail

/// Runs trial(i) for i in [0, count) on a thread pool; results come back in
/// index order whatever the thread count.
inline std::vector<TrialOutcome> run_parallel(std::size_t count, std::size_t threads,
    const std::function<TrialOutcome(std::size_t)>& trial)
{
    std::vector<TrialOutcome> out(count);
    std::vector<std::string> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                out[i] = trial(i);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::timeout) {
                    out[i].timed_out = true;
                } else {
                    errors[i] = e.what();
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    for (std::size_t i = 0; i < count; ++i)
        if (!errors[i].empty()) {
            out[i].witness_error = "trial raised: " + errors[i];
        }
    return out;
}

inline EquivalenceReport summarize(const std::string& id, const std::vector<TrialOutcome>& outcomes,
    const std::string& artifacts_dir)
{
    EquivalenceReport r;
    r.reduction = id;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& t = outcomes[i];
        if (t.timed_out) {
            r.timeouts.push_back(t.seed);
            continue;
        }
        if (t.source_answer == t.target_answer) {
            ++r.agreements;
            r.yes_instances += t.source_answer;
        } else {
            r.mismatches.push_back({t.seed, t.source_answer, t.target_answer, t.digest});
            if (!artifacts_dir.empty()) {
                std::filesystem::create_directories(artifacts_dir);
                const std::string stem = artifacts_dir + "/" + id + "-" + std::to_string(t.seed);
                std::ofstream(stem + ".source.txt") << t.source_text;
                std::ofstream(stem + ".target.json") << t.target_text;
            }
        }
        if (!t.witness_error.empty())
            r.witness_failures.push_back({t.seed, t.witness_error});
    }
    auto by_seed = [](const auto& a, const auto& b) { return a.seed < b.seed; };
    std::stable_sort(r.mismatches.begin(), r.mismatches.end(), by_seed);
    std::stable_sort(r.witness_failures.begin(), r.witness_failures.end(), by_seed);
    std::sort(r.timeouts.begin(), r.timeouts.end());
    // timed-out trials are listed but not counted, so agreements + mismatches = trials
    r.trials = r.agreements + r.mismatches.size();
    return r;
}

/// Reduction ids: thm1, thm2, thm3c, thm3cb, thm4, thm5, thm6. In
/// exhaustive mode clique reductions enumerate all inputs with k_min
/// classes of size up to class_max, and thm4 every connected bipartite
/// graph with n_min..n_max vertices and k in k_min..k_max; the seed field of
/// each trial is then its enumeration index.
inline EquivalenceReport fuzz_equivalence(const FuzzConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const std::string& id = cfg.reduction;
    SolveOptions opts = cfg.solve;
    opts.canonicalize = false;
    std::vector<TrialOutcome> outcomes;
    auto trial_seed = [&](std::size_t i) {
        std::uint64_t s = cfg.seed + i;
        return splitmix64(s);
    };

    if (id == "thm1" || id == "thm2" || id == "thm5" || id == "thm6") {
        if (cfg.exhaustive) {
            const auto all = all_mcc(cfg.k_min, cfg.class_max);
            outcomes = run_parallel(all.size(), cfg.threads,
                [&](std::size_t i) { return detail::mcc_trial(id, all[i], i, opts); });
        } else {
            outcomes = run_parallel(cfg.trials, cfg.threads, [&](std::size_t i) {
                const std::uint64_t seed = trial_seed(i);
                Rng rng(seed);
                const std::size_t k = rng.between(cfg.k_min, cfg.k_max);
                double p = static_cast<double>(rng.between(20, 95)) / 100.0;
                // half the trials sparse, so no-instances are common too
                if (rng.chance(0.5))
                    p /= static_cast<double>(cfg.class_max * cfg.class_max);
                return detail::mcc_trial(id, random_mcc(rng.next(), k, cfg.class_min, cfg.class_max, p), seed, opts);
            });
        }
    } else if (id == "thm3c" || id == "thm3cb") {
        outcomes = run_parallel(cfg.trials, cfg.threads, [&](std::size_t i) {
            const std::uint64_t seed = trial_seed(i);
            return detail::augment_trial(id, detail::augmentation_corpus_instance(seed, cfg), seed, opts);
        });
    } else if (id == "thm4") {
        if (cfg.exhaustive) {
            std::vector<DsInstance> all;
            for (std::size_t n = std::max<std::size_t>(cfg.n_min, 2); n <= cfg.n_max; ++n)
                for_each_connected_graph(n, [&](const WeightedGraph& g) {
                    if (!is_bipartite(g))
                        return;
                    for (std::size_t k = cfg.k_min; k <= cfg.k_max; ++k)
                        all.push_back(DsInstance::make(g, k));
                });
            outcomes = run_parallel(all.size(), cfg.threads,
                [&](std::size_t i) { return detail::ds_trial(all[i], i, opts); });
        } else {
            outcomes = run_parallel(cfg.trials, cfg.threads, [&](std::size_t i) {
                const std::uint64_t seed = trial_seed(i);
                Rng rng(seed);
                const std::size_t n = rng.between(std::max<std::size_t>(cfg.n_min, 2), cfg.n_max);
                const auto g = random_bipartite_graph(rng.next(), n, 0.5, 1);
                return detail::ds_trial(DsInstance::make(g, rng.between(cfg.k_min, cfg.k_max)), seed, opts);
            });
        }
    } else {
        throw Error(ErrorKind::invalid_argument, "unknown reduction '" + id + "'");
    }
    auto report = summarize(id, outcomes, cfg.artifacts_dir);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace msr::harness
