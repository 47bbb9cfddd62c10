// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
// Exit status counts unexpected outcomes. Criterion 7 has a documented
// deviation (subdivided clique reductions are one-directional); it prints
// FAIL and is not counted as long as the failure has exactly the documented
// shape. If it ever passes, or fails differently, that is unexpected.

#include "msr/msr.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace msr;

namespace {

const std::string kData = MSR_DATA_DIR;

struct Outcome {
    bool pass = true;
    bool documented_deviation = false;
    std::string summary;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("violated: " + what);
        }
    }
};

std::string report_line(const harness::EquivalenceReport& r)
{
    std::ostringstream s;
    s << r.reduction << ": " << r.trials << " trials, " << r.agreements << " agree (" << r.yes_instances << " yes), "
      << r.mismatches.size() << " mismatches, " << r.witness_failures.size() << " witness failures, " << r.timeouts.size()
      << " timeouts";
    return s.str();
}

void require_clean(Outcome& o, const harness::EquivalenceReport& r, std::size_t min_trials)
{
    o.notes.push_back(report_line(r));
    o.check(r.clean(), r.reduction + " report clean");
    o.check(r.trials >= min_trials, r.reduction + " has at least " + std::to_string(min_trials) + " trials");
    for (const auto& m : r.mismatches)
        o.notes.push_back("  mismatch seed " + std::to_string(m.seed) + " digest " + m.digest);
    for (const auto& w : r.witness_failures)
        o.notes.push_back("  witness failure seed " + std::to_string(w.seed) + ": " + w.message);
}

// ------------------------------------------------------------ solver corpus

struct CorpusEntry {
    MsrInstance instance;
    SolveReport reference;
};

std::vector<CorpusEntry>& solver_corpus()
{
    static std::vector<CorpusEntry> corpus;
    return corpus;
}

Outcome solver_agreement()
{
    Outcome o;
    constexpr std::size_t count = 540;
    std::size_t solves = 0, feasible = 0, disagreements = 0;
    std::array<std::size_t, 3> per_variant{};
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t s = 0xACCE97 + i;
        harness::Rng rng(harness::splitmix64(s));
        const std::size_t n = rng.between(2, 8);
        const Weight max_w = i % 2 == 0 ? 1 : 5;
        const auto g = harness::random_graph(rng.next(), n, 0.25 + 0.5 * static_cast<double>(rng.below(100)) / 100.0, max_w);
        const std::size_t k = 1 + i % 3;
        Variant v;
        switch ((i / 6) % 3) {
        case 0: v = Variant::standard(); break;
        case 1: v = Variant::exact_nonzero(); break;
        default: {
            std::vector<Vertex> allowed;
            for (Vertex x = 0; x < n; ++x)
                if (rng.chance(0.5))
                    allowed.push_back(x);
            if (allowed.empty())
                allowed.push_back(static_cast<Vertex>(rng.below(n)));
            v = Variant::allowed_centers(std::move(allowed));
        }
        }
        ++per_variant[static_cast<std::size_t>(v.kind)];
        const auto inst = MsrInstance::make(g, k, std::nullopt, v);
        const SolveReport r[3] = {solve_cover_dp(inst), solve_branch_bound(inst), solve_enumerate(inst)};
        solves += 3;
        bool same = true;
        for (const auto& x : r) {
            same = same && x.status == r[0].status && x.optimal_cost == r[0].optimal_cost;
            if (x.optimal()) {
                const auto verdict = verify_clustering(inst, x.clustering);
                same = same && verdict.valid() && x.clustering.cost() == x.optimal_cost;
            }
        }
        if (!same) {
            ++disagreements;
            o.notes.push_back("disagreement on corpus instance " + std::to_string(i) + ": costs " + std::to_string(r[0].optimal_cost)
                + " / " + std::to_string(r[1].optimal_cost) + " / " + std::to_string(r[2].optimal_cost));
        }
        feasible += r[0].optimal();
        solver_corpus().push_back({inst, r[0]});
    }
    o.check(disagreements == 0, "cover-dp, branch-bound and enumerate agree with verifiable witnesses");
    o.check(count >= 500, "at least 500 instances");
    o.summary = std::to_string(count) + " instances (standard " + std::to_string(per_variant[0]) + ", exact "
        + std::to_string(per_variant[1]) + ", allowed " + std::to_string(per_variant[2]) + "; " + std::to_string(feasible)
        + " feasible), " + std::to_string(solves) + " solves, " + std::to_string(disagreements) + " disagreements";
    return o;
}

// ------------------------------------------------------------ figure one

Outcome figure_one()
{
    Outcome o;
    const auto mcc = io::read_mcc_file(kData + "/fig1_mcc.txt");
    const auto a = reduce_mcc_weighted_bipartite(mcc);
    std::array<std::size_t, 4> roles{};
    for (const auto& r : a.roles)
        switch (r.kind) {
        case RoleKind::original: ++roles[0]; break;
        case RoleKind::apex: ++roles[1]; break;
        case RoleKind::leaf: ++roles[2]; break;
        case RoleKind::non_edge: ++roles[3]; break;
        default: break;
        }
    const Distance expected_budget = (Distance{1} << (3 + 1)) - 2;
    o.check(a.instance.size() == 26, "26 points");
    o.check(roles == std::array<std::size_t, 4>{6, 3, 12, 5}, "6 originals, 3 apexes, 12 leaves, 5 non-edge vertices");
    o.check(a.instance.k() == 3, "k = 3");
    o.check(a.instance.delta() == expected_budget, "budget 14");
    const auto bb = solve_branch_bound(a.instance);
    o.check(bb.optimal() && bb.optimal_cost == 14, "branch-and-bound optimum 14");
    const bool yes_at_13 = decide(a.instance.with_delta(13)).yes;
    o.check(!yes_at_13, "decide at 13 is no");
    const auto ex = extract_clique_thm1(a, bb.clustering);
    o.check(ex.ok() && is_multicolored_clique(mcc, ex.clique), "extracted centres form a multicolored clique");
    std::string clique;
    for (const Vertex v : ex.clique)
        clique += (clique.empty() ? "" : ",") + std::to_string(v);
    o.summary = std::to_string(a.instance.size()) + " points, k=" + std::to_string(a.instance.k()) + ", budget "
        + std::to_string(*a.instance.delta()) + ", optimum " + std::to_string(bb.optimal_cost) + " (" + std::to_string(bb.nodes_explored)
        + " nodes), decide(13)=" + (yes_at_13 ? "yes" : "no") + ", clique {" + clique + "}";
    o.notes.push_back("witness " + io::format_pairs(bb.clustering));
    return o;
}

// ------------------------------------------------------------ equivalences

harness::FuzzConfig fuzz(const std::string& id)
{
    harness::FuzzConfig cfg;
    cfg.reduction = id;
    return cfg;
}

Outcome weighted_bipartite_equivalence()
{
    Outcome o;
    auto cfg = fuzz("thm1");
    cfg.exhaustive = true;
    cfg.k_min = 2;
    cfg.class_max = 2;
    const auto exhaustive = harness::fuzz_equivalence(cfg);
    require_clean(o, exhaustive, 26);
    cfg = fuzz("thm1");
    cfg.trials = 200;
    cfg.seed = 1001;
    cfg.k_min = 2;
    cfg.k_max = 3;
    cfg.class_max = 3;
    const auto random = harness::fuzz_equivalence(cfg);
    require_clean(o, random, 200);
    o.summary = "exhaustive " + std::to_string(exhaustive.trials) + " + random " + std::to_string(random.trials)
        + " trials, optimum equal to budget and clique extracted on every yes-instance";
    return o;
}

Outcome vertex_cover_anatomy()
{
    Outcome o;
    const auto mcc = MccInstance::make(build_graph(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}}), {0, 0, 1, 1}, 2);
    const auto a = reduce_mcc_vertex_cover(mcc);
    const std::size_t n = 2, k = 2;
    std::vector<Distance> plus, minus;
    Distance budget = n * k;
    for (std::size_t i = 1; i <= k; ++i) {
        plus.push_back((Distance{1} << (2 * i)) * i * n);
        minus.push_back((Distance{1} << (2 * i + 1)) * i * n);
        budget += plus.back() + minus.back();
    }
    o.check(budget == 220 && a.instance.delta() == budget, "budget 220");
    o.check(a.meta.omega_plus == plus && a.meta.omega_minus == minus, "leaf weights (8,16,64,128)");
    const auto anchors = anchor_points(a);
    bool cover = anchors.size() == 2 * k, shortest = true;
    for (const Edge& e : a.instance.graph().edges()) {
        const bool hit = std::find(anchors.begin(), anchors.end(), e.u) != anchors.end()
            || std::find(anchors.begin(), anchors.end(), e.v) != anchors.end();
        cover = cover && hit;
        shortest = shortest && a.instance.metric().at(e.u, e.v) == e.w;
    }
    o.check(cover, "anchors form a vertex cover of size 2k");
    o.check(shortest, "every construction edge is a shortest path");

    auto cfg = fuzz("thm2");
    cfg.exhaustive = true;
    cfg.k_min = 2;
    cfg.class_max = 2;
    const auto exhaustive = harness::fuzz_equivalence(cfg);
    require_clean(o, exhaustive, 26);
    cfg = fuzz("thm2");
    cfg.trials = 100;
    cfg.seed = 2002;
    cfg.k_min = cfg.k_max = 2;
    cfg.class_min = cfg.class_max = 3;
    const auto random = harness::fuzz_equivalence(cfg);
    require_clean(o, random, 100);
    o.summary = "budget " + std::to_string(*a.instance.delta()) + ", leaf weights (" + std::to_string(plus[0]) + ","
        + std::to_string(minus[0]) + "," + std::to_string(plus[1]) + "," + std::to_string(minus[1]) + "), "
        + std::to_string(a.instance.graph().edges().size()) + " edges tight, vertex cover of " + std::to_string(anchors.size())
        + "; exhaustive " + std::to_string(exhaustive.trials) + " + random " + std::to_string(random.trials) + " trials";
    return o;
}

Outcome augmentation()
{
    Outcome o;
    auto cfg = fuzz("thm3c");
    cfg.trials = 120;
    cfg.seed = 3003;
    const auto complete = harness::fuzz_equivalence(cfg);
    require_clean(o, complete, 100);
    cfg.reduction = "thm3cb";
    const auto bipartite = harness::fuzz_equivalence(cfg);
    require_clean(o, bipartite, 100);
    o.summary = std::to_string(complete.trials) + " complete fills and " + std::to_string(bipartite.trials)
        + " complete-bipartite fills, decision and graph shape checked";
    return o;
}

Outcome dominating_set()
{
    Outcome o;
    auto cfg = fuzz("thm4");
    cfg.exhaustive = true;
    cfg.n_min = 2;
    cfg.n_max = 7;
    cfg.k_min = 1;
    cfg.k_max = 3;
    const auto r = harness::fuzz_equivalence(cfg);
    require_clean(o, r, 1);
    // labelled connected bipartite graphs on 2..7 vertices: 1+3+19+195+3031+67263
    const std::size_t graphs = 1 + 3 + 19 + 195 + 3031 + 67263;
    o.check(r.trials == 3 * graphs, "every connected bipartite graph with n <= 7 enumerated for k = 1, 2, 3");
    o.summary = std::to_string(r.trials / 3) + " graphs x 3 budgets, " + std::to_string(r.mismatches.size()) + " mismatches";
    return o;
}

// ------------------------------------------------------------ subdivision

Outcome subdivision()
{
    Outcome o;
    std::size_t outputs = 0, pairs_checked = 0, forests = 0, distance_faults = 0;
    std::size_t compared = 0, agree = 0, weighted_yes_unit_no = 0, other_mismatch = 0;

    auto distances_preserved = [&](const ReductionArtifact& weighted, const ReductionArtifact& unit) {
        ++outputs;
        const std::size_t n = weighted.instance.size();
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                ++pairs_checked;
                distance_faults += unit.instance.metric().at(u, v) != weighted.instance.metric().at(u, v);
            }
    };
    auto compare = [&](const MsrInstance& weighted, const MsrInstance& unit) {
        const bool w = decide(weighted).yes, u = decide(unit).yes;
        ++compared;
        if (w == u)
            ++agree;
        else if (w && !u)
            ++weighted_yes_unit_no;
        else
            ++other_mismatch;
    };

    std::vector<MccInstance> corpus = harness::all_mcc(2, 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        corpus.push_back(harness::random_mcc(seed + 7007, 2, 1, 3, 0.5));
    for (const auto& mcc : corpus) {
        try {
            const auto weighted = reduce_mcc_weighted_bipartite(mcc);
            const auto unit = reduce_mcc_allowed_kdelta(mcc);
            distances_preserved(weighted, unit);
            compare(weighted.instance, unit.instance);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::trivial_no)
                throw;
        }
        if (normalize_mcc(mcc).classes()[0].size() > 2)
            continue; // anchor weights grow with n; n <= 2 keeps the unit graph desk-sized
        const auto weighted = reduce_mcc_vertex_cover(mcc);
        const auto unit = reduce_mcc_allowed_fvs(mcc); // throws unless anchors meet every cycle
        std::vector<bool> removed(unit.instance.size(), false);
        for (const Vertex a : unit.instance.variant().allowed)
            removed[a] = true;
        forests += is_forest_after_removal(unit.instance.graph(), removed);
        distances_preserved(weighted, unit);
        compare(weighted.instance, unit.instance);
    }
    const auto fig1 = io::read_mcc_file(kData + "/fig1_mcc.txt");
    const auto fig1_weighted = reduce_mcc_weighted_bipartite(fig1);
    const auto fig1_unit = reduce_mcc_allowed_kdelta(fig1);
    distances_preserved(fig1_weighted, fig1_unit);
    compare(fig1_weighted.instance, fig1_unit.instance);
    const auto fig1_unit_opt = solve(fig1_unit.instance.with_delta(std::nullopt));

    const bool distances_ok = distance_faults == 0;
    const bool forests_ok = forests > 0 && forests == static_cast<std::size_t>(std::count_if(corpus.begin(), corpus.end(),
        [](const MccInstance& m) { return normalize_mcc(m).classes()[0].size() <= 2; }));
    const bool equivalence_ok = agree == compared;
    o.check(distances_ok, "original-vertex distances preserved");
    o.check(forests_ok, "anchor set is a feedback vertex set on every anchor output");
    o.check(equivalence_ok, "unit instances agree with weighted pre-images at the budget");
    o.notes.push_back("distance preservation: " + std::to_string(outputs) + " outputs, " + std::to_string(pairs_checked)
        + " original pairs, " + std::to_string(distance_faults) + " faults");
    o.notes.push_back("feedback vertex set: " + std::to_string(forests) + " anchor outputs leave a forest");
    o.notes.push_back("decision agreement: " + std::to_string(agree) + "/" + std::to_string(compared) + "; weighted yes but unit no: "
        + std::to_string(weighted_yes_unit_no) + "; other direction: " + std::to_string(other_mismatch));
    o.notes.push_back("figure-one input, unit instance: optimum " + std::to_string(fig1_unit_opt.optimal_cost) + " against budget "
        + std::to_string(*fig1_unit.instance.delta()));
    if (!equivalence_ok) {
        o.notes.push_back("analysis: subdivision points must be covered too; the weighted constructions are tight, so the radii");
        o.notes.push_back("  reach edge endpoints exactly and interior points of edges leaving unchosen vertices stay uncovered.");
        o.notes.push_back("  A unit solution still maps back to a weighted one, which is why only one direction fails.");
    }
    // documented shape: distances and forests fine, every disagreement one-directional
    o.documented_deviation = distances_ok && forests_ok && !equivalence_ok && other_mismatch == 0;
    o.summary = std::to_string(outputs) + " subdivided outputs; distances " + (distances_ok ? "preserved" : "BROKEN") + ", forests "
        + (forests_ok ? "verified" : "BROKEN") + ", decisions agree on " + std::to_string(agree) + "/" + std::to_string(compared);
    return o;
}

// ------------------------------------------------------------ structure

Outcome structural_bounds()
{
    Outcome o;
    std::size_t graphs = 0, violations = 0, unit_graphs = 0;
    auto check = [&](const WeightedGraph& g) {
        ++graphs;
        const auto p = structural_profile(g);
        const std::size_t td = p.treedepth.value(), tw = p.treewidth.value(), ell = p.longest_path_order.value();
        const std::size_t count = p.neighborhood_count_max;
        const std::size_t log_ell = ell <= 1 ? 0 : std::bit_width(ell - 1); // ceil(log2 ell)
        bool ok = tw <= td && log_ell <= td && td <= ell && count <= (std::size_t{1} << td);
        if (g.unit()) {
            ++unit_graphs;
            ok = ok && count <= ell;
        }
        if (!ok) {
            ++violations;
            std::ostringstream s;
            io::write_graph(s, g);
            o.notes.push_back("violation td=" + std::to_string(td) + " tw=" + std::to_string(tw) + " ell=" + std::to_string(ell)
                + " nbhd=" + std::to_string(count) + " on graph: " + s.str());
        }
    };
    for (std::size_t n = 1; n <= 5; ++n)
        harness::for_each_connected_graph(n, check);
    const std::size_t exhaustive = graphs;
    for (std::uint64_t i = 0; i < 240; ++i) {
        std::uint64_t s = 0x57 + i;
        harness::Rng rng(harness::splitmix64(s));
        const std::size_t n = rng.between(2, 7);
        check(harness::random_graph(rng.next(), n, 0.2 + 0.6 * static_cast<double>(rng.below(100)) / 100.0, i % 2 ? 5 : 1));
    }
    // labelled connected graphs on 1..5 vertices: 1+1+4+38+728
    o.check(exhaustive == 772, "all 772 connected graphs on at most 5 vertices");
    o.check(violations == 0, "tw <= td, ceil(log2 ell) <= td <= ell, nbhd <= 2^td, unit nbhd <= ell");
    o.summary = std::to_string(exhaustive) + " exhaustive + " + std::to_string(graphs - exhaustive) + " random graphs ("
        + std::to_string(unit_graphs) + " unit), " + std::to_string(violations) + " violations";
    return o;
}

Outcome budget_pruning()
{
    Outcome o;
    std::size_t decisions = 0, differences = 0;
    SolveOptions pruned, full;
    full.prune_radii = false;
    for (std::size_t i = 0; i < solver_corpus().size(); ++i) {
        const auto& [inst, ref] = solver_corpus()[i];
        std::vector<Distance> budgets;
        if (ref.optimal()) {
            budgets.push_back(ref.optimal_cost);
            if (ref.optimal_cost > 0)
                budgets.push_back(ref.optimal_cost - 1);
        } else {
            budgets.push_back(0);
        }
        for (const Distance b : budgets) {
            const auto at = inst.with_delta(b);
            const bool a = decide(at, pruned).yes, c = decide(at, full).yes;
            const bool truth = ref.optimal() && b >= ref.optimal_cost;
            decisions += 2;
            if (a != c || a != truth) {
                ++differences;
                o.notes.push_back("instance " + std::to_string(i) + " budget " + std::to_string(b) + ": pruned "
                    + (a ? "yes" : "no") + ", unpruned " + (c ? "yes" : "no"));
            }
        }
    }
    o.check(!solver_corpus().empty(), "solver corpus available");
    o.check(differences == 0, "pruned and unpruned decisions equal");
    o.summary = std::to_string(decisions) + " decisions on " + std::to_string(solver_corpus().size())
        + " corpus instances at optimum and optimum-1, " + std::to_string(differences) + " differences";
    return o;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "solver oracle agreement", solver_agreement},
        {2, "figure-one golden reduction", figure_one},
        {3, "weighted bipartite reduction equivalence", weighted_bipartite_equivalence},
        {4, "vertex-cover reduction anatomy and equivalence", vertex_cover_anatomy},
        {5, "complete and complete-bipartite fills preserve decisions", augmentation},
        {6, "dominating set to exact variant, exhaustive", dominating_set},
        {7, "unit subdivision with allowed centres", subdivision},
        {8, "structural parameter bounds", structural_bounds},
        {9, "budget pruning preserves decisions", budget_pruning},
    };
    int unexpected = 0, passed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("raised: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << seconds << " s";
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " -- " << o.summary << " ["
                  << time.str() << "]";
        const bool documented = c.number == 7 && !o.pass && o.documented_deviation;
        if (documented)
            std::cout << " (documented deviation, see README)";
        std::cout << '\n';
        for (const auto& note : o.notes)
            std::cout << "     " << note << '\n';
        std::cout.flush();
        passed += o.pass;
        const bool expected = c.number == 7 ? documented : o.pass;
        if (!expected) {
            ++unexpected;
            if (c.number == 7 && o.pass)
                std::cout << "     unexpected: criterion 7 now passes; update the documented deviation\n";
        }
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass; " << unexpected << " unexpected outcome(s)\n";
    return unexpected == 0 ? 0 : 1;
}
