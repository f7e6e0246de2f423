#include "kpc/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kpc/solver.hpp"

namespace kpc {

WitnessGraph build_witness(const Graph &g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.vertex_count();

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::set<std::pair<int, int>> kept(g.edges().begin(), g.edges().end());
    // Degrees only drop, so edges can lose eligibility but never regain it;
    // one pass over the initially eligible set suffices.
    std::set<std::pair<int, int>> candidates;
    for (auto e : kept)
        if (deg[e.first] > k && deg[e.second] > k) candidates.insert(e);

    WitnessGraph w;
    w.k = k;
    while (!candidates.empty()) {
        const auto e = *candidates.begin();
        candidates.erase(candidates.begin());
        if (deg[e.first] <= k || deg[e.second] <= k) continue;
        kept.erase(e);
        --deg[e.first];
        --deg[e.second];
        w.deletion_log.push_back(e);
    }

    w.base = Graph(n);
    for (auto e : g.edges())
        if (kept.count(e)) w.base.add_edge(e.first, e.second);
    return w;
}

WitnessVerdict check_witness(const WitnessGraph &w, const Graph &source) {
    if (w.base.vertex_count() != source.vertex_count())
        throw std::invalid_argument("witness and source vertex counts differ");

    WitnessVerdict verdict;
    for (auto [u, v] : w.base.edges()) {
        if (std::min(w.base.degree(u), w.base.degree(v)) > w.k)
            verdict.bad_edges.emplace_back(u, v);
        if (!source.has_edge(u, v)) verdict.not_in_source.emplace_back(u, v);
    }
    for (int v = 0; v < source.vertex_count(); ++v)
        if (w.base.degree(v) < std::min(w.k, source.degree(v))) verdict.deficient.push_back(v);
    return verdict;
}

TwoPhaseResult color_witness_two_phase(const WitnessGraph &w, const PaletteLists &lists, int s1) {
    const int n = w.base.vertex_count();
    const int k = w.k;
    if (lists.size() != n) throw std::invalid_argument("list count does not match witness");
    if (lists.k != k) throw std::invalid_argument("palette parameter mismatch");
    if (s1 < 1 || s1 >= lists.s) throw std::invalid_argument("invalid split point");

    TwoPhaseResult result;
    TwoPhaseTrace &trace = result.trace;
    trace.phase1_colors.assign(n, 0);
    trace.effective_lists.resize(n);

    const int t_size = std::max(1, (k + 3) / 4);  // ceil(k/4), clamped for k < 4
    for (int c = 1; c <= t_size; ++c) trace.color_subset.push_back(c);

    for (int v = 0; v < n; ++v)
        if (w.base.degree(v) > k) trace.high_degree.push_back(v);

    // Phase 1: each high-degree vertex takes the smallest color of T found
    // in the first s1 draws of its list. S is independent in a valid
    // witness, so these choices cannot clash with each other.
    for (int v : trace.high_degree) {
        auto [l1, l2] = split_list(lists.lists[v], s1);
        const auto d1 = distinct_colors(l1);
        const int chosen = (!d1.empty() && d1.front() <= t_size) ? d1.front() : 0;
        if (chosen == 0) {
            trace.outcome = TwoPhaseOutcome::Phase1Failure;
            return result;
        }
        trace.phase1_colors[v] = chosen;
    }

    // Phase 2: effective lists for the remainder R, then a proper list
    // coloring of the induced subgraph on R. Encoded as a demand instance:
    // demand(u) = deg_R(u) makes every R-R edge bichromatic, and Phase-1
    // vertices ride along with singleton lists.
    DemandInstance inst;
    inst.k = k;
    inst.h = Graph(n);
    inst.lists.resize(n);
    inst.demand.assign(n, 0);

    std::vector<char> in_s(n, 0);
    for (int v : trace.high_degree) in_s[v] = 1;

    for (auto [u, v] : w.base.edges())
        if (!in_s[u] && !in_s[v]) inst.h.add_edge(u, v);

    for (int u = 0; u < n; ++u) {
        if (in_s[u]) {
            inst.lists[u] = {trace.phase1_colors[u]};
            continue;
        }
        std::vector<char> forbidden(k + 2, 0);
        for (int x : w.base.neighbors(u))
            if (in_s[x]) forbidden[trace.phase1_colors[x]] = 1;
        auto [l1, l2] = split_list(lists.lists[u], s1);
        for (int c : distinct_colors(l2))
            if (!forbidden[c]) trace.effective_lists[u].push_back(c);
        inst.lists[u] = trace.effective_lists[u];
        inst.demand[u] = inst.h.degree(u);
    }

    SolverConfig cfg;
    cfg.mode = SolveMode::Exact;
    const SolveOutcome outcome = solve(inst, cfg);
    if (outcome.status != SolveStatus::Sat) {
        trace.outcome = TwoPhaseOutcome::Phase2Failure;
        return result;
    }

    Coloring combined = outcome.coloring;
    combined.palette_size = k + 1;
    if (!verify_proper(w.base, combined).ok())
        throw std::logic_error("two-phase coloring is not proper on the witness");
    trace.outcome = TwoPhaseOutcome::Success;
    result.coloring = std::move(combined);
    return result;
}

}  // namespace kpc
