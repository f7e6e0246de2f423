#include "kpc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "kpc/rng.hpp"

namespace kpc {

namespace {

constexpr long kEnumBudget = 20'000'000;
constexpr long kOracleBudget = 20'000'000;

// Greedy proper list-coloring in decreasing-degree order. Returns an empty
// vector on failure.
std::vector<int> fast_path(const DemandInstance &inst) {
    const int n = inst.h.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inst.h.degree(a) > inst.h.degree(b); });

    std::vector<int> color(n, 0);
    for (int v : order) {
        int chosen = 0;
        for (int c : inst.lists[v]) {
            bool blocked = false;
            for (int u : inst.h.neighbors(v)) {
                if (color[u] == c) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                chosen = c;
                break;
            }
        }
        if (chosen == 0) return {};
        color[v] = chosen;
    }
    return color;
}

struct Searcher {
    const DemandInstance &inst;
    long node_limit;            // <= 0 means unbounded
    std::mt19937_64 *perturb;   // optional value-order tiebreak shuffle

    std::vector<int> color;     // 0 = unassigned
    std::vector<int> same;      // assigned neighbors sharing the vertex color
    std::vector<int> slack;     // deg_h(v) - demand(v), never changes
    std::vector<int> assigned_nb;
    long nodes = 0;
    bool limit_hit = false;

    explicit Searcher(const DemandInstance &i, long limit, std::mt19937_64 *rng)
        : inst(i), node_limit(limit), perturb(rng) {
        const int n = inst.h.vertex_count();
        color.assign(n, 0);
        same.assign(n, 0);
        assigned_nb.assign(n, 0);
        slack.resize(n);
        for (int v = 0; v < n; ++v) slack[v] = inst.h.degree(v) - inst.demand[v];
    }

    int pick_vertex() const {
        int best = -1;
        for (int v = 0; v < inst.h.vertex_count(); ++v) {
            if (color[v] != 0) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            if (slack[v] != slack[best]) {
                if (slack[v] < slack[best]) best = v;
            } else if (assigned_nb[v] != assigned_nb[best]) {
                if (assigned_nb[v] > assigned_nb[best]) best = v;
            }
        }
        return best;
    }

    bool dfs(int remaining) {
        if (remaining == 0) return true;
        const int v = pick_vertex();

        struct Candidate {
            int conflicts;
            int tiebreak;
            int c;
        };
        std::vector<Candidate> cands;
        cands.reserve(inst.lists[v].size());
        for (int c : inst.lists[v]) {
            int conflicts = 0;
            bool neighbor_dead = false;
            for (int u : inst.h.neighbors(v)) {
                if (color[u] != c) continue;
                ++conflicts;
                if (same[u] + 1 > slack[u]) {
                    neighbor_dead = true;
                    break;
                }
            }
            if (neighbor_dead || conflicts > slack[v]) continue;
            const int tb = perturb ? static_cast<int>((*perturb)() & 0x7FFFFFFF) : c;
            cands.push_back({conflicts, tb, c});
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate &a, const Candidate &b) {
            if (a.conflicts != b.conflicts) return a.conflicts < b.conflicts;
            if (a.tiebreak != b.tiebreak) return a.tiebreak < b.tiebreak;
            return a.c < b.c;
        });

        for (const Candidate &cand : cands) {
            ++nodes;
            if (node_limit > 0 && nodes > node_limit) {
                limit_hit = true;
                return false;
            }
            color[v] = cand.c;
            same[v] = cand.conflicts;
            for (int u : inst.h.neighbors(v)) {
                ++assigned_nb[u];
                if (color[u] == cand.c) ++same[u];
            }
            if (dfs(remaining - 1)) return true;
            for (int u : inst.h.neighbors(v)) {
                --assigned_nb[u];
                if (color[u] == cand.c) --same[u];
            }
            color[v] = 0;
            same[v] = 0;
            if (limit_hit) return false;
        }
        return false;
    }
};

}  // namespace

SolveOutcome solve(const DemandInstance &inst, const SolverConfig &cfg) {
    inst.validate();
    const int n = inst.h.vertex_count();

    SolveOutcome out;
    if (n == 0) {
        out.status = SolveStatus::Sat;
        out.coloring.palette_size = inst.palette_size();
        return out;
    }

    if (auto greedy = fast_path(inst); !greedy.empty()) {
        out.status = SolveStatus::Sat;
        out.coloring = Coloring{std::move(greedy), inst.palette_size()};
        out.fast_path_used = true;
        assert(satisfies_instance(inst, out.coloring));
        return out;
    }

    if (cfg.mode == SolveMode::HeuristicOnly) {
        out.status = SolveStatus::LimitExhausted;
        return out;
    }

    const int attempts = cfg.mode == SolveMode::Exact ? 1 : std::max(1, cfg.restarts);
    const long limit = cfg.mode == SolveMode::Exact ? 0 : cfg.node_limit;
    for (int r = 0; r < attempts; ++r) {
        std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        std::mt19937_64 *perturb = (r == 0 && cfg.seed == 0) ? nullptr : &rng;
        Searcher searcher(inst, limit, perturb);
        const bool found = searcher.dfs(n);
        out.nodes += searcher.nodes;
        if (found) {
            out.status = SolveStatus::Sat;
            out.coloring = Coloring{std::move(searcher.color), inst.palette_size()};
            if (!satisfies_instance(inst, out.coloring))
                throw std::logic_error("search produced an invalid coloring");
            return out;
        }
        if (!searcher.limit_hit) {
            out.status = SolveStatus::Unsat;
            return out;
        }
    }
    out.status = SolveStatus::LimitExhausted;
    return out;
}

std::vector<Coloring> enumerate_k_partial(const Graph &g, int k, int c, long cap) {
    if (k < 1 || c < 1) throw std::invalid_argument("k and c must be positive");
    const int n = g.vertex_count();

    double space = 1.0;
    for (int i = 0; i < n; ++i) space *= c;
    if (cap <= 0 && space > static_cast<double>(kEnumBudget))
        throw budget_exceeded("enumeration space too large and no cap set");

    std::vector<Coloring> found;
    std::vector<int> assignment(n, 1);
    while (true) {
        Coloring chi{assignment, c};
        if (verify_k_partial(g, k, chi).ok()) {
            found.push_back(std::move(chi));
            if (cap > 0 && static_cast<long>(found.size()) >= cap) break;
        }
        int pos = n - 1;
        while (pos >= 0 && assignment[pos] == c) {
            assignment[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++assignment[pos];
    }
    return found;
}

OracleVerdict solve_oracle_check(const DemandInstance &inst) {
    inst.validate();
    const int n = inst.h.vertex_count();
    if (n == 0) return OracleVerdict::Sat;

    double space = 1.0;
    for (const auto &list : inst.lists) {
        if (list.empty()) return OracleVerdict::Unsat;
        space *= static_cast<double>(list.size());
        if (space > static_cast<double>(kOracleBudget))
            throw budget_exceeded("list assignment space too large");
    }

    std::vector<std::size_t> idx(n, 0);
    std::vector<int> chi(n);
    for (int v = 0; v < n; ++v) chi[v] = inst.lists[v][0];
    while (true) {
        bool good = true;
        for (int v = 0; v < n && good; ++v) {
            int differing = 0;
            for (int u : inst.h.neighbors(v))
                if (chi[u] != chi[v]) ++differing;
            if (differing < inst.demand[v]) good = false;
        }
        if (good) return OracleVerdict::Sat;

        int pos = n - 1;
        while (pos >= 0 && idx[pos] + 1 == inst.lists[pos].size()) {
            idx[pos] = 0;
            chi[pos] = inst.lists[pos][0];
            --pos;
        }
        if (pos < 0) return OracleVerdict::Unsat;
        ++idx[pos];
        chi[pos] = inst.lists[pos][idx[pos]];
    }
}

}  // namespace kpc
