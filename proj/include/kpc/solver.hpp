#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kpc/demand.hpp"
#include "kpc/graph.hpp"

namespace kpc {

class budget_exceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SolveMode { Auto, Exact, HeuristicOnly };

struct SolverConfig {
    SolveMode mode = SolveMode::Auto;
    long node_limit = 200000;  // per restart; Exact mode runs unbounded
    int restarts = 8;
    std::uint64_t seed = 0;  // perturbs value ordering across restarts
};

enum class SolveStatus { Sat, Unsat, LimitExhausted };

struct SolveOutcome {
    SolveStatus status = SolveStatus::LimitExhausted;
    Coloring coloring;  // meaningful iff status == Sat; re-verified before return
    long nodes = 0;
    bool fast_path_used = false;
};

/// Fast path first: greedy proper list-coloring of h in decreasing-degree
/// order (properness implies every demand, since demand(v) <= deg_h(v)).
/// Otherwise complete backtracking over distinct list colors with
/// most-constrained-vertex ordering; a branch is cut when some assigned
/// vertex can no longer reach its demand even if all undecided neighbors
/// end up different. Unsat is only reported when a search exhausted the
/// space with no node limit in the way.
SolveOutcome solve(const DemandInstance &inst, const SolverConfig &cfg = {});

/// All (or the first `cap`) colorings chi: V -> [1, c] that are k-partial,
/// in lexicographic order. Throws budget_exceeded when c^n is too large and
/// no cap is set.
std::vector<Coloring> enumerate_k_partial(const Graph &g, int k, int c, long cap = 0);

enum class OracleVerdict { Sat, Unsat };

/// Ground-truth satisfiability by exhaustive enumeration over all list
/// assignments. Self-contained on purpose: shares no search code with
/// solve(). Throws budget_exceeded when the assignment space is too large.
OracleVerdict solve_oracle_check(const DemandInstance &inst);

}  // namespace kpc
