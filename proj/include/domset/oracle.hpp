#pragma once

#include "domset/hardness.hpp"
#include "domset/solver.hpp"

namespace domset {

inline constexpr long long kOracleSubsetCap = 50'000'000;

struct OracleBudgetGuard {
    long long max_subsets = kOracleSubsetCap;
};

/// First lexicographic k-subset that dominates g and induces p, by plain
/// enumeration. Ground truth for the solvers; shares no solver code.
SolveResult oracle_solve(const HostGraph& g, const Pattern& p, OracleBudgetGuard guard = {});

/// Same enumeration, accepting any member of the set (induced match).
SolveResult oracle_solve_set(const HostGraph& g, const PatternSet& ps,
                             OracleBudgetGuard guard = {});

/// Same enumeration with a non-induced containment check (some injection
/// of p's vertices preserving all p-edges).
SolveResult oracle_solve_subgraph(const HostGraph& g, const Pattern& p,
                                  OracleBudgetGuard guard = {});

struct RhoOracleResult {
    int rho = -1;
    VertexSet maximizer;  // empty when rho == -1
};

/// Exhaustive maximizer of |S| - |N(S)| over independent subsets of
/// V(P) minus its isolated vertices, with the same tie-break as
/// compute_rho (value, then size, then lexicographic).
RhoOracleResult oracle_rho(const Pattern& p);

struct OvOracleResult {
    bool found = false;
    std::vector<int> tuple;  // index into each family
};

/// Exhaustive scan over the product of the vector families.
OvOracleResult oracle_ov(const OVInstance& instance, OracleBudgetGuard guard = {});

}  // namespace domset
