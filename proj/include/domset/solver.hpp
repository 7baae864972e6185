#pragma once

#include <map>
#include <optional>
#include <string>

#include "domset/graph.hpp"
#include "domset/pattern_analysis.hpp"

namespace domset {

struct SolveStats {
    std::map<std::string, long long> counters;     // candidate counts, product sizes
    std::vector<std::string> case_labels;          // which internal cases fired
    double elapsed_seconds = 0.0;
};

struct SolveResult {
    bool found = false;
    std::optional<Witness> witness;
    std::string route;       // basic-S-empty | basic-S-nonempty | triangle | k4 |
                             // isolated-r>=2 | isolated-r=1 | oracle-fallback | pattern-set
    int matched_member = -1; // index into the pattern set, when applicable
    SolveStats stats;
};

struct SolveOptions {
    uint64_t seed = 0;
    bool exact = true;   // exact matrix paths everywhere; hashed max-entry when false
    int threads = 1;
};

struct PatternSet {
    std::vector<Pattern> members;  // nonempty, all of equal order
};

/// Is there a k-subset that dominates g and induces p?
SolveResult solve(const HostGraph& g, const Pattern& p, const SolveOptions& options = {});

/// First member (in ascending budget order) admitting a dominating
/// induced copy.
SolveResult solve_pattern_set(const HostGraph& g, const PatternSet& ps,
                              const SolveOptions& options = {});

/// Dominating set whose induced subgraph contains p as a (not necessarily
/// induced) subgraph, solved through the closure of edge-supersets.
SolveResult solve_subgraph(const HostGraph& g, const Pattern& p,
                           const SolveOptions& options = {});

/// All k-vertex patterns obtained by adding edge supersets to p,
/// deduplicated by canonical form (p itself included).
std::vector<Pattern> edge_superset_closure(const Pattern& p);

/// Per-edge triangle counts in a declared tripartite graph: for every
/// g-edge between part1 and part2, the number of common neighbors in
/// part3. Edges inside a part are rejected.
std::map<std::pair<int, int>, long long> all_edges_triangle_count(const HostGraph& g,
                                                                  const VertexSet& part1,
                                                                  const VertexSet& part2,
                                                                  const VertexSet& part3);

}  // namespace domset
