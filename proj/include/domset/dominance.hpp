#pragma once

#include <functional>
#include <string>

#include "domset/graph.hpp"

namespace domset {

/// Members above this count abort with ResourceLimitError instead of
/// exhausting memory.
inline constexpr size_t kFamilySizeGuard = 1u << 24;

struct CandidateFamily {
    std::vector<VertexSet> members;  // each sorted ascending
    std::string tag;
};

struct DominationTask {
    VertexSet targets;  // Y, the vertices to dominate
    CandidateFamily family_a;
    CandidateFamily family_b;
    std::function<bool(const VertexSet&)> predicate;
};

/// {v : k * (deg(v) + 1) >= n} — every dominating set of size k must
/// contain one of these.
VertexSet heavy_vertices(const HostGraph& g, int k);

/// All deduplicated sorted unions A ∪ B (A from family_a, B from family_b)
/// whose closed neighborhood covers the targets and which pass the
/// predicate. Domination is decided for all pairs at once through a
/// count product of the per-member "leaves y uncovered" indicator
/// matrices: a zero entry means the pair covers all of Y.
std::vector<Witness> solve_task(const HostGraph& g, const DominationTask& task);

}  // namespace domset
