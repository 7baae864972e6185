#pragma once

#include <optional>

#include "domset/dominance.hpp"
#include "domset/pattern_analysis.hpp"

namespace domset {

enum class UnitKind { Edge, OddCycle, P3, SingleVertex, IsolatedVertex };

/// "low" means degree <= isqrt(m); AllLow requires every vertex of the
/// unit low, ContainsHigh requires at least one vertex above the
/// threshold.
enum class DegreeConstraint { None, AllLow, ContainsHigh };

struct CoverUnit {
    UnitKind kind = UnitKind::Edge;
    int cycle_length = 0;  // only for OddCycle, odd >= 3
    DegreeConstraint constraint = DegreeConstraint::None;
};

enum class CycleSplit { AllLow, WithHighVertex, Both };

enum class SplitScenario { SEmptyWithEdges, SEmptyCyclesOnly, SNonEmpty };

struct SplitPlan {
    std::vector<CoverUnit> b1_units, b2_units;
    int heavy_side = 0;  // side that additionally receives the heavy vertex
    int b1_vertices = 0, b2_vertices = 0;
};

/// All sets of `count` pairwise vertex-disjoint edges meeting the degree
/// constraint, flattened to sorted vertex sets.
CandidateFamily enumerate_edges(const HostGraph& g, int count, DegreeConstraint constraint);

/// All vertex sets hosting a (not necessarily induced) cycle of the given
/// odd length whose vertices satisfy the split. AllLow builds cycles from
/// low-degree vertices only; WithHighVertex requires one vertex above the
/// threshold; Both is their union and equals the set of all such cycles.
CandidateFamily enumerate_odd_cycles(const HostGraph& g, int length, CycleSplit split);

/// All vertex-disjoint placements of the unit list in g, flattened to
/// sorted vertex sets and deduplicated.
CandidateFamily enumerate_units(const HostGraph& g, const std::vector<CoverUnit>& units,
                                const std::string& tag);

/// Structured variant of enumerate_units: each placement keeps the
/// per-unit vertex sets in unit order.
std::vector<std::vector<VertexSet>> enumerate_unit_placements(const HostGraph& g,
                                                              const std::vector<CoverUnit>& units);

/// Vertex sets hosting the cover of P[R] (plus free slots for isolated
/// remainder vertices); with require_heavy, one cover vertex is replaced
/// by a heavy vertex via the covers of P[R - x].
CandidateFamily enumerate_pattern_candidates(const HostGraph& g, const Pattern& p,
                                             const PatternDecomposition& dec, bool require_heavy,
                                             int k_for_heavy);

/// Units derived from the decomposition's cover (each odd cycle of length
/// 2r+1 split into r-1 edges and one P3), distributed over two sides so
/// the vertex-count gap is at most 3 with cycles only and at most 2
/// otherwise. The S-nonempty scenario adds the Hall-matching edges and
/// splits the |S|-|N(S)| leftover vertices as single-vertex units.
SplitPlan plan_split(const PatternDecomposition& dec, SplitScenario scenario,
                     std::optional<int> heavy_excluded_vertex);

std::vector<CoverUnit> cover_to_units(const std::vector<CoverComponent>& cover);

int unit_size(const CoverUnit& u);

}  // namespace domset
