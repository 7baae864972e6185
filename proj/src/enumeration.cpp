#include "domset/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace domset {

int unit_size(const CoverUnit& u) {
    switch (u.kind) {
        case UnitKind::Edge: return 2;
        case UnitKind::OddCycle: return u.cycle_length;
        case UnitKind::P3: return 3;
        case UnitKind::SingleVertex:
        case UnitKind::IsolatedVertex: return 1;
    }
    return 0;
}

std::vector<CoverUnit> cover_to_units(const std::vector<CoverComponent>& cover) {
    std::vector<CoverUnit> units;
    for (const auto& comp : cover) {
        if (comp.kind == CoverKind::Edge) {
            units.push_back({UnitKind::Edge, 0, DegreeConstraint::None});
        } else {
            units.push_back(
                {UnitKind::OddCycle, static_cast<int>(comp.vertices.size()), DegreeConstraint::None});
        }
    }
    return units;
}

namespace {

bool vertex_low(const HostGraph& g, int v, int threshold) { return g.degree[v] <= threshold; }

bool set_meets_constraint(const HostGraph& g, const VertexSet& vs, DegreeConstraint c,
                          int threshold) {
    switch (c) {
        case DegreeConstraint::None: return true;
        case DegreeConstraint::AllLow:
            return std::all_of(vs.begin(), vs.end(),
                               [&](int v) { return vertex_low(g, v, threshold); });
        case DegreeConstraint::ContainsHigh:
            return std::any_of(vs.begin(), vs.end(),
                               [&](int v) { return !vertex_low(g, v, threshold); });
    }
    return true;
}

void guard_size(size_t count, const std::string& tag) {
    if (count > kFamilySizeGuard)
        throw ResourceLimitError("enumeration '" + tag + "' exceeds family size guard");
}

// all vertex sets hosting a simple cycle of the given odd length,
// deduplicated; each cycle is discovered with its smallest vertex as the
// anchor of the DFS walk
std::vector<VertexSet> all_cycle_sets(const HostGraph& g, int length) {
    std::set<VertexSet> found;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    std::function<void(int)> walk = [&](int anchor) {
        int last = path.back();
        if (static_cast<int>(path.size()) == length) {
            if (g.has_edge(last, anchor)) {
                VertexSet vs = path;
                std::sort(vs.begin(), vs.end());
                found.insert(std::move(vs));
            }
            return;
        }
        for (int u : g.adj[last]) {
            if (u <= anchor || on_path[u]) continue;
            on_path[u] = 1;
            path.push_back(u);
            walk(anchor);
            path.pop_back();
            on_path[u] = 0;
        }
    };
    for (int v = 0; v < g.n; ++v) {
        path.assign(1, v);
        on_path[v] = 1;
        walk(v);
        on_path[v] = 0;
    }
    return {found.begin(), found.end()};
}

// candidate vertex sets for a single unit
std::vector<VertexSet> unit_candidates(const HostGraph& g, const CoverUnit& u) {
    int threshold = isqrt_floor(g.m());
    std::vector<VertexSet> out;
    switch (u.kind) {
        case UnitKind::Edge:
            for (auto [a, b] : g.edges) {
                VertexSet vs{a, b};
                if (set_meets_constraint(g, vs, u.constraint, threshold)) out.push_back(vs);
            }
            break;
        case UnitKind::P3:
            for (int center = 0; center < g.n; ++center) {
                const auto& nb = g.adj[center];
                for (size_t x = 0; x < nb.size(); ++x)
                    for (size_t y = x + 1; y < nb.size(); ++y) {
                        VertexSet vs{nb[x], center, nb[y]};
                        std::sort(vs.begin(), vs.end());
                        if (set_meets_constraint(g, vs, u.constraint, threshold))
                            out.push_back(std::move(vs));
                    }
            }
            break;
        case UnitKind::SingleVertex:
        case UnitKind::IsolatedVertex:
            for (int v = 0; v < g.n; ++v) {
                VertexSet vs{v};
                if (set_meets_constraint(g, vs, u.constraint, threshold)) out.push_back(vs);
            }
            break;
        case UnitKind::OddCycle: {
            if (u.cycle_length < 3 || u.cycle_length % 2 == 0)
                throw std::invalid_argument("odd cycle unit with non-odd length");
            for (auto& vs : all_cycle_sets(g, u.cycle_length))
                if (set_meets_constraint(g, vs, u.constraint, threshold))
                    out.push_back(std::move(vs));
            break;
        }
    }
    return out;
}

bool same_unit(const CoverUnit& a, const CoverUnit& b) {
    return a.kind == b.kind && a.cycle_length == b.cycle_length && a.constraint == b.constraint;
}

}  // namespace

std::vector<std::vector<VertexSet>> enumerate_unit_placements(
    const HostGraph& g, const std::vector<CoverUnit>& units) {
    std::vector<std::vector<VertexSet>> candidates;
    candidates.reserve(units.size());
    for (const auto& u : units) candidates.push_back(unit_candidates(g, u));

    std::vector<std::vector<VertexSet>> out;
    std::vector<VertexSet> current(units.size());
    std::vector<char> used(g.n, 0);
    // identical consecutive units take non-decreasing candidate indices so
    // each unordered placement appears once
    std::function<void(size_t, size_t)> place = [&](size_t i, size_t min_index) {
        if (i == units.size()) {
            out.push_back(current);
            guard_size(out.size(), "unit placement");
            return;
        }
        size_t start = (i > 0 && same_unit(units[i], units[i - 1])) ? min_index + 1 : 0;
        for (size_t c = start; c < candidates[i].size(); ++c) {
            const VertexSet& vs = candidates[i][c];
            if (std::any_of(vs.begin(), vs.end(), [&](int v) { return used[v]; })) continue;
            for (int v : vs) used[v] = 1;
            current[i] = vs;
            place(i + 1, c);
            for (int v : vs) used[v] = 0;
        }
    };
    if (units.empty()) return {{}};
    place(0, 0);
    return out;
}

CandidateFamily enumerate_units(const HostGraph& g, const std::vector<CoverUnit>& units,
                                const std::string& tag) {
    CandidateFamily fam;
    fam.tag = tag;
    std::set<VertexSet> dedup;
    for (const auto& placement : enumerate_unit_placements(g, units)) {
        VertexSet merged;
        for (const auto& vs : placement) merged.insert(merged.end(), vs.begin(), vs.end());
        std::sort(merged.begin(), merged.end());
        dedup.insert(std::move(merged));
    }
    fam.members.assign(dedup.begin(), dedup.end());
    guard_size(fam.members.size(), tag);
    return fam;
}

CandidateFamily enumerate_edges(const HostGraph& g, int count, DegreeConstraint constraint) {
    if (count < 0) throw std::invalid_argument("negative edge count");
    std::vector<CoverUnit> units(static_cast<size_t>(count),
                                 CoverUnit{UnitKind::Edge, 0, constraint});
    return enumerate_units(g, units, "edges");
}

CandidateFamily enumerate_odd_cycles(const HostGraph& g, int length, CycleSplit split) {
    if (length < 3 || length % 2 == 0)
        throw std::invalid_argument("cycle length must be odd and at least 3");
    DegreeConstraint c = split == CycleSplit::AllLow ? DegreeConstraint::AllLow
                         : split == CycleSplit::WithHighVertex ? DegreeConstraint::ContainsHigh
                                                               : DegreeConstraint::None;
    return enumerate_units(g, {CoverUnit{UnitKind::OddCycle, length, c}}, "odd-cycle");
}

CandidateFamily enumerate_pattern_candidates(const HostGraph& g, const Pattern& p,
                                             const PatternDecomposition& dec, bool require_heavy,
                                             int k_for_heavy) {
    // free slots for remainder vertices that are isolated in the pattern
    std::vector<CoverUnit> isolated_units;
    for (int v : dec.r)
        if (p.degree(v) == 0)
            isolated_units.push_back({UnitKind::IsolatedVertex, 0, DegreeConstraint::None});

    CandidateFamily fam;
    fam.tag = require_heavy ? "pattern-remainder+heavy" : "pattern-remainder";
    std::set<VertexSet> dedup;
    if (!require_heavy) {
        std::vector<CoverUnit> units = cover_to_units(dec.r_cover);
        units.insert(units.end(), isolated_units.begin(), isolated_units.end());
        for (auto& member : enumerate_units(g, units, fam.tag).members)
            dedup.insert(std::move(member));
    } else {
        VertexSet heavy = heavy_vertices(g, k_for_heavy);
        for (const auto& [x, cover] : dec.r_cover_minus) {
            std::vector<CoverUnit> units = cover_to_units(cover);
            units.insert(units.end(), isolated_units.begin(), isolated_units.end());
            for (const auto& member : enumerate_units(g, units, fam.tag).members) {
                for (int h : heavy) {
                    if (std::binary_search(member.begin(), member.end(), h)) continue;
                    VertexSet with_h = member;
                    with_h.insert(std::upper_bound(with_h.begin(), with_h.end(), h), h);
                    dedup.insert(std::move(with_h));
                    guard_size(dedup.size(), fam.tag);
                }
            }
        }
    }
    fam.members.assign(dedup.begin(), dedup.end());
    guard_size(fam.members.size(), fam.tag);
    return fam;
}

SplitPlan plan_split(const PatternDecomposition& dec, SplitScenario scenario,
                     std::optional<int> heavy_excluded_vertex) {
    const std::vector<CoverComponent>* base = &dec.r_cover;
    if (scenario != SplitScenario::SNonEmpty && heavy_excluded_vertex) {
        auto it = dec.r_cover_minus.find(*heavy_excluded_vertex);
        if (it == dec.r_cover_minus.end())
            throw std::invalid_argument("no cover recorded for the excluded vertex");
        base = &it->second;
    }
    if (scenario == SplitScenario::SNonEmpty && dec.rho < 0)
        throw std::invalid_argument("S-nonempty split requested for an empty-S decomposition");
    int beta = 0, alpha = 0;
    for (const auto& comp : *base) (comp.kind == CoverKind::Edge ? beta : alpha)++;
    if (scenario == SplitScenario::SEmptyCyclesOnly && beta != 0)
        throw std::invalid_argument("cycles-only split requested but cover has edges");
    if (scenario == SplitScenario::SEmptyWithEdges && beta == 0)
        throw std::invalid_argument("edge-bearing split requested but cover has no edges");

    std::vector<CoverUnit> units;
    for (const auto& comp : *base) {
        if (comp.kind == CoverKind::Edge) {
            units.push_back({UnitKind::Edge, 0, DegreeConstraint::None});
        } else {
            // a (2r+1)-cycle hosts r-1 independent edges plus one path P3
            int r = (static_cast<int>(comp.vertices.size()) - 1) / 2;
            for (int i = 0; i < r - 1; ++i)
                units.push_back({UnitKind::Edge, 0, DegreeConstraint::None});
            units.push_back({UnitKind::P3, 0, DegreeConstraint::None});
        }
    }
    if (scenario == SplitScenario::SNonEmpty) {
        for (size_t i = 0; i < dec.matching.size(); ++i)
            units.push_back({UnitKind::Edge, 0, DegreeConstraint::None});
        int leftover = static_cast<int>(dec.s.size()) - static_cast<int>(dec.ns.size());
        for (int i = 0; i < leftover; ++i)
            units.push_back({UnitKind::SingleVertex, 0, DegreeConstraint::None});
    }

    std::stable_sort(units.begin(), units.end(),
                     [](const CoverUnit& a, const CoverUnit& b) { return unit_size(a) > unit_size(b); });
    SplitPlan plan;
    for (const auto& u : units) {
        bool to_b1 = plan.b1_vertices <= plan.b2_vertices;
        (to_b1 ? plan.b1_units : plan.b2_units).push_back(u);
        (to_b1 ? plan.b1_vertices : plan.b2_vertices) += unit_size(u);
    }
    plan.heavy_side = plan.b1_vertices <= plan.b2_vertices ? 0 : 1;
    return plan;
}

}  // namespace domset
