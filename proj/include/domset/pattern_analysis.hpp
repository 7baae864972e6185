#pragma once

#include <map>
#include <optional>

#include "domset/graph.hpp"

namespace domset {

enum class CoverKind { Edge, OddCycle };

struct CoverComponent {
    CoverKind kind;
    VertexSet vertices;  // cycle components keep cyclic order, edges are {u, v}
};

/// Partition of the pattern into an independent set S maximizing
/// |S| - |N(S)|, its neighborhood, and the remainder R, together with a
/// matching saturating NS and edge/odd-cycle covers of the non-isolated
/// part of R and of that part minus any single vertex.
struct PatternDecomposition {
    VertexSet s, ns, r;
    int rho = -1;
    std::vector<std::pair<int, int>> matching;  // (s-vertex, ns-vertex)
    std::vector<CoverComponent> r_cover;
    std::map<int, std::vector<CoverComponent>> r_cover_minus;
};

struct Budget {
    int rho = -1;
    int k = 0;
    int n_exponent = 0;        // equals rho
    int m_exponent_num = 0;    // m exponent is m_exponent_num / 2
    double value = 0.0;
};

PatternDecomposition compute_rho(const Pattern& p);

std::vector<std::pair<int, int>> hall_matching(const Pattern& p, const VertexSet& s,
                                               const VertexSet& ns);

/// Vertex-disjoint edges and odd cycles of P covering r minus the
/// excluded vertex exactly. Empty optional means no cover exists, which
/// signals a broken decomposition upstream.
std::optional<std::vector<CoverComponent>> edge_cycle_cover(const Pattern& p, const VertexSet& r,
                                                            std::optional<int> excluded);

Budget budget(const Pattern& p, long long n, long long m);
Budget budget(const PatternDecomposition& dec, int k, long long n, long long m);

bool cover_is_valid(const Pattern& p, const std::vector<CoverComponent>& cover,
                    const VertexSet& expected_vertices);

}  // namespace domset
