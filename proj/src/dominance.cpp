#include "domset/dominance.hpp"

#include <algorithm>
#include <set>

#include "domset/linalg.hpp"

namespace domset {

VertexSet heavy_vertices(const HostGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("pattern order must be positive");
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (static_cast<long long>(k) * (g.degree[v] + 1) >= g.n) out.push_back(v);
    return out;
}

namespace {

void check_family(const HostGraph& g, const CandidateFamily& fam) {
    if (fam.members.size() > kFamilySizeGuard)
        throw ResourceLimitError("candidate family '" + fam.tag + "' exceeds size guard (" +
                                 std::to_string(fam.members.size()) + " members)");
    for (const auto& member : fam.members)
        for (int v : member)
            if (!g.valid_vertex(v))
                throw std::invalid_argument("family '" + fam.tag + "' has out-of-range vertex");
}

// uncovered[member][y] = 1 iff target y is outside the member's closed
// neighborhood; rows or columns depending on `transpose`
BitMatrix uncovered_matrix(const HostGraph& g, const CandidateFamily& fam,
                           const VertexSet& targets, bool transpose) {
    int rows = static_cast<int>(fam.members.size());
    int cols = static_cast<int>(targets.size());
    BitMatrix m(transpose ? cols : rows, transpose ? rows : cols);
    std::vector<char> covered(g.n);
    for (int a = 0; a < rows; ++a) {
        std::fill(covered.begin(), covered.end(), 0);
        for (int v : fam.members[a]) {
            covered[v] = 1;
            for (int u : g.adj[v]) covered[u] = 1;
        }
        for (int t = 0; t < cols; ++t)
            if (!covered[targets[t]]) {
                if (transpose)
                    m.set(t, a);
                else
                    m.set(a, t);
            }
    }
    return m;
}

}  // namespace

std::vector<Witness> solve_task(const HostGraph& g, const DominationTask& task) {
    check_family(g, task.family_a);
    check_family(g, task.family_b);
    for (int y : task.targets)
        if (!g.valid_vertex(y)) throw std::invalid_argument("target vertex out of range");

    int na = static_cast<int>(task.family_a.members.size());
    int nb = static_cast<int>(task.family_b.members.size());
    if (static_cast<size_t>(na) * static_cast<size_t>(nb) > kFamilySizeGuard * 4)
        throw ResourceLimitError("candidate pair count exceeds size guard");

    BitMatrix m1 = uncovered_matrix(g, task.family_a, task.targets, false);
    BitMatrix m2 = uncovered_matrix(g, task.family_b, task.targets, true);
    CountMatrix prod = product_count(m1, m2);

    std::set<VertexSet> seen;
    std::vector<Witness> out;
    VertexSet merged;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
            if (prod.at(a, b) != 0) continue;
            const VertexSet& va = task.family_a.members[a];
            const VertexSet& vb = task.family_b.members[b];
            merged.clear();
            std::set_union(va.begin(), va.end(), vb.begin(), vb.end(),
                           std::back_inserter(merged));
            if (!seen.insert(merged).second) continue;
            if (task.predicate && !task.predicate(merged)) continue;
            out.push_back(Witness{merged});
        }
    return out;
}

}  // namespace domset
