#include "domset/hardness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace domset {

ReductionLayout plan_reduction(const Pattern& p, long long n, long long m) {
    if (n < p.k) throw std::invalid_argument("target n must be at least the pattern order");
    if (m < 1 || m > n * n) throw std::invalid_argument("target m must satisfy 1 <= m <= n^2");

    PatternDecomposition dec = compute_rho(p);
    ReductionLayout layout;
    layout.pattern = p;
    layout.target_n = n;
    layout.target_m = m;

    long long m_over_n = m / n;
    long long root_m = isqrt_floor(m);
    std::vector<std::pair<int, long long>> assignment;  // (pattern vertex, group size)
    if (dec.rho >= 0) {
        for (int v : dec.s) assignment.emplace_back(v, n);
        for (int v : dec.ns) assignment.emplace_back(v, m_over_n);
        for (int v : dec.r) assignment.emplace_back(v, root_m);
    } else {
        // one group of m/n vectors on the first pattern vertex, the rest
        // at sqrt(m)
        assignment.emplace_back(0, m_over_n);
        for (int v = 1; v < p.k; ++v) assignment.emplace_back(v, root_m);
    }
    std::sort(assignment.begin(), assignment.end());
    for (auto [v, size] : assignment) {
        if (size < 1)
            throw std::invalid_argument("degenerate layout: group for pattern vertex " +
                                        std::to_string(v) + " floors to zero (n=" +
                                        std::to_string(n) + ", m=" + std::to_string(m) + ")");
        layout.pattern_vertex.push_back(v);
        layout.group_sizes.push_back(static_cast<int>(size));
        long long r_size = std::max<long long>(2, (m + size - 1) / size);
        layout.r_sizes.push_back(static_cast<int>(r_size));
    }
    return layout;
}

OVInstance make_ov_instance(const ReductionLayout& layout, int d, VectorMode mode, uint64_t seed) {
    if (d < 1 || d > 64) throw std::invalid_argument("dimension must be in [1, 64]");
    OVInstance inst;
    inst.k = layout.pattern.k;
    inst.d = d;
    uint64_t all = d >= 64 ? ~0ull : (1ull << d) - 1;
    std::mt19937_64 rng(seed);
    for (int size : layout.group_sizes) {
        std::vector<uint64_t> family(size);
        for (auto& vec : family) vec = mode == VectorMode::None ? all : (rng() & all);
        inst.sets.push_back(std::move(family));
    }
    if (mode == VectorMode::PlantedOrthogonal) {
        // zero one coordinate per position of a random tuple so the tuple
        // has all-zero coordinatewise product
        std::vector<int> tuple;
        for (int i = 0; i < inst.k; ++i)
            tuple.push_back(static_cast<int>(rng() % inst.sets[i].size()));
        for (int t = 0; t < d; ++t) {
            int owner = static_cast<int>(rng() % inst.k);
            inst.sets[owner][tuple[owner]] &= ~(1ull << t);
        }
    }
    return inst;
}

ReductionOutput reduce(const OVInstance& instance, const ReductionLayout& layout) {
    int k = layout.pattern.k;
    if (instance.k != k) throw std::invalid_argument("instance/pattern order mismatch");
    for (int i = 0; i < k; ++i)
        if (static_cast<int>(instance.sets[i].size()) != layout.group_sizes[i])
            throw std::invalid_argument("instance family size differs from layout group size");

    ReductionOutput out;
    std::vector<int> v_begin(k), r_begin(k);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        v_begin[i] = next;
        next += layout.group_sizes[i];
        out.blocks.push_back({"V" + std::to_string(i + 1), v_begin[i], next});
    }
    for (int i = 0; i < k; ++i) {
        r_begin[i] = next;
        next += layout.r_sizes[i];
        out.blocks.push_back({"R" + std::to_string(i + 1), r_begin[i], next});
    }
    int x_begin = next;
    next += instance.d;
    out.blocks.push_back({"X", x_begin, next});

    std::vector<std::pair<int, int>> edges;
    // each R_i is fully joined to V_i and nothing else, forcing any
    // dominating set to pick a vertex of V_i
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < layout.group_sizes[i]; ++j)
            for (int r = 0; r < layout.r_sizes[i]; ++r)
                edges.emplace_back(v_begin[i] + j, r_begin[i] + r);
    // coordinate vertices: X_t adjacent to v_{i,j} iff the vector has a
    // 0 at position t
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < layout.group_sizes[i]; ++j)
            for (int t = 0; t < instance.d; ++t)
                if (!((instance.sets[i][j] >> t) & 1ull))
                    edges.emplace_back(v_begin[i] + j, x_begin + t);
    // pattern edges become complete joins between groups; isolated
    // pattern vertices make their group an internal clique
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (layout.pattern.has_edge(layout.pattern_vertex[i], layout.pattern_vertex[j]))
                for (int a = 0; a < layout.group_sizes[i]; ++a)
                    for (int b = 0; b < layout.group_sizes[j]; ++b)
                        edges.emplace_back(v_begin[i] + a, v_begin[j] + b);
    for (int i = 0; i < k; ++i)
        if (layout.pattern.degree(layout.pattern_vertex[i]) == 0)
            for (int a = 0; a < layout.group_sizes[i]; ++a)
                for (int b = a + 1; b < layout.group_sizes[i]; ++b)
                    edges.emplace_back(v_begin[i] + a, v_begin[i] + b);

    out.graph = HostGraph::from_edges(next, std::move(edges));
    return out;
}

AuditReport audit_sizes(const HostGraph& g, const ReductionLayout& layout, int d) {
    AuditReport rep;
    long long n = layout.target_n, m = layout.target_m;
    long long k = layout.pattern.k;
    rep.vertices = g.n;
    rep.edges = g.m();
    rep.v_lower = d + n;
    rep.v_upper = 2 * k * n + d;
    rep.e_lower = m;
    rep.e_upper = k * (m + n * d + (k - 1) * m / 2);
    rep.ok = rep.v_lower <= rep.vertices && rep.vertices <= rep.v_upper &&
             rep.e_lower <= rep.edges && rep.edges <= rep.e_upper;
    std::ostringstream detail;
    detail << "|V|=" << rep.vertices << " in [" << rep.v_lower << "," << rep.v_upper << "]; |E|="
           << rep.edges << " in [" << rep.e_lower << "," << rep.e_upper << "]";
    if (!rep.ok) detail << " -- BOUND VIOLATED";
    rep.detail = detail.str();
    return rep;
}

std::string blocks_to_json(const ReductionOutput& out) {
    std::ostringstream os;
    os << "{\"blocks\":[";
    for (size_t i = 0; i < out.blocks.size(); ++i) {
        if (i) os << ',';
        os << "{\"name\":\"" << out.blocks[i].name << "\",\"begin\":" << out.blocks[i].begin
           << ",\"end\":" << out.blocks[i].end << '}';
    }
    os << "]}";
    return os.str();
}

}  // namespace domset
