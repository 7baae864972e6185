#include "domset/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <queue>
#include <set>

#include "domset/dominance.hpp"
#include "domset/enumeration.hpp"
#include "domset/linalg.hpp"

namespace domset {

namespace {

VertexSet all_vertices(const HostGraph& g) {
    VertexSet out(g.n);
    for (int v = 0; v < g.n; ++v) out[v] = v;
    return out;
}

std::function<bool(const VertexSet&)> pattern_predicate(const HostGraph& g, const Pattern& p) {
    return [&g, &p](const VertexSet& d) {
        return static_cast<int>(d.size()) == p.k && induces_pattern(g, d, p);
    };
}

void verify_witness(const HostGraph& g, const Pattern& p, const Witness& w) {
    if (!is_dominating(g, w.vertices) || !induces_pattern(g, w.vertices, p))
        throw std::logic_error("internal error: solver produced an invalid witness");
}

VertexSet sorted_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet insert_vertex(const VertexSet& vs, int v) {
    VertexSet out = vs;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

bool contains(const VertexSet& vs, int v) {
    return std::binary_search(vs.begin(), vs.end(), v);
}

// every unit of the plan's side plus, on the heavy side, the fixed heavy
// vertex appended to each member
CandidateFamily side_family(const HostGraph& g, const std::vector<CoverUnit>& units,
                            std::optional<int> fixed_vertex, const std::string& tag) {
    CandidateFamily fam = enumerate_units(g, units, tag);
    if (!fixed_vertex) return fam;
    CandidateFamily out;
    out.tag = tag + "+fixed";
    for (const auto& member : fam.members) {
        if (contains(member, *fixed_vertex)) continue;
        out.members.push_back(insert_vertex(member, *fixed_vertex));
    }
    return out;
}

std::vector<CoverUnit> with_constraint(std::vector<CoverUnit> units, DegreeConstraint c) {
    for (auto& u : units) u.constraint = c;
    return units;
}

// matching edges, leftover single vertices of S, and the cover units of
// the remainder: placements of these host every copy of the non-isolated
// part of the pattern
std::vector<CoverUnit> full_pattern_units(const PatternDecomposition& dec) {
    std::vector<CoverUnit> units;
    for (size_t i = 0; i < dec.matching.size(); ++i)
        units.push_back({UnitKind::Edge, 0, DegreeConstraint::None});
    int leftover = static_cast<int>(dec.s.size()) - static_cast<int>(dec.ns.size());
    for (int i = 0; i < leftover; ++i)
        units.push_back({UnitKind::SingleVertex, 0, DegreeConstraint::None});
    for (const auto& u : cover_to_units(dec.r_cover)) units.push_back(u);
    return units;
}

std::vector<VertexSet> independent_subsets(const HostGraph& g, int size) {
    std::vector<VertexSet> out;
    VertexSet current;
    std::function<void(int)> extend = [&](int from) {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            if (out.size() > kFamilySizeGuard)
                throw ResourceLimitError("independent subset family exceeds size guard");
            return;
        }
        for (int v = from; v < g.n; ++v) {
            bool ok = true;
            for (int u : current)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            extend(v + 1);
            current.pop_back();
        }
    };
    if (size == 0) return {{}};
    extend(0);
    return out;
}

long long isqrt_threshold(const HostGraph& g) { return isqrt_floor(g.m()); }

// ---------------------------------------------------------------- basic

SolveResult solve_basic(const HostGraph& g, const Pattern& p, const PatternDecomposition& dec,
                        SolveStats& stats) {
    SolveResult res;
    auto predicate = pattern_predicate(g, p);
    VertexSet everyone = all_vertices(g);

    if (dec.rho >= 0) {
        res.route = "basic-S-nonempty";
        SplitPlan plan = plan_split(dec, SplitScenario::SNonEmpty, std::nullopt);
        DominationTask task;
        task.targets = everyone;
        task.family_a = enumerate_units(g, plan.b1_units, "b1");
        task.family_b = enumerate_units(g, plan.b2_units, "b2");
        task.predicate = predicate;
        stats.counters["family_a"] += static_cast<long long>(task.family_a.members.size());
        stats.counters["family_b"] += static_cast<long long>(task.family_b.members.size());
        ++stats.counters["tasks"];
        auto hits = solve_task(g, task);
        if (!hits.empty()) {
            res.found = true;
            res.witness = hits.front();
        }
        return res;
    }

    res.route = "basic-S-empty";
    long long t = isqrt_threshold(g);
    VertexSet heavy = heavy_vertices(g, p.k);
    stats.counters["heavy_vertices"] = static_cast<long long>(heavy.size());
    for (int v_h : heavy) {
        // targets left after the heavy vertex covers its neighborhood
        long long uncovered = 0;
        std::vector<char> in_nh(g.n, 0);
        in_nh[v_h] = 1;
        for (int u : g.adj[v_h]) in_nh[u] = 1;
        for (int y = 0; y < g.n; ++y)
            if (!in_nh[y]) ++uncovered;

        for (const auto& [x, cover] : dec.r_cover_minus) {
            bool cycles_only =
                std::all_of(cover.begin(), cover.end(),
                            [](const CoverComponent& c) { return c.kind == CoverKind::OddCycle; });
            SplitScenario scenario = cycles_only && !cover.empty()
                                         ? SplitScenario::SEmptyCyclesOnly
                                         : SplitScenario::SEmptyWithEdges;
            if (cover.empty()) scenario = SplitScenario::SEmptyCyclesOnly;
            SplitPlan plan = plan_split(dec, scenario, x);

            struct ScenarioRun {
                DegreeConstraint constraint;
                const char* label;
                bool skip;
            };
            // all-low remainder first, then the unconstrained run that
            // also admits a high-degree vertex in the remainder
            bool skip_all_low =
                cycles_only && uncovered > static_cast<long long>(p.k - 1) * (t + 1);
            ScenarioRun runs[2] = {{DegreeConstraint::AllLow, "basic-a", skip_all_low},
                                   {DegreeConstraint::None, "basic-b", false}};
            for (const auto& run : runs) {
                if (run.skip) {
                    ++stats.counters["basic_early_exits"];
                    continue;
                }
                auto b1 = with_constraint(plan.b1_units, run.constraint);
                auto b2 = with_constraint(plan.b2_units, run.constraint);
                DominationTask task;
                task.targets = everyone;
                task.family_a =
                    side_family(g, b1, plan.heavy_side == 0 ? std::optional<int>(v_h) : std::nullopt,
                                "b1");
                task.family_b =
                    side_family(g, b2, plan.heavy_side == 1 ? std::optional<int>(v_h) : std::nullopt,
                                "b2");
                task.predicate = predicate;
                ++stats.counters["tasks"];
                auto hits = solve_task(g, task);
                if (!hits.empty()) {
                    res.found = true;
                    res.witness = hits.front();
                    stats.case_labels.push_back(run.label);
                    return res;
                }
            }
        }
    }
    return res;
}

// ------------------------------------------------------------- triangle

struct Layers {
    bool ok = false;  // every vertex within distance 2
    VertexSet x1, x2;
};

Layers bfs_two_layers(const HostGraph& g, int root) {
    Layers layers;
    std::vector<int> dist(g.n, -1);
    dist[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] >= 2) continue;
        for (int w : g.adj[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    for (int v = 0; v < g.n; ++v) {
        if (dist[v] == -1) return layers;  // unreachable within two hops
        if (dist[v] == 1) layers.x1.push_back(v);
        if (dist[v] == 2) layers.x2.push_back(v);
    }
    layers.ok = true;
    return layers;
}

SolveResult solve_triangle(const HostGraph& g, SolveStats& stats) {
    SolveResult res;
    res.route = "triangle";
    Pattern k3 = Pattern::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    for (int v_h : heavy_vertices(g, 3)) {
        Layers layers = bfs_two_layers(g, v_h);
        if (!layers.ok) continue;
        std::vector<char> in_x1(g.n, 0), in_x2(g.n, 0);
        for (int v : layers.x1) in_x1[v] = 1;
        for (int v : layers.x2) in_x2[v] = 1;

        std::vector<std::pair<int, int>> x1_edges;
        for (auto [a, b] : g.edges)
            if (in_x1[a] && in_x1[b]) x1_edges.emplace_back(a, b);
        if (x1_edges.empty()) continue;

        auto report = [&](int a, int b) {
            VertexSet d = sorted_union({std::min(a, b), std::max(a, b)}, {v_h});
            std::sort(d.begin(), d.end());
            if (!is_dominating(g, d) || !induces_pattern(g, d, k3)) return false;
            res.found = true;
            res.witness = Witness{d};
            return true;
        };

        if (layers.x2.empty()) {
            if (report(x1_edges.front().first, x1_edges.front().second)) return res;
            continue;
        }

        // tripartite expansion: two copies of X1 and one of X2; counting
        // triangles through an (a, b-copy) edge yields |N2(a) ∩ N2(b)|
        int a_size = static_cast<int>(layers.x1.size());
        int b_size = static_cast<int>(layers.x2.size());
        std::vector<int> x1_index(g.n, -1), x2_index(g.n, -1);
        for (int i = 0; i < a_size; ++i) x1_index[layers.x1[i]] = i;
        for (int i = 0; i < b_size; ++i) x2_index[layers.x2[i]] = i;

        std::vector<std::pair<int, int>> tri_edges;
        for (auto [a, b] : x1_edges) {
            tri_edges.emplace_back(x1_index[a], a_size + x1_index[b]);
            tri_edges.emplace_back(x1_index[b], a_size + x1_index[a]);
        }
        for (int u : layers.x1)
            for (int y : g.adj[u])
                if (in_x2[y]) {
                    tri_edges.emplace_back(x1_index[u], 2 * a_size + x2_index[y]);
                    tri_edges.emplace_back(a_size + x1_index[u], 2 * a_size + x2_index[y]);
                }
        HostGraph tri = HostGraph::from_edges(2 * a_size + b_size, std::move(tri_edges));
        VertexSet part1(a_size), part2(a_size), part3(b_size);
        for (int i = 0; i < a_size; ++i) part1[i] = i;
        for (int i = 0; i < a_size; ++i) part2[i] = a_size + i;
        for (int i = 0; i < b_size; ++i) part3[i] = 2 * a_size + i;
        auto counts = all_edges_triangle_count(tri, part1, part2, part3);
        ++stats.counters["triangle_count_calls"];

        std::vector<int> n2(g.n, 0);
        for (int u : layers.x1)
            for (int y : g.adj[u])
                if (in_x2[y]) ++n2[u];

        for (auto [a, b] : x1_edges) {
            auto it = counts.find({x1_index[a], a_size + x1_index[b]});
            long long inter = it == counts.end() ? 0 : it->second;
            if (n2[a] + n2[b] - inter == b_size) {
                if (report(a, b)) return res;
            }
        }
    }
    return res;
}

// ------------------------------------------------- triangle counting

long long cbrt_floor(long long x) {
    long long r = static_cast<long long>(std::cbrt(static_cast<double>(x)));
    while (r > 0 && r * r * r > x) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

std::map<std::pair<int, int>, long long> all_edges_triangle_count(const HostGraph& g,
                                                                  const VertexSet& part1,
                                                                  const VertexSet& part2,
                                                                  const VertexSet& part3) {
    std::vector<int> part_of(g.n, -1);
    for (int v : part1) part_of[v] = 0;
    for (int v : part2) part_of[v] = 1;
    for (int v : part3) part_of[v] = 2;
    for (int v = 0; v < g.n; ++v)
        if (part_of[v] == -1) throw std::invalid_argument("vertex missing from the 3-partition");
    if (static_cast<size_t>(g.n) != part1.size() + part2.size() + part3.size())
        throw std::invalid_argument("parts overlap");
    for (auto [u, v] : g.edges)
        if (part_of[u] == part_of[v])
            throw std::invalid_argument("edge inside one part of the declared tripartition");

    std::map<std::pair<int, int>, long long> counts;
    auto key = [&](int u, int v) {
        return part_of[u] == 0 ? std::make_pair(u, v) : std::make_pair(v, u);
    };
    for (auto [u, v] : g.edges)
        if (part_of[u] != 2 && part_of[v] != 2 && part_of[u] != part_of[v]) counts[key(u, v)] = 0;

    long long tau = cbrt_floor(g.m());
    VertexSet heavy3, light3;
    for (int w : part3) (g.degree[w] > tau ? heavy3 : light3).push_back(w);

    // light third-part vertices: merge their neighborhoods directly
    for (int w : light3)
        for (int u : g.adj[w]) {
            if (part_of[u] != 0) continue;
            for (int v : g.adj[w]) {
                if (part_of[v] != 1 || !g.has_edge(u, v)) continue;
                ++counts[{u, v}];
            }
        }

    // heavy third-part vertices: one count product covers all of them
    if (!heavy3.empty()) {
        std::vector<int> idx1(g.n, -1), idx2(g.n, -1), idxh(g.n, -1);
        for (size_t i = 0; i < part1.size(); ++i) idx1[part1[i]] = static_cast<int>(i);
        for (size_t i = 0; i < part2.size(); ++i) idx2[part2[i]] = static_cast<int>(i);
        for (size_t i = 0; i < heavy3.size(); ++i) idxh[heavy3[i]] = static_cast<int>(i);
        BitMatrix a(static_cast<int>(part1.size()), static_cast<int>(heavy3.size()));
        BitMatrix b(static_cast<int>(heavy3.size()), static_cast<int>(part2.size()));
        for (int w : heavy3)
            for (int u : g.adj[w]) {
                if (part_of[u] == 0) a.set(idx1[u], idxh[w]);
                if (part_of[u] == 1) b.set(idxh[w], idx2[u]);
            }
        CountMatrix prod = product_count(a, b);
        for (auto& [edge, count] : counts) count += prod.at(idx1[edge.first], idx2[edge.second]);
    }
    return counts;
}

namespace {

// ------------------------------------------------------------------- k4

struct K4Context {
    const HostGraph& g;
    int v_h;
    VertexSet x1, x2;
    std::vector<char> in_x1, in_x2;
    VertexSet vh_set, vl_set;  // high/low split of X1 by the sqrt(m) threshold
};

std::optional<VertexSet> k4_accept(const K4Context& ctx, int a, int b, int c) {
    const HostGraph& g = ctx.g;
    VertexSet tri{a, b, c};
    std::sort(tri.begin(), tri.end());
    if (tri[0] == tri[1] || tri[1] == tri[2]) return std::nullopt;
    for (int v : tri)
        if (!ctx.in_x1[v]) return std::nullopt;
    if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) return std::nullopt;
    VertexSet d = insert_vertex(tri, ctx.v_h);
    Pattern k4 = Pattern::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (!is_dominating(g, d) || !induces_pattern(g, d, k4)) return std::nullopt;
    return d;
}

std::optional<VertexSet> k4_case_small(const K4Context& ctx, SolveStats& stats) {
    const HostGraph& g = ctx.g;
    long long n_x2 = static_cast<long long>(ctx.x2.size());

    CandidateFamily x1_edges;
    x1_edges.tag = "x1-edges";
    for (auto [a, b] : g.edges)
        if (ctx.in_x1[a] && ctx.in_x1[b]) x1_edges.members.push_back({a, b});

    auto triangle_pred = [&](const VertexSet& d) {
        return d.size() == 3 && g.has_edge(d[0], d[1]) && g.has_edge(d[0], d[2]) &&
               g.has_edge(d[1], d[2]);
    };

    // one high member plus any edge of X1
    {
        DominationTask task;
        task.targets = ctx.x2;
        task.family_a.tag = "x1-high-single";
        for (int u : ctx.vh_set) task.family_a.members.push_back({u});
        task.family_b = x1_edges;
        task.predicate = triangle_pred;
        ++stats.counters["tasks"];
        for (const auto& hit : solve_task(g, task)) {
            auto d = k4_accept(ctx, hit.vertices[0], hit.vertices[1], hit.vertices[2]);
            if (d) {
                stats.case_labels.push_back("k4-small-x2");
                return d;
            }
        }
    }
    // all-low triangle: some member covers a third of X2
    std::vector<char> low(g.n, 0);
    for (int u : ctx.vl_set) low[u] = 1;
    for (int u : ctx.vl_set) {
        if (3ll * g.degree[u] < n_x2) continue;
        DominationTask task;
        task.targets = ctx.x2;
        task.family_a.tag = "low-anchor";
        task.family_a.members.push_back({u});
        task.family_b.tag = "low-low-edges";
        for (int a : g.adj[u]) {
            if (!low[a] || !ctx.in_x1[a]) continue;
            for (int b : g.adj[u]) {
                if (b <= a || !low[b] || !ctx.in_x1[b] || !g.has_edge(a, b)) continue;
                task.family_b.members.push_back({a, b});
            }
        }
        if (task.family_b.members.empty()) continue;
        task.predicate = triangle_pred;
        ++stats.counters["tasks"];
        for (const auto& hit : solve_task(g, task)) {
            auto d = k4_accept(ctx, hit.vertices[0], hit.vertices[1], hit.vertices[2]);
            if (d) {
                stats.case_labels.push_back("k4-small-x2");
                return d;
            }
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> k4_case_i0(const K4Context& ctx, SolveStats& stats) {
    const HostGraph& g = ctx.g;
    int n_x2 = static_cast<int>(ctx.x2.size());
    const VertexSet& vh = ctx.vh_set;
    int h = static_cast<int>(vh.size());
    if (h < 3) return std::nullopt;

    std::vector<int> idxh(g.n, -1), idx2(g.n, -1);
    for (int i = 0; i < h; ++i) idxh[vh[i]] = i;
    for (int i = 0; i < n_x2; ++i) idx2[ctx.x2[i]] = i;

    // per-vertex coverage of X2
    std::vector<int> n2(g.n, 0);
    BitMatrix nmask(h, std::max(1, n_x2));
    for (int i = 0; i < h; ++i)
        for (int y : g.adj[vh[i]])
            if (ctx.in_x2[y]) {
                nmask.set(i, idx2[y]);
                ++n2[vh[i]];
            }

    // pairwise intersections via tripartite triangle counting on two
    // copies of the high side
    std::vector<std::pair<int, int>> hi_edges;
    for (auto [a, b] : g.edges)
        if (idxh[a] >= 0 && idxh[b] >= 0) hi_edges.emplace_back(a, b);
    if (hi_edges.empty()) return std::nullopt;

    std::vector<std::pair<int, int>> tri_edges;
    for (auto [a, b] : hi_edges) {
        tri_edges.emplace_back(idxh[a], h + idxh[b]);
        tri_edges.emplace_back(idxh[b], h + idxh[a]);
    }
    for (int i = 0; i < h; ++i)
        for (int y : g.adj[vh[i]])
            if (ctx.in_x2[y]) {
                tri_edges.emplace_back(idxh[vh[i]], 2 * h + idx2[y]);
                tri_edges.emplace_back(h + idxh[vh[i]], 2 * h + idx2[y]);
            }
    HostGraph tri = HostGraph::from_edges(2 * h + n_x2, std::move(tri_edges));
    VertexSet p1(h), p2(h), p3(n_x2);
    for (int i = 0; i < h; ++i) p1[i] = i;
    for (int i = 0; i < h; ++i) p2[i] = h + i;
    for (int i = 0; i < n_x2; ++i) p3[i] = 2 * h + i;
    auto pair_counts = all_edges_triangle_count(tri, p1, p2, p3);
    ++stats.counters["triangle_count_calls"];
    auto pair_count = [&](int a, int b) {
        auto it = pair_counts.find({idxh[a], h + idxh[b]});
        return it == pair_counts.end() ? 0ll : it->second;
    };

    // triple intersections: rows are adjacent high pairs, columns high
    // vertices, inner dimension X2
    BitMatrix rows(static_cast<int>(hi_edges.size()), std::max(1, n_x2));
    for (size_t r = 0; r < hi_edges.size(); ++r) {
        auto [a, b] = hi_edges[r];
        const uint64_t* ra = nmask.row(idxh[a]);
        const uint64_t* rb = nmask.row(idxh[b]);
        for (int w = 0; w < nmask.words_per_row(); ++w)
            rows.row(static_cast<int>(r))[w] = ra[w] & rb[w];
    }
    BitMatrix cols(std::max(1, n_x2), h);
    for (int i = 0; i < h; ++i)
        for (int y : g.adj[vh[i]])
            if (ctx.in_x2[y]) cols.set(idx2[y], i);
    CountMatrix triple = product_count(rows, cols);

    for (size_t r = 0; r < hi_edges.size(); ++r) {
        auto [a, b] = hi_edges[r];
        for (int ci = 0; ci < h; ++ci) {
            int c = vh[ci];
            if (c <= b) continue;  // enumerate each triangle once (a < b < c)
            if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
            long long covered = static_cast<long long>(n2[a]) + n2[b] + n2[c] - pair_count(a, b) -
                                pair_count(a, c) - pair_count(b, c) +
                                triple.at(static_cast<int>(r), ci);
            if (covered == n_x2) {
                auto d = k4_accept(ctx, a, b, c);
                if (d) {
                    stats.case_labels.push_back("k4-i0");
                    return d;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> k4_case_i1a(const K4Context& ctx, const MaxEntryMode& mode,
                                     SolveStats& stats) {
    const HostGraph& g = ctx.g;
    long long n_x2 = static_cast<long long>(ctx.x2.size());
    long long two_m = 2ll * g.m();
    std::vector<int> idx2(g.n, -1);
    for (size_t i = 0; i < ctx.x2.size(); ++i) idx2[ctx.x2[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> hi_edges;
    std::vector<char> is_high(g.n, 0);
    for (int v : ctx.vh_set) is_high[v] = 1;
    for (auto [a, b] : g.edges)
        if (is_high[a] && is_high[b]) hi_edges.emplace_back(a, b);
    VertexSet cols_u;
    for (int u : ctx.vl_set)
        if (n_x2 * g.degree[u] >= two_m) cols_u.push_back(u);
    if (hi_edges.empty() || cols_u.empty()) return std::nullopt;

    int inner = std::max(1, static_cast<int>(ctx.x2.size()));
    BitMatrix b(static_cast<int>(hi_edges.size()), inner);
    for (size_t r = 0; r < hi_edges.size(); ++r) {
        auto [v, w] = hi_edges[r];
        for (int y : ctx.x2)
            if (!g.has_edge(y, v) && !g.has_edge(y, w)) b.set(static_cast<int>(r), idx2[y]);
    }
    BitMatrix c(inner, static_cast<int>(cols_u.size()));
    for (size_t j = 0; j < cols_u.size(); ++j)
        for (int y : g.adj[cols_u[j]])
            if (ctx.in_x2[y]) c.set(idx2[y], static_cast<int>(j));

    ++stats.counters["max_entry_calls"];
    for (auto [r, j] : max_entry_product(b, c, mode)) {
        auto [v, w] = hi_edges[r];
        int u = cols_u[j];
        if (!g.has_edge(u, v) || !g.has_edge(u, w)) continue;
        auto d = k4_accept(ctx, u, v, w);
        if (d) {
            stats.case_labels.push_back("k4-i1a");
            return d;
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> k4_case_i1b(const K4Context& ctx, const MaxEntryMode& mode,
                                     SolveStats& stats) {
    const HostGraph& g = ctx.g;
    long long n_x2 = static_cast<long long>(ctx.x2.size());
    long long two_m = 2ll * g.m();
    long long t = isqrt_threshold(g);
    std::vector<char> low(g.n, 0);
    for (int u : ctx.vl_set) low[u] = 1;

    long long max_deg = 0;
    for (int w : ctx.vh_set) max_deg = std::max<long long>(max_deg, g.degree[w]);

    for (long long t_b = std::max<long long>(1, t); t_b <= max_deg; t_b *= 2) {
        for (int w : ctx.vh_set) {
            if (g.degree[w] < t_b || g.degree[w] >= 2 * t_b) continue;
            VertexSet x2w;  // targets the bucketed high vertex leaves open
            for (int y : ctx.x2)
                if (!g.has_edge(y, w)) x2w.push_back(y);
            VertexSet cols_u;
            for (int u : g.adj[w])
                if (low[u] && n_x2 * g.degree[u] <= two_m) cols_u.push_back(u);
            if (cols_u.empty()) continue;

            std::vector<int> idx(g.n, -1);
            for (size_t i = 0; i < x2w.size(); ++i) idx[x2w[i]] = static_cast<int>(i);
            int inner = std::max(1, static_cast<int>(x2w.size()));
            BitMatrix b(static_cast<int>(ctx.vh_set.size()), inner);
            for (size_t r = 0; r < ctx.vh_set.size(); ++r)
                for (int y : x2w)
                    if (!g.has_edge(y, ctx.vh_set[r])) b.set(static_cast<int>(r), idx[y]);
            BitMatrix c(inner, static_cast<int>(cols_u.size()));
            for (size_t j = 0; j < cols_u.size(); ++j)
                for (int y : g.adj[cols_u[j]])
                    if (idx[y] >= 0) c.set(idx[y], static_cast<int>(j));

            ++stats.counters["max_entry_calls"];
            for (auto [r, j] : max_entry_product(b, c, mode)) {
                int v = ctx.vh_set[r];
                int u = cols_u[j];
                if (v == w || !g.has_edge(v, w) || !g.has_edge(u, v)) continue;
                auto d = k4_accept(ctx, u, v, w);
                if (d) {
                    stats.case_labels.push_back("k4-i1b");
                    return d;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> k4_case_i2(const K4Context& ctx, const MaxEntryMode& mode,
                                    SolveStats& stats) {
    const HostGraph& g = ctx.g;
    std::vector<char> low(g.n, 0);
    for (int u : ctx.vl_set) low[u] = 1;
    std::vector<std::pair<int, int>> low_edges;
    for (auto [a, b] : g.edges)
        if (low[a] && low[b] && ctx.in_x1[a] && ctx.in_x1[b]) low_edges.emplace_back(a, b);
    if (low_edges.empty() || ctx.vh_set.empty()) return std::nullopt;

    std::vector<int> idx2(g.n, -1);
    for (size_t i = 0; i < ctx.x2.size(); ++i) idx2[ctx.x2[i]] = static_cast<int>(i);
    int inner = std::max(1, static_cast<int>(ctx.x2.size()));

    BitMatrix b(static_cast<int>(ctx.vh_set.size()), inner);
    for (size_t r = 0; r < ctx.vh_set.size(); ++r)
        for (int y : ctx.x2)
            if (!g.has_edge(y, ctx.vh_set[r])) b.set(static_cast<int>(r), idx2[y]);
    BitMatrix c(inner, static_cast<int>(low_edges.size()));
    for (size_t j = 0; j < low_edges.size(); ++j) {
        auto [u, v] = low_edges[j];
        for (int y : g.adj[u])
            if (idx2[y] >= 0) c.set(idx2[y], static_cast<int>(j));
        for (int y : g.adj[v])
            if (idx2[y] >= 0) c.set(idx2[y], static_cast<int>(j));
    }

    ++stats.counters["max_entry_calls"];
    for (auto [r, j] : max_entry_product(b, c, mode)) {
        int w = ctx.vh_set[r];
        auto [u, v] = low_edges[j];
        if (!g.has_edge(w, u) || !g.has_edge(w, v)) continue;
        auto d = k4_accept(ctx, u, v, w);
        if (d) {
            stats.case_labels.push_back("k4-i2");
            return d;
        }
    }
    return std::nullopt;
}

SolveResult solve_k4(const HostGraph& g, const SolveOptions& options, SolveStats& stats) {
    SolveResult res;
    res.route = "k4";
    long long t = isqrt_threshold(g);
    MaxEntryMode mode =
        options.exact ? MaxEntryMode::exact() : MaxEntryMode::with_hashing(options.seed);

    for (int v_h : heavy_vertices(g, 4)) {
        Layers layers = bfs_two_layers(g, v_h);
        if (!layers.ok) continue;
        K4Context ctx{g, v_h, layers.x1, layers.x2, std::vector<char>(g.n, 0),
                      std::vector<char>(g.n, 0)};
        for (int v : ctx.x1) ctx.in_x1[v] = 1;
        for (int v : ctx.x2) ctx.in_x2[v] = 1;
        for (int v : ctx.x1) (g.degree[v] > t ? ctx.vh_set : ctx.vl_set).push_back(v);

        std::optional<VertexSet> d;
        if (static_cast<long long>(ctx.x2.size()) <= 3 * t) {
            d = k4_case_small(ctx, stats);
        } else {
            // i = 3 (three low members) cannot cover more than 3*sqrt(m)
            // targets, so only the 0/1/2-low cases run here
            d = k4_case_i0(ctx, stats);
            if (!d) d = k4_case_i1a(ctx, mode, stats);
            if (!d) d = k4_case_i1b(ctx, mode, stats);
            if (!d) d = k4_case_i2(ctx, mode, stats);
        }
        if (d) {
            res.found = true;
            res.witness = Witness{*d};
            return res;
        }
    }
    return res;
}

// ------------------------------------------------------------ isolated

// pattern induced on the given vertices, reindexed in ascending order
Pattern sub_pattern(const Pattern& p, const VertexSet& vertices) {
    std::vector<int> index(p.k, -1);
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : p.edges)
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Pattern::from_edges(static_cast<int>(vertices.size()), std::move(edges));
}

// max-entry task shared by the edge and cycle variants: rows are carrier
// sets (an edge or a cycle), columns are low-degree candidates for the
// isolated vertex; a witness means the column's closed neighborhood
// covers everything the fixed part and the carrier leave open
std::vector<std::pair<int, int>> isolated_carrier_join(const HostGraph& g, const VertexSet& open,
                                                       const std::vector<VertexSet>& carriers,
                                                       const VertexSet& low_columns,
                                                       const MaxEntryMode& mode) {
    if (carriers.empty() || low_columns.empty()) return {};
    std::vector<int> idx(g.n, -1);
    for (size_t i = 0; i < open.size(); ++i) idx[open[i]] = static_cast<int>(i);
    int inner = std::max(1, static_cast<int>(open.size()));
    BitMatrix b(static_cast<int>(carriers.size()), inner);
    std::vector<char> covered(g.n);
    for (size_t r = 0; r < carriers.size(); ++r) {
        std::fill(covered.begin(), covered.end(), 0);
        for (int v : carriers[r]) {
            covered[v] = 1;
            for (int u : g.adj[v]) covered[u] = 1;
        }
        for (int y : open)
            if (!covered[y]) b.set(static_cast<int>(r), idx[y]);
    }
    BitMatrix c(inner, static_cast<int>(low_columns.size()));
    for (size_t j = 0; j < low_columns.size(); ++j) {
        int w = low_columns[j];
        if (idx[w] >= 0) c.set(idx[w], static_cast<int>(j));
        for (int y : g.adj[w])
            if (idx[y] >= 0) c.set(idx[y], static_cast<int>(j));
    }
    return max_entry_product(b, c, mode);
}

VertexSet open_targets(const HostGraph& g, const VertexSet& fixed) {
    std::vector<char> covered(g.n, 0);
    for (int v : fixed) {
        covered[v] = 1;
        for (int u : g.adj[v]) covered[u] = 1;
    }
    VertexSet out;
    for (int y = 0; y < g.n; ++y)
        if (!covered[y]) out.push_back(y);
    return out;
}

SolveResult solve_isolated(const HostGraph& g, const Pattern& p, const PatternDecomposition& dec,
                           const SolveOptions& options, SolveStats& stats) {
    SolveResult res;
    int r = static_cast<int>(p.isolated.size());
    res.route = r == 1 ? "isolated-r=1" : "isolated-r>=2";
    auto predicate = pattern_predicate(g, p);
    VertexSet everyone = all_vertices(g);
    VertexSet heavy = heavy_vertices(g, p.k);
    long long t = isqrt_threshold(g);
    MaxEntryMode mode =
        options.exact ? MaxEntryMode::exact() : MaxEntryMode::with_hashing(options.seed);

    auto finish = [&](VertexSet d, const char* label) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        if (static_cast<int>(d.size()) != p.k) return false;
        if (!is_dominating(g, d) || !induces_pattern(g, d, p)) return false;
        res.found = true;
        res.witness = Witness{d};
        stats.case_labels.push_back(label);
        return true;
    };

    if (r == p.k) {
        // pure independent pattern: a lone vertex must be heavy to
        // dominate on its own; larger patterns split into two halves with
        // the heavy vertex forced into the second
        DominationTask task;
        task.targets = everyone;
        task.predicate = predicate;
        if (p.k == 1) {
            task.family_a.tag = "heavy-singles";
            for (int h : heavy) task.family_a.members.push_back({h});
            task.family_b.tag = "empty";
            task.family_b.members.push_back({});
        } else {
            task.family_a.tag = "is-half-a";
            task.family_a.members = independent_subsets(g, (p.k + 1) / 2);
            task.family_b.tag = "is-half-b+heavy";
            std::vector<char> is_heavy(g.n, 0);
            for (int h : heavy) is_heavy[h] = 1;
            for (auto& b : independent_subsets(g, p.k / 2))
                if (std::any_of(b.begin(), b.end(), [&](int v) { return is_heavy[v]; }))
                    task.family_b.members.push_back(std::move(b));
        }
        ++stats.counters["tasks"];
        auto hits = solve_task(g, task);
        if (!hits.empty()) {
            res.found = true;
            res.witness = hits.front();
            stats.case_labels.push_back("pure-independent");
        }
        return res;
    }

    // the non-isolated part and its own decomposition drive enumeration
    VertexSet x_vertices;
    for (int v = 0; v < p.k; ++v)
        if (p.degree(v) > 0) x_vertices.push_back(v);
    Pattern p_x = sub_pattern(p, x_vertices);
    PatternDecomposition dec_x = compute_rho(p_x);

    if (r >= 2) {
        // copies of the non-isolated part, then an r-independent-set join
        // on what they leave open; the heavy vertex sits either in the
        // copy or in the independent remainder
        std::vector<VertexSet> copies;
        for (auto& member : enumerate_units(g, full_pattern_units(dec_x), "px-copies").members)
            if (induces_pattern(g, member, p_x)) copies.push_back(std::move(member));
        stats.counters["px_copies"] = static_cast<long long>(copies.size());

        std::vector<char> is_heavy(g.n, 0);
        for (int h : heavy) is_heavy[h] = 1;
        auto has_heavy = [&](const VertexSet& vs) {
            return std::any_of(vs.begin(), vs.end(), [&](int v) { return is_heavy[v]; });
        };

        auto half_a = independent_subsets(g, (r + 1) / 2);
        auto half_b = independent_subsets(g, r / 2);
        for (int sub_case = 0; sub_case < 2; ++sub_case) {
            DominationTask task;
            task.targets = everyone;
            task.predicate = predicate;
            task.family_a.tag = sub_case == 0 ? "copy+half-a (heavy copy)" : "copy+half-a";
            for (const auto& q : copies) {
                if (sub_case == 0 && !has_heavy(q)) continue;
                for (const auto& a : half_a) {
                    VertexSet merged = sorted_union(q, a);
                    if (static_cast<int>(merged.size()) != static_cast<int>(q.size() + a.size()))
                        continue;
                    task.family_a.members.push_back(std::move(merged));
                    if (task.family_a.members.size() > kFamilySizeGuard)
                        throw ResourceLimitError("isolated-vertex family exceeds size guard");
                }
            }
            task.family_b.tag = sub_case == 0 ? "half-b" : "half-b+heavy";
            for (const auto& b : half_b)
                if (sub_case == 1 ? has_heavy(b) : true) task.family_b.members.push_back(b);
            ++stats.counters["tasks"];
            auto hits = solve_task(g, task);
            if (!hits.empty()) {
                res.found = true;
                res.witness = hits.front();
                stats.case_labels.push_back(sub_case == 0 ? "heavy-in-copy" : "heavy-in-remainder");
                return res;
            }
        }
        return res;
    }

    // r == 1: x's image is either high degree (or heavy), joined
    // directly, or low degree, reached through an edge or cycle carrier
    {
        DominationTask task;
        task.targets = everyone;
        task.predicate = predicate;
        task.family_a = enumerate_units(g, full_pattern_units(dec_x), "px-placements");
        task.family_b.tag = "high-or-heavy-singles";
        std::vector<char> is_heavy(g.n, 0);
        for (int h : heavy) is_heavy[h] = 1;
        for (int w = 0; w < g.n; ++w)
            if (g.degree[w] > t || is_heavy[w]) task.family_b.members.push_back({w});
        ++stats.counters["tasks"];
        auto hits = solve_task(g, task);
        if (!hits.empty()) {
            res.found = true;
            res.witness = hits.front();
            stats.case_labels.push_back("r1-high-direct");
            return res;
        }
    }

    VertexSet low_columns;
    for (int w = 0; w < g.n; ++w)
        if (g.degree[w] <= t) low_columns.push_back(w);

    std::vector<VertexSet> all_edge_sets;
    for (auto [a, b] : g.edges) all_edge_sets.push_back({a, b});

    if (dec.rho >= 0) {
        // consume the first matching edge together with the isolated
        // vertex; enumerate the rest of the pattern as the fixed part
        std::vector<CoverUnit> units;
        for (size_t i = 1; i < dec.matching.size(); ++i)
            units.push_back({UnitKind::Edge, 0, DegreeConstraint::None});
        int leftover = static_cast<int>(dec.s.size()) - static_cast<int>(dec.ns.size());
        for (int i = 0; i < leftover; ++i)
            units.push_back({UnitKind::SingleVertex, 0, DegreeConstraint::None});
        for (const auto& u : cover_to_units(dec.r_cover)) units.push_back(u);

        for (auto& q : enumerate_units(g, units, "r1-fixed-part").members) {
            VertexSet open = open_targets(g, q);
            ++stats.counters["max_entry_calls"];
            for (auto [ei, wj] : isolated_carrier_join(g, open, all_edge_sets, low_columns, mode)) {
                VertexSet d = sorted_union(q, all_edge_sets[ei]);
                d = insert_vertex(d, low_columns[wj]);
                if (finish(d, "r1-low-edge")) return res;
            }
        }
        return res;
    }

    // S empty: the heavy vertex plays some non-isolated pattern role; the
    // cover of the remainder donates an edge or a cycle as the carrier
    for (int v_h : heavy) {
        for (const auto& [u_role, cover] : dec_x.r_cover_minus) {
            auto edge_it = std::find_if(cover.begin(), cover.end(), [](const CoverComponent& c) {
                return c.kind == CoverKind::Edge;
            });
            std::vector<CoverUnit> units;
            std::vector<VertexSet> carriers;
            const char* label;
            if (edge_it != cover.end()) {
                for (const auto& comp : cover)
                    if (&comp != &*edge_it) {
                        if (comp.kind == CoverKind::Edge)
                            units.push_back({UnitKind::Edge, 0, DegreeConstraint::None});
                        else
                            units.push_back({UnitKind::OddCycle,
                                             static_cast<int>(comp.vertices.size()),
                                             DegreeConstraint::None});
                    }
                carriers = all_edge_sets;
                label = "r1-low-edge";
            } else {
                if (cover.empty()) continue;
                int length = static_cast<int>(cover.front().vertices.size());
                for (size_t i = 1; i < cover.size(); ++i)
                    units.push_back({UnitKind::OddCycle,
                                     static_cast<int>(cover[i].vertices.size()),
                                     DegreeConstraint::None});
                carriers = enumerate_odd_cycles(g, length, CycleSplit::Both).members;
                label = "r1-low-cycle";
            }
            for (auto& placement : enumerate_units(g, units, "r1-s-empty-fixed").members) {
                if (contains(placement, v_h)) continue;
                VertexSet q = insert_vertex(placement, v_h);
                VertexSet open = open_targets(g, q);
                ++stats.counters["max_entry_calls"];
                for (auto [ci, wj] : isolated_carrier_join(g, open, carriers, low_columns, mode)) {
                    VertexSet d = sorted_union(q, carriers[ci]);
                    d = insert_vertex(d, low_columns[wj]);
                    if (finish(d, label)) return res;
                }
            }
        }
    }
    return res;
}

Pattern clique_pattern(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Pattern::from_edges(k, std::move(edges));
}

}  // namespace

SolveResult solve(const HostGraph& g, const Pattern& p, const SolveOptions& options) {
    auto start = std::chrono::steady_clock::now();
    PatternDecomposition dec = compute_rho(p);

    SolveResult res;
    SolveStats stats;
    if (!p.isolated.empty()) {
        res = solve_isolated(g, p, dec, options, stats);
    } else if (p.k == 3 && pattern_canonical(p) == pattern_canonical(clique_pattern(3))) {
        res = solve_triangle(g, stats);
    } else if (p.k == 4 && pattern_canonical(p) == pattern_canonical(clique_pattern(4))) {
        res = solve_k4(g, options, stats);
    } else {
        res = solve_basic(g, p, dec, stats);
    }
    res.stats = std::move(stats);

    if (res.found) verify_witness(g, p, *res.witness);
    res.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<Pattern> edge_superset_closure(const Pattern& p) {
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < p.k; ++u)
        for (int v = u + 1; v < p.k; ++v)
            if (!p.has_edge(u, v)) missing.emplace_back(u, v);
    if (missing.size() > 20)
        throw ResourceLimitError("closure over " + std::to_string(missing.size()) +
                                 " absent edges is too large");
    std::map<uint64_t, Pattern> dedup;
    for (uint32_t mask = 0; mask < (1u << missing.size()); ++mask) {
        std::vector<std::pair<int, int>> edges = p.edges;
        for (size_t i = 0; i < missing.size(); ++i)
            if ((mask >> i) & 1u) edges.push_back(missing[i]);
        Pattern q = Pattern::from_edges(p.k, std::move(edges));
        dedup.emplace(pattern_canonical(q), std::move(q));
    }
    std::vector<Pattern> out;
    for (auto& [key, q] : dedup) out.push_back(std::move(q));
    return out;
}

SolveResult solve_pattern_set(const HostGraph& g, const PatternSet& ps,
                              const SolveOptions& options) {
    if (ps.members.empty()) throw std::invalid_argument("empty pattern set");
    int k = ps.members.front().k;
    for (const Pattern& p : ps.members)
        if (p.k != k) throw std::invalid_argument("pattern set members differ in order");

    auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<double, int>> order;
    for (size_t i = 0; i < ps.members.size(); ++i)
        order.emplace_back(budget(ps.members[i], std::max(g.n, 1), std::max(g.m(), 1)).value,
                           static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    SolveResult res;
    res.route = "pattern-set";
    for (auto [value, index] : order) {
        SolveResult member_res = solve(g, ps.members[index], options);
        res.stats.counters["members_tried"]++;
        if (member_res.found) {
            res.found = true;
            res.witness = member_res.witness;
            res.matched_member = index;
            res.stats.case_labels = member_res.stats.case_labels;
            break;
        }
    }
    res.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

SolveResult solve_subgraph(const HostGraph& g, const Pattern& p, const SolveOptions& options) {
    PatternSet closure{edge_superset_closure(p)};
    return solve_pattern_set(g, closure, options);
}

}  // namespace domset
