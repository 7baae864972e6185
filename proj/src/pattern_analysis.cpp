#include "domset/pattern_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

namespace domset {

namespace {

VertexSet mask_to_set(uint32_t mask) {
    VertexSet out;
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

uint32_t neighborhood_mask(const Pattern& p, uint32_t mask) {
    uint32_t nb = 0;
    for (uint32_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        nb |= p.adj_mask[v];
    }
    return nb;
}

bool is_independent(const Pattern& p, uint32_t mask) {
    return (neighborhood_mask(p, mask) & mask) == 0;
}

}  // namespace

PatternDecomposition compute_rho(const Pattern& p) {
    uint32_t isolated_mask = 0;
    for (int v : p.isolated) isolated_mask |= 1u << v;
    uint32_t eligible = ((p.k == 32 ? ~0u : (1u << p.k) - 1)) & ~isolated_mask;

    uint32_t best_mask = 0;
    int best_value = std::numeric_limits<int>::min();
    int best_size = -1;
    for (uint32_t mask = 1; mask < (1u << p.k); ++mask) {
        if (mask & ~eligible) continue;
        if (!is_independent(p, mask)) continue;
        int size = std::popcount(mask);
        int value = size - std::popcount(neighborhood_mask(p, mask));
        bool better = value > best_value || (value == best_value && size > best_size);
        if (!better && value == best_value && size == best_size)
            better = mask_to_set(mask) < mask_to_set(best_mask);
        if (better) {
            best_value = value;
            best_size = size;
            best_mask = mask;
        }
    }

    PatternDecomposition dec;
    // a nonempty maximizer only counts if its value is nonnegative;
    // otherwise S is empty and rho = -1
    if (best_size <= 0 || best_value < 0) {
        dec.rho = -1;
        best_mask = 0;
    } else {
        dec.rho = best_value;
    }
    uint32_t ns_mask = neighborhood_mask(p, best_mask) & ~best_mask;
    uint32_t r_mask = ((p.k == 32 ? ~0u : (1u << p.k) - 1)) & ~best_mask & ~ns_mask;
    dec.s = mask_to_set(best_mask);
    dec.ns = mask_to_set(ns_mask);
    dec.r = mask_to_set(r_mask);
    dec.matching = hall_matching(p, dec.s, dec.ns);

    VertexSet r_prime;
    for (int v : dec.r)
        if (!(isolated_mask & (1u << v))) r_prime.push_back(v);
    auto cover = edge_cycle_cover(p, r_prime, std::nullopt);
    if (!cover)
        throw std::logic_error("remainder of a maximal decomposition has no edge/odd-cycle cover");
    dec.r_cover = std::move(*cover);
    for (int x : r_prime) {
        auto minus = edge_cycle_cover(p, r_prime, x);
        if (!minus)
            throw std::logic_error("remainder minus one vertex has no edge/odd-cycle cover");
        dec.r_cover_minus[x] = std::move(*minus);
    }
    return dec;
}

std::vector<std::pair<int, int>> hall_matching(const Pattern& p, const VertexSet& s,
                                               const VertexSet& ns) {
    // augmenting-path matching in the bipartite graph between s and ns,
    // required to saturate every ns-vertex
    std::vector<int> match_s(s.size(), -1);   // index into ns
    std::vector<int> match_ns(ns.size(), -1);  // index into s

    auto adjacent = [&](int si, int ti) { return p.has_edge(s[si], ns[ti]); };

    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int ti) -> bool {
        for (size_t si = 0; si < s.size(); ++si) {
            if (visited[si] || !adjacent(static_cast<int>(si), ti)) continue;
            visited[si] = 1;
            if (match_s[si] == -1 || augment(match_s[si])) {
                match_s[si] = ti;
                match_ns[ti] = static_cast<int>(si);
                return true;
            }
        }
        return false;
    };

    for (size_t ti = 0; ti < ns.size(); ++ti) {
        visited.assign(s.size(), 0);
        if (!augment(static_cast<int>(ti)))
            throw std::logic_error("no matching saturating the neighborhood side exists");
    }
    std::vector<std::pair<int, int>> out;
    for (size_t ti = 0; ti < ns.size(); ++ti) out.emplace_back(s[match_ns[ti]], ns[ti]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct CoverSearch {
    const Pattern& p;
    std::vector<int> verts;  // the vertex set to cover, sorted
    uint32_t target = 0;
    std::vector<CoverComponent> current;
    std::optional<std::vector<CoverComponent>> found;

    void run() { extend(0); }

    void extend(uint32_t covered) {
        if (found) return;
        if (covered == target) {
            found = current;
            return;
        }
        int v = -1;
        for (int u : verts)
            if (!(covered & (1u << u))) {
                v = u;
                break;
            }
        // edges through v
        for (int u : verts) {
            if (u == v || (covered & (1u << u)) || !p.has_edge(v, u)) continue;
            current.push_back({CoverKind::Edge, {std::min(v, u), std::max(v, u)}});
            extend(covered | (1u << v) | (1u << u));
            current.pop_back();
            if (found) return;
        }
        // odd cycles through v; v is the smallest vertex of the cycle
        std::vector<int> path{v};
        cycles(covered, v, path);
    }

    void cycles(uint32_t covered, int v, std::vector<int>& path) {
        if (found) return;
        int last = path.back();
        if (path.size() >= 3 && path.size() % 2 == 1 && p.has_edge(last, v)) {
            uint32_t used = 0;
            for (int u : path) used |= 1u << u;
            current.push_back({CoverKind::OddCycle, path});
            extend(covered | used);
            current.pop_back();
            if (found) return;
        }
        if (path.size() >= verts.size()) return;
        for (int u : verts) {
            if (u <= v || (covered & (1u << u)) || !p.has_edge(last, u)) continue;
            if (std::find(path.begin(), path.end(), u) != path.end()) continue;
            path.push_back(u);
            cycles(covered, v, path);
            path.pop_back();
            if (found) return;
        }
    }
};

}  // namespace

std::optional<std::vector<CoverComponent>> edge_cycle_cover(const Pattern& p, const VertexSet& r,
                                                            std::optional<int> excluded) {
    CoverSearch search{p};
    for (int v : r)
        if (!excluded || v != *excluded) search.verts.push_back(v);
    for (int v : search.verts) search.target |= 1u << v;
    if (search.verts.empty()) return std::vector<CoverComponent>{};
    search.run();
    return search.found;
}

Budget budget(const PatternDecomposition& dec, int k, long long n, long long m) {
    Budget b;
    b.rho = dec.rho;
    b.k = k;
    b.n_exponent = dec.rho;
    b.m_exponent_num = k - dec.rho;
    b.value = std::pow(static_cast<double>(n), b.n_exponent) *
              std::pow(static_cast<double>(m), b.m_exponent_num / 2.0);
    return b;
}

Budget budget(const Pattern& p, long long n, long long m) {
    return budget(compute_rho(p), p.k, n, m);
}

bool cover_is_valid(const Pattern& p, const std::vector<CoverComponent>& cover,
                    const VertexSet& expected_vertices) {
    uint32_t seen = 0;
    for (const auto& comp : cover) {
        uint32_t comp_mask = 0;
        for (int v : comp.vertices) {
            if (v < 0 || v >= p.k) return false;
            if ((seen | comp_mask) & (1u << v)) return false;
            comp_mask |= 1u << v;
        }
        seen |= comp_mask;
        if (comp.kind == CoverKind::Edge) {
            if (comp.vertices.size() != 2) return false;
            if (!p.has_edge(comp.vertices[0], comp.vertices[1])) return false;
        } else {
            size_t len = comp.vertices.size();
            if (len < 3 || len % 2 == 0) return false;
            for (size_t i = 0; i < len; ++i)
                if (!p.has_edge(comp.vertices[i], comp.vertices[(i + 1) % len])) return false;
        }
    }
    uint32_t expected = 0;
    for (int v : expected_vertices) expected |= 1u << v;
    return seen == expected;
}

}  // namespace domset
